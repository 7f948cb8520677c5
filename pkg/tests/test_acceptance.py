"""Acceptance suite: ten criteria, each run exactly over its configurations.

Each criterion prints one line "criterion N: PASS|FAIL (...)" in the pytest
terminal summary.  Run standalone with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import time

import pytest

from tdaha.verify import Config, run_suite

RESULTS: dict[int, str] = {}

DESK = [("A", 1), ("A", 2), ("B", 2), ("A", 3)]


def parabolics(rank: int) -> list[tuple]:
    idx = range(1, rank + 1)
    return [c for n in range(rank + 1) for c in itertools.combinations(idx, n)]


def all_parabolic(types, **kw) -> list[Config]:
    return [Config(cartan_type=t, rank=r, parabolic=S, **kw) for t, r in types for S in parabolics(r)]


def borel(types, **kw) -> list[Config]:
    return [Config(cartan_type=t, rank=r, **kw) for t, r in types]


CRITERIA: dict[int, list[tuple[str, Config]]] = {
    1: [("tdaha-relations", c) for c in
        borel(DESK + [("G", 2)]) + borel([("A", 1), ("A", 2), ("C", 2)], lattice="coweight")],
    2: [("dl-basis", c) for c in borel(DESK + [("G", 2)], max_length=5)],
    3: [("stab-axioms", c) for c in all_parabolic(DESK + [("G", 2)])],
    4: [("representation", c) for c in all_parabolic(DESK, pairs=100, max_length=3)],
    5: [("springer", c) for c in all_parabolic(DESK, max_coweight=3)],
    6: [("confluent", c) for c in all_parabolic(DESK + [("G", 2)], max_length=5)],
    7: [("peterson", c) for c in all_parabolic([("A", 1), ("A", 2), ("B", 2)], max_coweight=3, pairs=20)],
    8: [("namikawa", c) for c in [Config("A", 2, ()), Config("A", 3, (1, 3))]],
    9: [("spherical", c) for c in borel([("A", 1), ("A", 2)], max_length=3)],
    10: [("combinatorics", c) for c in all_parabolic([("A", 1), ("A", 2), ("B", 2), ("G", 2)],
                                                      max_coweight=3)],
}


def run_criterion(n: int) -> tuple[bool, list[str]]:
    failures = []
    total = 0
    t0 = time.perf_counter()
    for suite, cfg in CRITERIA[n]:
        report = run_suite(suite, cfg)
        total += report["summary"]["total"]
        for case in report["cases"]:
            if not case["pass"]:
                failures.append(f"{suite} {cfg.cartan_type}{cfg.rank} P={list(cfg.parabolic)}: "
                                f"{case['input']}")
    ok = not failures
    RESULTS[n] = (f"criterion {n}: {'PASS' if ok else 'FAIL'} "
                  f"({total} cases, {len(CRITERIA[n])} configurations, "
                  f"{time.perf_counter() - t0:.1f}s)")
    print(RESULTS[n])
    return ok, failures


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, failures = run_criterion(n)
    assert ok, "\n".join(failures[:20])


if __name__ == "__main__":
    import sys
    wanted = [int(a) for a in sys.argv[1:]] or sorted(CRITERIA)
    bad = [n for n in wanted if not run_criterion(n)[0]]
    sys.exit(1 if bad else 0)
