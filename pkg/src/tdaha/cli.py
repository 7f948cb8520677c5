"""Command-line front end.

    tdaha info   --type A --rank 3 --parabolic 1,3
    tdaha table  stab --type A --rank 1 --format csv
    tdaha verify stab-axioms --type A --rank 2 --out report.json

Exit codes: 0 success or all cases pass, 1 a verification case failed,
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .affweyl import (AffineElt, enumerate_elements, format_affine, omega, parse_affine,
                      p_allowed_pair)
from .exactalg import to_string, to_string_novikov
from .gkmcoh import restriction_table, stab_minus, stab_plus, table_to_csv
from .heckealg import HeckeData, elt_key
from .qaction import confluent_action, dl_image, peterson_map
from .rootdata import MAX_RANK
from .verify import SUITES, Config, EmptySuiteError, run_suite

MAX_LENGTH_CAP = 8
MAX_COWEIGHT_CAP = 6
TABLES = ("abasis", "stab", "act", "confluent", "peterson")


class UsageError(Exception):
    pass


# -- configuration -------------------------------------------------------------------------
def _parse_subset(text: str) -> tuple:
    if not text or text.strip() in ("", "B", "b"):
        return ()
    try:
        return tuple(sorted({int(t) for t in text.replace(" ", "").split(",") if t}))
    except ValueError as exc:
        raise UsageError(f"bad parabolic subset {text!r}") from exc


def make_config(ns: argparse.Namespace) -> Config:
    cfg = Config(cartan_type=ns.type.upper(), rank=ns.rank, parabolic=_parse_subset(ns.parabolic),
                 lattice=ns.lattice, hbar0=ns.hbar0, k0=ns.k0, fmt=ns.format, seed=ns.seed,
                 max_length=ns.max_length, max_coweight=ns.max_coweight, pairs=ns.pairs)
    if not 1 <= cfg.rank <= MAX_RANK:
        raise UsageError(f"rank must lie in 1..{MAX_RANK}")
    if not 0 <= cfg.max_length <= MAX_LENGTH_CAP:
        raise UsageError(f"--max-length must lie in 0..{MAX_LENGTH_CAP}")
    if not 0 <= cfg.max_coweight <= MAX_COWEIGHT_CAP:
        raise UsageError(f"--max-coweight must lie in 0..{MAX_COWEIGHT_CAP}")
    if cfg.pairs < 1:
        raise UsageError("--pairs must be positive")
    try:
        cfg.space()
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc
    return cfg


def _specials(cfg: Config) -> dict:
    out = {}
    if cfg.hbar0:
        out["h"] = 0
    if cfg.k0:
        out["kk"] = 0
    return out


def _lattice(rs, lam) -> str:
    return "(" + ",".join(str(c) for c in rs.to_lattice_coords(lam)) + ")"


# -- info ----------------------------------------------------------------------------------
def cmd_info(cfg: Config) -> dict:
    sp = cfg.space()
    rs, P = sp.rs, sp.P
    return {
        "type": rs.label,
        "lattice": rs.lattice,
        "parabolic": list(cfg.parabolic),
        "cartan_matrix": [list(r) for r in rs.cartan],
        "positive_roots": [list(r) for r in rs.positive_roots],
        "n_positive_roots": rs.n_pos,
        "weyl_order": len(rs.W),
        "omega": [format_affine(x) for x in omega(rs)],
        "fixed_points": [u.name for u in sp.reps],
        "dim": P.dim,
        "two_rho_P": [str(c) for c in P.two_rho_P],
        "namikawa_weyl_group": [w.name for w in P.normalizer_reps],
        "namikawa_weyl_order": len(P.normalizer_reps),
    }


# -- tables --------------------------------------------------------------------------------
def _elements(cfg: Config, element: str | None) -> list[AffineElt]:
    rs = cfg.root_system()
    if element is not None:
        try:
            return [parse_affine(rs, element)]
        except (ValueError, KeyError, IndexError) as exc:
            raise UsageError(f"invalid element {element!r}: {exc}") from exc
    return enumerate_elements(rs, cfg.max_length)


def table_abasis(cfg: Config, element: str | None = None) -> list[dict]:
    rs = cfg.root_system()
    hd = HeckeData.of(rs)
    sp = _specials(cfg)
    rows = []
    for x in _elements(cfg, element):
        Ax = hd.A(x)
        if sp:
            Ax = Ax.specialize(**sp)
        for y in sorted(Ax.terms, key=elt_key):
            rows.append({"x": format_affine(x), "y": format_affine(y),
                         "coefficient": to_string(Ax.terms[y])})
    return rows


def table_stab(cfg: Config) -> list[dict]:
    sp = cfg.space()
    special = _specials(cfg)
    classes = {}
    for u in sp.reps:
        for label, g in ((f"Stab-({u.name})", stab_minus(sp, u)), (f"Stab+({u.name})", stab_plus(sp, u))):
            classes[label] = g.specialize(**special) if special else g
    return restriction_table(sp, classes)


def table_act(cfg: Config, element: str | None = None) -> list[dict]:
    sp = cfg.space()
    rows = []
    for x in _elements(cfg, element):
        for i, u in enumerate(sp.reps):
            sign, e, j = dl_image(sp, x, i)
            rows.append({"x": format_affine(x), "u": u.name, "sign": sign,
                         "q": _lattice(sp.rs, e), "target": sp.reps[j].name})
    return rows


def table_confluent(cfg: Config, element: str | None = None) -> list[dict]:
    sp = cfg.space()
    rows = []
    for x in _elements(cfg, element):
        for u in sp.reps:
            coeffs = confluent_action(x, u, sp)
            hits = [(sp.reps[j].name, to_string_novikov(c)) for j, c in enumerate(coeffs)
                    if not c.is_zero()]
            rows.append({"x": format_affine(x), "u": u.name,
                         "allowed": p_allowed_pair(x, u, sp.P),
                         "value": " + ".join(f"({c}) sigma({v})" for v, c in hits) or "0"})
    return rows


def table_peterson(cfg: Config) -> list[dict]:
    sp = cfg.space()
    rs = sp.rs
    rows = []
    for lam in rs.lattice_points(cfg.max_coweight):
        coeffs = peterson_map(lam, sp)
        hits = [(sp.reps[j].name, to_string_novikov(c)) for j, c in enumerate(coeffs)
                if not c.is_zero()]
        rows.append({"lam": _lattice(rs, lam),
                     "value": " + ".join(f"({c}) sigma({v})" for v, c in hits) or "0"})
    return rows


def cmd_table(cfg: Config, kind: str, element: str | None = None) -> list[dict]:
    if kind == "abasis":
        return table_abasis(cfg, element)
    if kind == "stab":
        return table_stab(cfg)
    if kind == "act":
        return table_act(cfg, element)
    if kind == "confluent":
        return table_confluent(cfg, element)
    if kind == "peterson":
        return table_peterson(cfg)
    raise UsageError(f"unknown table {kind!r}")


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    if fmt == "csv":
        return table_to_csv(rows)
    if not rows:
        return ""
    cols = list(rows[0])
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    lines = ["  ".join(c.ljust(widths[c]) for c in cols).rstrip()]
    for r in rows:
        lines.append("  ".join(str(r[c]).ljust(widths[c]) for c in cols).rstrip())
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- argument parsing ------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", default="A", help="Cartan type (A, B, C, D, G, F, E)")
    common.add_argument("--rank", type=int, default=1)
    common.add_argument("--parabolic", default="", help="simple indices of S_P, e.g. 1,3")
    common.add_argument("--lattice", choices=("coroot", "coweight"), default="coroot")
    common.add_argument("--hbar0", action="store_true", help="specialize hbar = 0 in tables")
    common.add_argument("--k0", action="store_true", help="specialize k = 0 in tables")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-length", type=int, default=3)
    common.add_argument("--max-coweight", type=int, default=2)
    common.add_argument("--pairs", type=int, default=20, help="random pairs in sampled suites")
    common.add_argument("--out", default=None, help="write the output to this path")

    p = argparse.ArgumentParser(prog="tdaha", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="root datum and parabolic data")
    t = sub.add_parser("table", parents=[common], help="emit a table")
    t.add_argument("kind", choices=TABLES)
    t.add_argument("--element", default=None,
                   help='one affine element: a word "0.1.2" or "w=s1.s2;lam=(1,0)"')
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = make_config(ns)
        if ns.command == "info":
            info = cmd_info(cfg)
            if cfg.fmt == "text":
                text = "".join(f"{k}: {v}\n" for k, v in info.items())
            else:
                text = json.dumps(info, indent=1) + "\n"
            _emit(text, ns.out)
            return 0
        if ns.command == "table":
            _emit(render(cmd_table(cfg, ns.kind, ns.element), cfg.fmt), ns.out)
            return 0
        report = run_suite(ns.suite, cfg)
    except UsageError as exc:
        print(f"tdaha: error: {exc}", file=sys.stderr)
        return 2
    except EmptySuiteError as exc:
        print(f"tdaha: error: {exc}", file=sys.stderr)
        return 2
    summary = report["summary"]
    if ns.out or cfg.fmt == "json":
        _emit(json.dumps(report, indent=1) + "\n", ns.out)
    if ns.out or cfg.fmt != "json":
        status = "PASS" if summary["pass"] else "FAIL"
        print(f"{report['suite']} {cfg.cartan_type}{cfg.rank} P={list(cfg.parabolic)}: "
              f"{status} {summary['passed']}/{summary['total']}")
        for c in report["cases"]:
            if not c["pass"]:
                print(f"  failed: {c['input']}")
    return 0 if summary["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
