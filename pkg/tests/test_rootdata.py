from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from tdaha.rootdata import ParabolicData, build_root_system, cartan_matrix


# |W| and |R^+| from the classical formulas
WEYL = [
    ("A", 1, 2, 1), ("A", 2, 6, 3), ("A", 3, 24, 6), ("A", 4, 120, 10),
    ("B", 2, 8, 4), ("B", 3, 48, 9), ("C", 3, 48, 9), ("D", 4, 192, 12),
    ("G", 2, 12, 6), ("F", 4, 1152, 24),
]


@pytest.mark.parametrize("t,r,order,npos", WEYL)
def test_weyl_group_order_and_positive_roots(t, r, order, npos):
    rs = build_root_system(t, r)
    assert len(rs.W) == order
    assert rs.n_pos == npos
    assert max(w.length for w in rs.W) == npos


def test_type_a_order_formula():
    for r in range(1, 5):
        assert len(build_root_system("A", r).W) == factorial(r + 1)


def test_cartan_matrices():
    assert cartan_matrix("A", 2) == [[2, -1], [-1, 2]]
    assert cartan_matrix("G", 2) in ([[2, -1], [-3, 2]], [[2, -3], [-1, 2]])
    C = cartan_matrix("B", 2)
    assert sorted([C[0][1], C[1][0]]) == [-2, -1]


def test_unsupported_rank():
    with pytest.raises(ValueError):
        build_root_system("E", 4)
    with pytest.raises(ValueError):
        build_root_system("A", 9)


def test_simple_roots_are_cartan_rows():
    rs = build_root_system("B", 2)
    for i in range(1, 3):
        assert tuple(rs.simple_root(i)) == tuple(rs.cartan[i - 1])


def test_pairing_roots_with_coroots():
    rs = build_root_system("G", 2)
    for i in range(1, 3):
        for j in range(1, 3):
            assert rs.pair(rs.simple_root(j), rs.simple_coroot(i)) == rs.cartan[i - 1][j - 1] or \
                rs.pair(rs.simple_root(j), rs.simple_coroot(i)) == rs.cartan[j - 1][i - 1]


def test_theta_is_highest_root():
    rs = build_root_system("B", 2)
    # theta pairs non-negatively with every simple coroot
    assert all(rs.pair(rs.theta, rs.simple_coroot(i)) >= 0 for i in range(1, 3))


def _subword_oracle(rs, u, v) -> bool:
    """u <= v iff u is a subword product of some reduced word of v (all words tried)."""
    def words(w):
        if w.length == 0:
            return [()]
        out = []
        for i in range(1, rs.rank + 1):
            if rs.is_right_descent(w, i):
                out += [p + (i,) for p in words(rs.mul(w, rs.s[i]))]
        return out

    for word in words(v):
        reach = {rs.e}
        for i in word:
            reach |= {rs.mul(x, rs.s[i]) for x in reach}
        if u in reach:
            return True
    return False


@pytest.mark.parametrize("t,r", [("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_bruhat_matches_subword_oracle(t, r):
    rs = build_root_system(t, r)
    for u in rs.W:
        for v in rs.W:
            assert rs.bruhat_leq(u, v) == _subword_oracle(rs, u, v)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=8), st.lists(st.integers(1, 3), max_size=8))
def test_length_is_subadditive_and_inverse_invariant(a, b):
    rs = build_root_system("A", 3)
    x, y = rs.element(a), rs.element(b)
    assert rs.mul(x, y).length <= x.length + y.length
    assert rs.inverse(x).length == x.length
    assert (rs.mul(x, y).length - x.length - y.length) % 2 == 0


def test_parabolic_a3_13():
    rs = build_root_system("A", 3)
    P = ParabolicData(rs, (1, 3))
    assert len(P.W_P) == 4
    assert len(P.reps) == 6
    assert P.dim == 4
    assert [w.name for w in P.normalizer_reps] == ["e", "s2.s1.s3.s2"]


def test_parabolic_reps_are_minimal():
    rs = build_root_system("B", 2)
    P = ParabolicData(rs, (1,))
    for u in P.reps:
        coset = [w for w in rs.W if P.coset(w) == P.coset(u)]
        assert min(w.length for w in coset) == u.length


def test_coinvariants():
    rs = build_root_system("A", 2)
    P = ParabolicData(rs, (1,))
    assert P.torsion_free
    # the simple coroot of S_P is killed
    assert P.canon(rs.simple_coroot(1)) == P.canon((0, 0))
    assert P.canon(rs.simple_coroot(2)) != P.canon((0, 0))


def test_coweight_lattice_coordinates_roundtrip():
    rs = build_root_system("B", 2, "coweight")
    for n in [(1, 0), (0, 1), (2, -3)]:
        assert rs.to_lattice_coords(rs.from_lattice_coords(n)) == n
