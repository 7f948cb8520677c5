import pytest
from hypothesis import given, settings, strategies as st

from tdaha.affweyl import (AffineElt, aff_length, affine_inversion_count, all_reduced_words,
                           degree_defect, enumerate_elements, finite, format_affine, from_word,
                           identity, omega, p_allowed_pair, parse_affine, reduced_word,
                           right_mul_simple, simple_reflection, translation)
from tdaha.rootdata import ParabolicData, build_root_system


def _bfs_lengths(rs, depth):
    """Word length by breadth-first search from the length-zero elements."""
    dist = {pi: 0 for pi in omega(rs)}
    layer = list(dist)
    for n in range(1, depth + 1):
        nxt = []
        for x in layer:
            for i in range(rs.rank + 1):
                y = right_mul_simple(x, i)
                if y not in dist:
                    dist[y] = n
                    nxt.append(y)
        layer = nxt
    return dist


@pytest.mark.parametrize("t,r,lat", [("A", 1, "coroot"), ("A", 2, "coroot"), ("B", 2, "coroot"),
                                     ("G", 2, "coroot"), ("A", 2, "coweight"), ("C", 2, "coweight")])
def test_length_matches_bfs_and_inversions(t, r, lat):
    rs = build_root_system(t, r, lat)
    dist = _bfs_lengths(rs, 4)
    for x, n in dist.items():
        assert aff_length(x) == n
        assert affine_inversion_count(x) == n
    assert set(enumerate_elements(rs, 4)) == set(dist)


def test_a1_lengths():
    rs = build_root_system("A", 1)
    s = finite(rs.s[1])
    a = rs.simple_coroot(1)
    assert (s * translation(rs, [-c for c in a])).length == 1
    assert (s * translation(rs, a)).length == 3
    assert translation(rs, a).length == 2
    assert simple_reflection(rs, 0) == s * translation(rs, [-c for c in a])


def test_omega_is_trivial_in_coroot_lattice():
    assert omega(build_root_system("B", 2)) == (identity(build_root_system("B", 2)),)


def test_omega_size_matches_fundamental_group():
    assert len(omega(build_root_system("A", 2, "coweight"))) == 3
    assert len(omega(build_root_system("C", 2, "coweight"))) == 2
    for pi in omega(build_root_system("A", 3, "coweight")):
        assert pi.length == 0


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=7))
def test_reduced_word_reassembles(word):
    rs = build_root_system("A", 2, "coweight")
    x = from_word(rs, word, omega(rs)[1])
    pi, red = reduced_word(x)
    assert len(red) == x.length
    assert from_word(rs, red, pi) == x
    for w in all_reduced_words(x):
        assert from_word(rs, w, pi) == x


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=6), st.lists(st.integers(0, 2), max_size=6))
def test_group_laws(a, b):
    rs = build_root_system("B", 2)
    x, y = from_word(rs, a), from_word(rs, b)
    assert (x * y).inverse() == y.inverse() * x.inverse()
    assert (x * x.inverse()) == identity(rs)
    assert (x * y).length <= x.length + y.length


def test_format_parse_roundtrip():
    rs = build_root_system("C", 2, "coweight")
    for x in enumerate_elements(rs, 3):
        assert parse_affine(rs, format_affine(x)) == x
    assert parse_affine(build_root_system("A", 1), "0") == simple_reflection(build_root_system("A", 1), 0)
    with pytest.raises(ValueError):
        parse_affine(build_root_system("A", 1), "3")
    with pytest.raises(ValueError):
        parse_affine(build_root_system("A", 1), "w=s1;lam=(1,2)")


@pytest.mark.parametrize("t,r,S", [("A", 1, ()), ("A", 2, ()), ("A", 2, (1,)), ("B", 2, (2,))])
def test_degree_defect_nonnegative_on_allowed_pairs(t, r, S):
    rs = build_root_system(t, r)
    P = ParabolicData(rs, S)
    for x in enumerate_elements(rs, 4):
        for u in P.reps:
            if p_allowed_pair(x, u, P):
                assert degree_defect(x, u, P) >= 0


def test_a1_allowed_pairs():
    rs = build_root_system("A", 1)
    P = ParabolicData(rs, ())
    s0 = simple_reflection(rs, 0)
    t = translation(rs, rs.simple_coroot(1))
    assert p_allowed_pair(s0, rs.e, P)
    assert degree_defect(s0, rs.e, P) == 0
    assert degree_defect(t, rs.e, P) == 4
    # a finite reflection flipping a positive root is not allowed at u = e
    assert not p_allowed_pair(finite(rs.s[1]), rs.e, P)


def test_affine_elt_equality():
    rs = build_root_system("A", 1)
    assert AffineElt(rs.e, (0,)) == identity(rs)
    assert hash(AffineElt(rs.e, (1,))) == hash(translation(rs, (1,)))
