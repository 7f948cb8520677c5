import pytest

from tdaha.exactalg import NovikovPoly
from tdaha.gkmcoh import (GKMSpace, combine, euler_class_total, expand_in_basis, is_gkm, pairing,
                          schubert_all, stab_minus, stab_minus_all, stab_plus, verify_stab_axioms)

SPACES = [("A", 1, ()), ("A", 2, ()), ("A", 2, (1,)), ("A", 2, (1, 2)), ("B", 2, ()), ("B", 2, (2,)),
          ("G", 2, ()), ("G", 2, (1,)), ("A", 3, (1, 3)), ("A", 3, (2,))]


def _delta(sp):
    """(-1)^dim prod (a + k) over positive roots outside the Levi."""
    out = sp.ring.one()
    for a in sp.P.pos_roots_out:
        out = out * sp.root_form(a, with_k=True)
    return out * (-1) ** sp.P.dim


@pytest.mark.parametrize("t,r,S", SPACES)
def test_stab_minus_at_identity(t, r, S):
    sp = GKMSpace.build(t, r, S)
    g = stab_minus(sp, sp.rs.e)
    assert g.values[0].scalar_part() == _delta(sp)


@pytest.mark.parametrize("t,r", [("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_stab_minus_identity_at_simple_reflections(t, r):
    sp = GKMSpace.build(t, r)
    g = stab_minus(sp, sp.rs.e)
    R = sp.ring
    for i in range(1, r + 1):
        a = R.linear(sp.rs.simple_root(i))
        got = g.values[sp.pos(sp.rs.s[i])].scalar_part()
        assert got == R.k / (R.k + a) * _delta(sp)


def test_a1_values():
    sp = GKMSpace.build("A", 1)
    R = sp.ring
    e, s = sp.rs.e, sp.rs.s[1]
    w1, k = R.gen("w1"), R.k
    assert [v.scalar_part() for v in stab_minus(sp, e).values] == [-2 * w1 - k, -k]
    assert [v.scalar_part() for v in stab_minus(sp, s).values] == [R.zero(), 2 * w1]
    assert [v.scalar_part() for v in stab_plus(sp, e).values] == [-2 * w1, R.zero()]
    assert [v.scalar_part() for v in stab_plus(sp, s).values] == [-k, 2 * w1 - k]
    sig = schubert_all(sp)
    assert [v.scalar_part() for v in sig[1].values] == [R.zero(), 2 * w1]
    assert sig[0] == sp.one()


@pytest.mark.parametrize("t,r,S", SPACES)
def test_stab_axioms(t, r, S):
    sp = GKMSpace.build(t, r, S)
    assert verify_stab_axioms(stab_minus_all(sp), "-")["pass"]
    assert verify_stab_axioms([stab_plus(sp, u) for u in sp.reps], "+")["pass"]


@pytest.mark.parametrize("t,r,S", SPACES[:8])
def test_negated_family_fails(t, r, S):
    sp = GKMSpace.build(t, r, S)
    fam = [-g for g in stab_minus_all(sp)]
    assert not verify_stab_axioms(fam, "-")["pass"]
    bumped = [g.scale(sp.ring.hbar + sp.ring.k) for g in stab_minus_all(sp)]
    assert not verify_stab_axioms(bumped, "-")["pass"]


@pytest.mark.parametrize("t,r,S", SPACES)
def test_duality(t, r, S):
    sp = GKMSpace.build(t, r, S)
    one = NovikovPoly.scalar(sp.ring.one(), r)
    sign = sp.ring.const((-1) ** sp.P.dim)
    for i, u in enumerate(sp.reps):
        for j, v in enumerate(sp.reps):
            got = pairing(stab_minus(sp, u), stab_plus(sp, v).scale(sign))
            assert got == (one if i == j else NovikovPoly.scalar(sp.ring.zero(), r))


@pytest.mark.parametrize("t,r,S", SPACES)
def test_expansion_roundtrip(t, r, S):
    sp = GKMSpace.build(t, r, S)
    g = sp.one()
    for basis in ("stable", "schubert"):
        assert combine(sp, expand_in_basis(g, basis), basis) == g
    for s in schubert_all(sp):
        assert is_gkm(s)
        assert combine(sp, expand_in_basis(s, "stable"), "stable") == s


@pytest.mark.parametrize("t,r", [("A", 1), ("A", 2), ("B", 2)])
def test_euler_sum(t, r):
    sp = GKMSpace.build(t, r)
    total = sp.zero()
    for g in stab_minus_all(sp):
        total = total + g
    assert euler_class_total(sp) == total.scale(sp.ring.const((-1) ** sp.P.dim))
