import random

import pytest

from tdaha.affweyl import enumerate_elements, finite, simple_reflection, translation
from tdaha.exactalg import NovikovPoly
from tdaha.gkmcoh import GKMSpace, schubert_all, stab_minus
from tdaha.heckealg import HeckeData, TwistedElt, spherical_idempotents
from tdaha.qaction import (QuantumProduct, act, act_dl, confluent_action, confluent_apply,
                           confluent_formula, delta_factor, dl_image, from_stable, namikawa_act,
                           namikawa_act_q, one_in_stable_basis, op_vec, peterson_formula,
                           peterson_map, springer_check, theta_spherical_on_one,
                           spherical_image_check, to_stable, translation_on_one, z_class)
from tdaha.verify import random_equivariant_class

SMALL = [("A", 1, ()), ("A", 2, ()), ("A", 2, (1,)), ("B", 2, ()), ("B", 2, (1,)), ("G", 2, (2,))]


def nov(e, c):
    return NovikovPoly.monomial(e, c)


# -- the DL basis acts by signed permutations ------------------------------------------------
@pytest.mark.parametrize("t,r,S", SMALL)
def test_dl_action_matches_algebra(t, r, S):
    sp = GKMSpace.build(t, r, S)
    hd = HeckeData.of(sp.rs)
    for x in enumerate_elements(sp.rs, 2):
        for u in sp.reps:
            assert act(hd.A(x), stab_minus(sp, u), route="word") == act_dl(x, u, sp)


def test_a1_dl_images():
    sp = GKMSpace.build("A", 1)
    rs = sp.rs
    assert dl_image(sp, simple_reflection(rs, 1), 0) == (1, (0,), 1)
    sign, e, j = dl_image(sp, translation(rs, rs.simple_coroot(1)), 0)
    assert (e, j) == ((1,), 0)
    for x in enumerate_elements(rs, 0):
        assert dl_image(sp, x, 0) == (1, (0,), 0)


@pytest.mark.parametrize("t,r,S", SMALL[:4])
def test_bracket_action_routes_agree(t, r, S):
    sp = GKMSpace.build(t, r, S)
    v = one_in_stable_basis(sp)
    for x in enumerate_elements(sp.rs, 2):
        a = TwistedElt.basis(x)
        assert op_vec(sp, a, v, "dl") == op_vec(sp, a, v, "word")


def test_finite_bracket_matches_geometric_weyl_action():
    from tdaha.gkmcoh import weyl_act_class
    sp = GKMSpace.build("A", 2)
    for w in sp.rs.W:
        for u in sp.reps:
            g = stab_minus(sp, u)
            assert act(TwistedElt.basis(finite(w)), g) == weyl_act_class(w, g)


# -- unit, z-classes, springer -----------------------------------------------------------------
def test_one_in_stable_basis_a1():
    sp = GKMSpace.build("A", 1)
    R = sp.ring
    d = R.linear([2], k=1)
    b = one_in_stable_basis(sp)
    assert b == [nov((0,), -d.inverse()), nov((0,), d.inverse())]
    assert from_stable(sp, b) == sp.one()


@pytest.mark.parametrize("t,r,S", SMALL)
def test_z_class_is_translation_on_one(t, r, S):
    sp = GKMSpace.build(t, r, S)
    for lam in sp.rs.lattice_points(1):
        assert z_class(lam, sp) == translation_on_one(lam, sp, {"h": 0, "kk": 0})


def test_delta_factor_a1():
    sp = GKMSpace.build("A", 1)
    R = sp.ring
    w1 = R.gen("w1")
    f, e = delta_factor((1,), sp.rs.e, sp, k_zero=True)
    assert f == w1 / (w1 + R.hbar)
    assert e == (1,)


@pytest.mark.parametrize("t,r,S", SMALL + [("A", 3, (1, 3))])
def test_springer(t, r, S):
    sp = GKMSpace.build(t, r, S)
    for lam in sp.rs.lattice_points(1):
        for u in sp.reps:
            assert springer_check(lam, u, sp)["pass"]


# -- confluent limit and Peterson map -------------------------------------------------------------
def test_a1_confluent_examples():
    sp = GKMSpace.build("A", 1)
    rs = sp.rs
    zero = sp.zero_nov()
    s0 = simple_reflection(rs, 0)
    assert confluent_action(s0, rs.e, sp) == [zero, nov((-1,), sp.ring.one())]
    assert confluent_action(translation(rs, rs.simple_coroot(1)), rs.e, sp) == [zero, zero]


@pytest.mark.parametrize("t,r,S", SMALL)
def test_confluent_matches_formula(t, r, S):
    sp = GKMSpace.build(t, r, S)
    for x in enumerate_elements(sp.rs, 3):
        for u in sp.reps:
            assert confluent_action(x, u, sp) == confluent_formula(x, u, sp)


def test_a1_peterson():
    sp = GKMSpace.build("A", 1)
    one, z = sp.ring.one(), sp.zero_nov()
    want = {-2: [nov((-2,), one), z], -1: [nov((-1,), one), z], 0: [nov((0,), one), z],
            1: [z, nov((-1,), one)], 2: [z, nov((-2,), one)]}
    for c, v in want.items():
        assert peterson_map((c,), sp) == v


@pytest.mark.parametrize("t,r,S", SMALL + [("A", 2, (1, 2))])
def test_peterson_table(t, r, S):
    sp = GKMSpace.build(t, r, S)
    for lam in sp.rs.lattice_points(2):
        assert peterson_map(lam, sp) == peterson_formula(lam, sp)


@pytest.mark.parametrize("t,r", [("A", 1), ("A", 2), ("B", 2)])
def test_peterson_multiplicative_on_antidominant(t, r):
    sp = GKMSpace.build(t, r)
    rs = sp.rs
    anti = [lam for lam in rs.lattice_points(2)
            if all(p <= 0 for p in rs.coweight_pairings(lam)[: rs.n_pos])]
    for lam in anti:
        for mu in anti:
            total = tuple(a + b for a, b in zip(lam, mu))
            assert confluent_apply(translation(rs, lam), peterson_map(mu, sp), sp) == peterson_map(total, sp)


# -- quantum product --------------------------------------------------------------------------------
@pytest.fixture(scope="module")
def qa1():
    return QuantumProduct(GKMSpace.build("A", 1))


def test_qh_unit_and_cup_limit(qa1):
    sp = qa1.sp
    sig = schubert_all(sp)[1]
    Q = qa1.Q
    one = qa1.multiply(sp.one(), sig.specialize(kk=0), require_equivariant=False)
    assert one == [Q.lift(v.scalar_part()) for v in sig.specialize(kk=0).values]


def test_qh_translation_classes_multiply(qa1):
    sp = qa1.sp
    Q = qa1.Q
    z = {c: translation_on_one((c,), sp, {"h": 0}) for c in (-2, -1, 0, 1, 2)}
    for a in (-1, 1):
        for b in (-1, 1):
            got = qa1.multiply(z[a], z[b], require_equivariant=False)
            assert got == Q.restrictions(Q.from_vec(to_stable(z[a + b])))


def test_qh_commutative_a2():
    sp = GKMSpace.build("A", 2)
    qp = QuantumProduct(sp)
    rng = random.Random(3)
    g1 = random_equivariant_class(sp, rng)
    g2 = random_equivariant_class(sp, rng)
    assert qp.multiply(g1, g2) == qp.multiply(g2, g1)


def test_qh_rejects_nonequivariant(qa1):
    sp = qa1.sp
    with pytest.raises(ValueError):
        qa1.multiply(stab_minus(sp, sp.rs.e), sp.one())


# -- Namikawa action, spherical ----------------------------------------------------------------------
def test_namikawa_trivial_for_borel():
    sp = GKMSpace.build("A", 2)
    g = stab_minus(sp, sp.rs.s[1])
    assert namikawa_act(sp.rs.e, g) == g


def test_namikawa_a3_13_involution():
    sp = GKMSpace.build("A", 3, (1, 3))
    w = sp.P.normalizer_reps[1]
    for u in sp.reps:
        g = stab_minus(sp, u)
        assert namikawa_act(w, namikawa_act(w, g)) == g
    assert namikawa_act(w, sp.one()) == sp.one()


def test_namikawa_q_matches_on_a2_borel():
    sp = GKMSpace.build("A", 2)
    qp = QuantumProduct(sp)
    v = qp.stable(sp.one())
    for w in sp.P.normalizer_reps:
        assert namikawa_act_q(qp, w, v) == v


def test_spherical_image_on_one():
    sp = GKMSpace.build("A", 1)
    rs = sp.rs
    for x in enumerate_elements(rs, 2):
        assert spherical_image_check(sp, theta_spherical_on_one(sp, x))["pass"]
    e, _ = spherical_idempotents(rs)
    assert not e.is_zero()


def test_raw_translation_on_one_is_not_polynomial():
    # without the idempotents, [t] . 1 picks up the localization factor
    sp = GKMSpace.build("A", 1)
    res = spherical_image_check(sp, to_stable(translation_on_one((1,), sp)))
    assert not res["polynomial"]
    assert res["namikawa_invariant"]
