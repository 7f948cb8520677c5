"""GKM model of the torus-equivariant cohomology of T*(G/P) and G/P.

A class is its tuple of restrictions to the fixed points uP, u running over
minimal coset representatives in the order of ``ParabolicData.reps``.  Each
restriction is a NovikovPoly (q-exponents in simple-coroot coordinates,
canonicalized in the coinvariant lattice).

Tangent weights at uP:
  zero section   u(-a)      for a in R^+ minus R_P^+
  cotangent      u(a) + k   for the same a
The polarization is the product of zero-section weights.  Stab^- uses the
chamber whose support runs upward in Bruhat order.
"""

from __future__ import annotations

import csv
import io
import json
from functools import lru_cache
from typing import Iterable, Sequence

from .affweyl import finite
from .exactalg import (NovikovPoly, RatFn, Ring, to_string_novikov, weyl_subst)
from .heckealg import HeckeData, TwistedElt
from .rootdata import ParabolicData, RootSystem, WeylElt, build_root_system

COTANGENT = "T*P"
BASE = "P"


class GKMSpace:
    """Fixed points, tangent data and class caches for one (root system, parabolic)."""

    _cache: dict = {}

    def __init__(self, P: ParabolicData):
        self.P = P
        self.rs = P.rs
        self.ring = Ring.get(self.rs.rank)
        self.reps: list[WeylElt] = list(P.reps)
        self.n = len(self.reps)
        self.index = {u.idx: i for i, u in enumerate(self.reps)}
        self.tangent = TangentData(self)
        self._stab_minus: dict = {}
        self._stab_plus: list | None = None
        self._schubert: dict = {}

    @classmethod
    def of(cls, P: ParabolicData) -> "GKMSpace":
        key = (id(P.rs), P.subset)
        sp = cls._cache.get(key)
        if sp is None or sp.P.rs is not P.rs:
            sp = cls._cache[key] = cls(P)
        return sp

    @classmethod
    def build(cls, cartan_type: str, rank: int, subset: Iterable[int] = (),
              lattice: str = "coroot") -> "GKMSpace":
        rs = build_root_system(cartan_type, rank, lattice)
        return cls.of(parabolic(rs, tuple(sorted(subset))))

    def pos(self, w: WeylElt) -> int:
        """Position of the coset wW_P in the fixed-point list."""
        return self.P.coset(w)

    def root_form(self, k: int, with_k: bool = False) -> RatFn:
        return self.ring.linear(self.rs.roots[k], k=1 if with_k else 0)

    def scalar(self, f: RatFn) -> NovikovPoly:
        return NovikovPoly.scalar(f, self.rs.rank)

    def zero_nov(self) -> NovikovPoly:
        return NovikovPoly({}, self.ring)

    def canon(self, e: Sequence) -> tuple:
        return self.P.canon(e)

    def name(self, i: int) -> str:
        return self.reps[i].name

    # class constructors
    def from_scalars(self, values: Sequence[RatFn], ambient: str = COTANGENT) -> "GKMClass":
        return GKMClass(self, tuple(self.scalar(v) for v in values), ambient)

    def zero(self, ambient: str = COTANGENT) -> "GKMClass":
        return GKMClass(self, tuple(self.zero_nov() for _ in range(self.n)), ambient)

    def one(self, ambient: str = COTANGENT) -> "GKMClass":
        return self.from_scalars([self.ring.one()] * self.n, ambient)


@lru_cache(maxsize=None)
def parabolic(rs: RootSystem, subset: tuple) -> ParabolicData:
    return ParabolicData(rs, subset)


class TangentData:
    def __init__(self, sp: GKMSpace):
        rs, P, ring = sp.rs, sp.P, sp.ring
        self.zero_weights: list[list[int]] = []
        self.fiber_weights: list[list[RatFn]] = []
        self.epsilon: list[RatFn] = []
        self.euler_total: list[RatFn] = []
        self.euler_fiber: list[RatFn] = []
        self.repelling: list[RatFn] = []
        self.attracting: list[RatFn] = []
        for u in sp.reps:
            zw = [u.perm[rs.neg(a)] for a in P.pos_roots_out]
            fw_idx = [u.perm[a] for a in P.pos_roots_out]
            zf = [sp.root_form(k) for k in zw]
            ff = [sp.root_form(k, with_k=True) for k in fw_idx]
            self.zero_weights.append(zw)
            self.fiber_weights.append(ff)
            eps = _prod(zf, ring)
            fib = _prod(ff, ring)
            self.epsilon.append(eps)
            self.euler_fiber.append(fib)
            self.euler_total.append(eps * fib)
            # weights with positive torus part repel under the -tau chamber
            neg = [f for k, f in zip(zw, zf) if rs.is_positive(k)]
            neg += [f for k, f in zip(fw_idx, ff) if rs.is_positive(k)]
            pos = [f for k, f in zip(zw, zf) if not rs.is_positive(k)]
            pos += [f for k, f in zip(fw_idx, ff) if not rs.is_positive(k)]
            self.repelling.append(_prod(neg, ring))
            self.attracting.append(_prod(pos, ring))

    def normal_minus(self, i: int) -> RatFn:
        return self.repelling[i]

    def normal_plus(self, i: int) -> RatFn:
        return self.attracting[i]


def _prod(fs: Iterable[RatFn], ring: Ring) -> RatFn:
    out = ring.one()
    for f in fs:
        out = out * f
    return out


class GKMClass:
    __slots__ = ("space", "values", "ambient")

    def __init__(self, space: GKMSpace, values: Sequence[NovikovPoly], ambient: str = COTANGENT):
        self.space = space
        self.values = tuple(values)
        self.ambient = ambient

    def __getitem__(self, i: int) -> NovikovPoly:
        return self.values[i]

    def _check(self, other: "GKMClass"):
        if other.space is not self.space or other.ambient != self.ambient:
            raise ValueError("classes live on different spaces")

    def __add__(self, other: "GKMClass") -> "GKMClass":
        self._check(other)
        return GKMClass(self.space, [a + b for a, b in zip(self.values, other.values)], self.ambient)

    def __sub__(self, other: "GKMClass") -> "GKMClass":
        self._check(other)
        return GKMClass(self.space, [a - b for a, b in zip(self.values, other.values)], self.ambient)

    def __neg__(self):
        return GKMClass(self.space, [-a for a in self.values], self.ambient)

    def __eq__(self, other):
        return isinstance(other, GKMClass) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def scale(self, f: RatFn) -> "GKMClass":
        return GKMClass(self.space, [a.scale(f) for a in self.values], self.ambient)

    def scale_nov(self, p: NovikovPoly) -> "GKMClass":
        canon = self.space.canon
        return GKMClass(self.space, [(a * p).map_exponents(canon) for a in self.values],
                        self.ambient)

    def shift(self, e: Sequence) -> "GKMClass":
        canon = self.space.canon
        return GKMClass(self.space, [a.shift(tuple(e), canon) for a in self.values], self.ambient)

    def cup(self, other: "GKMClass") -> "GKMClass":
        """Pointwise product of restriction tuples."""
        self._check(other)
        canon = self.space.canon
        return GKMClass(self.space, [(a * b).map_exponents(canon)
                                     for a, b in zip(self.values, other.values)], self.ambient)

    def map_coeffs(self, fn) -> "GKMClass":
        return GKMClass(self.space, [a.map_coeffs(fn) for a in self.values], self.ambient)

    def specialize(self, **values) -> "GKMClass":
        return self.map_coeffs(lambda c: c.specialize(**values))

    def with_ambient(self, ambient: str) -> "GKMClass":
        return GKMClass(self.space, self.values, ambient)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        """Homogeneity in the linear-form grading (cohomological degree / 2).

        On T*P the Novikov variables have degree 0; on P, q^beta carries
        <2rho_P, beta> with the sign convention of ``novikov_degree``."""
        degs = set()
        for v in self.values:
            for e, c in v.terms.items():
                if not c.is_homogeneous():
                    return False
                d = c.degree()
                if self.ambient == BASE:
                    d += novikov_degree(self.space, e)
                degs.add(d)
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    def support(self) -> list[int]:
        return [i for i, v in enumerate(self.values) if not v.is_zero()]

    def __repr__(self):
        sp = self.space
        body = ", ".join(f"{sp.name(i)}: {to_string_novikov(v)}" for i, v in enumerate(self.values))
        return f"GKMClass({self.ambient}; {body})"


def novikov_degree(sp: GKMSpace, e: Sequence) -> int:
    """Half the cohomological degree of q^e on G/P: <2rho_P, e>."""
    return int(sp.rs.pair(sp.P.two_rho_P, e))


# -- pairing -----------------------------------------------------------------------------
def pairing(g1: GKMClass, g2: GKMClass) -> NovikovPoly:
    """Localization sum of g1|_u g2|_u over the full tangent Euler class."""
    g1._check(g2)
    sp = g1.space
    td = sp.tangent
    eul = td.euler_total if g1.ambient == COTANGENT else td.epsilon
    out = sp.zero_nov()
    for i in range(sp.n):
        a, b = g1.values[i], g2.values[i]
        if a.is_zero() or b.is_zero():
            continue
        out = out + (a * b).map_exponents(sp.canon).scale(eul[i].inverse())
    return out


# -- finite Hecke action -------------------------------------------------------------------
def weyl_act_class(w: WeylElt, g: GKMClass) -> GKMClass:
    """(w.g)|_v = w(g|_{w^{-1} v}); q-exponents untouched."""
    sp = g.space
    rs = sp.rs
    winv = rs.inverse(w)
    vals = []
    for v in sp.reps:
        src = g.values[sp.pos(rs.mul(winv, v))]
        vals.append(src.map_coeffs(lambda c: weyl_subst(c, w)))
    return GKMClass(sp, vals, g.ambient)


def finite_hecke_action(a: TwistedElt, g: GKMClass) -> GKMClass:
    sp = g.space
    out = sp.zero(g.ambient)
    for x, c in a.terms.items():
        if any(x.lam):
            raise ValueError("finite_hecke_action needs support in the finite Weyl group")
        out = out + weyl_act_class(x.w, g).scale(c)
    return out


# -- distinguished classes -----------------------------------------------------------------
def conormal_point_class(sp: GKMSpace, u: WeylElt) -> GKMClass:
    i = sp.pos(u)
    vals = [sp.zero_nov() for _ in range(sp.n)]
    vals[i] = sp.scalar(sp.tangent.epsilon[i])
    return GKMClass(sp, vals, COTANGENT)


def euler_class_total(sp: GKMSpace) -> GKMClass:
    return sp.from_scalars(sp.tangent.euler_fiber, COTANGENT)


def stab_minus(sp: GKMSpace, u: WeylElt) -> GKMClass:
    """A_{u w0} applied to the conormal class of the lowest fixed point."""
    i = sp.pos(u)
    hit = sp._stab_minus.get(i)
    if hit is None:
        rs = sp.rs
        u = sp.reps[i]
        base = conormal_point_class(sp, rs.w0)
        A = HeckeData.of(rs).A(finite(rs.mul(u, rs.w0)))
        hit = sp._stab_minus[i] = finite_hecke_action(A, base)
    return hit


def stab_minus_all(sp: GKMSpace) -> list[GKMClass]:
    return [stab_minus(sp, u) for u in sp.reps]


def stab_matrix(sp: GKMSpace) -> list[list[RatFn]]:
    """M[p][v] = Stab^-(p)|_v (scalars)."""
    return [[c.scalar_part() for c in s.values] for s in stab_minus_all(sp)]


def _invert(M: list[list[RatFn]], ring: Ring) -> list[list[RatFn]]:
    n = len(M)
    A = [list(row) + [ring.one() if i == j else ring.zero() for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if not A[r][c].is_zero()), None)
        if p is None:
            raise ZeroDivisionError("singular stable-envelope matrix")
        A[c], A[p] = A[p], A[c]
        inv = A[c][c].inverse()
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and not A[r][c].is_zero():
                f = A[r][c]
                A[r] = [x - f * y if not y.is_zero() else x for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def stab_plus(sp: GKMSpace, u: WeylElt) -> GKMClass:
    """Dual basis: Stab^+(q)|_v = (-1)^dim E_v (M^{-1})[v][q]."""
    if sp._stab_plus is None:
        Minv = _invert(stab_matrix(sp), sp.ring)
        sign = (-1) ** sp.P.dim
        E = sp.tangent.euler_total
        sp._stab_plus = [
            sp.from_scalars([Minv[v][q] * E[v] * sign for v in range(sp.n)])
            for q in range(sp.n)]
    return sp._stab_plus[sp.pos(u)]


def schubert_class(sp: GKMSpace, u: WeylElt) -> GKMClass:
    """Schubert class of the closure of B^- uP/P, by left divided differences from
    the point class at the longest coset."""
    i = sp.pos(u)
    if i in sp._schubert:
        return sp._schubert[i]
    rs, P = sp.rs, sp.P
    top = sp.pos(rs.w0)
    if i == top:
        val = [sp.ring.zero()] * sp.n
        val[top] = sp.tangent.epsilon[top]
        cls = sp.from_scalars(val, BASE)
    else:
        u = sp.reps[i]
        j = next(j for j in range(1, rs.rank + 1)
                 if P.ell(rs.mul(rs.s[j], u)) == P.ell(u) + 1)
        cls = divided_difference(j, schubert_class(sp, rs.mul(rs.s[j], u)))
    sp._schubert[i] = cls
    return cls


def divided_difference(j: int, g: GKMClass) -> GKMClass:
    """(d_j g)|_v = (g|_v - s_j(g|_{s_j v})) / a_j."""
    sp = g.space
    rs = sp.rs
    sj = rs.s[j]
    inv = sp.root_form(rs.simple_root_index[j - 1]).inverse()
    vals = []
    for v in sp.reps:
        here = g.values[sp.pos(v)]
        there = g.values[sp.pos(rs.mul(sj, v))].map_coeffs(lambda c: weyl_subst(c, sj))
        vals.append((here - there).scale(inv))
    return GKMClass(sp, vals, g.ambient)


def schubert_all(sp: GKMSpace) -> list[GKMClass]:
    return [schubert_class(sp, u) for u in sp.reps]


# -- GKM membership -------------------------------------------------------------------------
def is_gkm(g: GKMClass) -> bool:
    """Polynomial restrictions, divisible differences along zero-section edges."""
    sp = g.space
    rs = sp.rs
    if not all(v.is_polynomial() for v in g.values):
        return False
    for i, u in enumerate(sp.reps):
        for a in range(rs.n_pos):
            j = sp.pos(rs.mul(rs.reflection(a), u))
            if j <= i:
                continue
            diff = g.values[i] - g.values[j]
            inv = sp.root_form(a).inverse()
            if not diff.scale(inv).is_polynomial():
                return False
    return True


# -- stable-envelope axioms ----------------------------------------------------------------
AXIOMS = ("support", "diagonal", "offdiagonal", "gkm", "homogeneity")


def verify_stab_axioms(family: Sequence[GKMClass], sign: str = "-") -> dict:
    """Check the stable-envelope axioms for one class per fixed point.

    sign "-" : support in {v >= u}, diagonal +-(repelling Euler class);
    sign "+" : support in {v <= u}, diagonal +-(attracting Euler class).
    The diagonal sign must agree with the polarization at k = 0."""
    sp = family[0].space
    P = sp.P
    td = sp.tangent
    points = []
    for i, g in enumerate(family):
        u = sp.reps[i]
        res = {}
        allowed = [P.bruhat_leq(u, v) if sign == "-" else P.bruhat_leq(v, u) for v in sp.reps]
        res["support"] = all(allowed[j] or g.values[j].is_zero() for j in range(sp.n))
        diag = g.values[i]
        normal = td.normal_minus(i) if sign == "-" else td.normal_plus(i)
        eps0 = td.epsilon[i]
        ok = False
        if diag.is_scalar():
            d = diag.scalar_part()
            for s in (1, -1):
                if d == normal * s and (normal * s).specialize(kk=0) == eps0:
                    ok = True
        res["diagonal"] = ok
        off = True
        for j in range(sp.n):
            if j == i:
                continue
            for c in g.values[j].terms.values():
                if not c.is_polynomial() or not c.specialize(kk=0).is_zero():
                    off = False
        res["offdiagonal"] = off
        res["gkm"] = is_gkm(g)
        res["homogeneity"] = g.is_homogeneous(P.dim)
        points.append({"point": u.name, **res})
    ok = all(p[a] for p in points for a in AXIOMS)
    return {"sign": sign, "points": points, "pass": ok}


# -- basis expansions ------------------------------------------------------------------------
def expand_in_basis(g: GKMClass, basis: str = "stable") -> list[NovikovPoly]:
    """Coefficients c_u with g = sum c_u B(u), B = Stab^- or Schubert.

    Both bases have restrictions supported on {v >= u}; the system is solved
    by increasing length."""
    sp = g.space
    fam = stab_minus_all(sp) if basis == "stable" else schubert_all(sp)
    coeffs: list[NovikovPoly] = []
    for i in range(sp.n):
        acc = g.values[i]
        for p in range(i):
            c = coeffs[p]
            if c.is_zero():
                continue
            r = fam[p].values[i]
            if r.is_zero():
                continue
            acc = acc - (c * r).map_exponents(sp.canon)
        diag = fam[i].values[i].scalar_part()
        coeffs.append(acc.scale(diag.inverse()))
    return coeffs


def combine(sp: GKMSpace, coeffs: Sequence[NovikovPoly], basis: str = "stable",
            ambient: str = COTANGENT) -> GKMClass:
    fam = stab_minus_all(sp) if basis == "stable" else schubert_all(sp)
    out = sp.zero(ambient)
    for c, b in zip(coeffs, fam):
        if not c.is_zero():
            out = out + GKMClass(sp, b.values, ambient).scale_nov(c)
    return out


# -- tables ------------------------------------------------------------------------------------
def restriction_table(sp: GKMSpace, classes: dict) -> list[dict]:
    rows = []
    for i, u in enumerate(sp.reps):
        row = {"point": u.name}
        for name, g in classes.items():
            row[name] = to_string_novikov(g.values[i])
        rows.append(row)
    return rows


def table_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def table_to_json(rows: list[dict]) -> str:
    return json.dumps(rows, indent=1)
