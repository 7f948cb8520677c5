"""The localized twisted group algebra Q(t)(hbar, k) ⋊ W̃.

Elements are finite sums sum_y c_y [y] with coefficients on the left.  The
coefficient-passing rule is

    [w t_lam] f = phi_x(f) [w t_lam],   phi_x(a) = w(a) + <a, lam> hbar

on linear forms a, with hbar and k fixed.  This is the convention under which
the Demazure-Lusztig generators satisfy the trigonometric DAHA relations (see
the tests).  The same class holds Gr-side elements, whose support consists of
pure translations.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping

from .affweyl import (AffineElt, aff_length, finite, identity, simple_reflection, translation)
from .exactalg import Poly, RatFn, Ring, linear_images, theta_k, to_string, poly_to_string
from .rootdata import RootSystem


def coefficient_ring(rs: RootSystem) -> Ring:
    return Ring.get(rs.rank)


_PHI_CACHE: dict = {}


def phi_images(x: AffineElt, ring: Ring) -> list[Poly]:
    key = (id(ring), x.w.rs.label, x.w.rs.lattice, x.w.idx, x.lam)
    imgs = _PHI_CACHE.get(key)
    if imgs is None:
        r = ring.rank
        cols = [[x.w.matrix[j][i] for j in range(r)] for i in range(r)]
        imgs = _PHI_CACHE[key] = linear_images(ring, cols, x.lam)
    return imgs


def phi(x: AffineElt, f: RatFn) -> RatFn:
    """The automorphism of the coefficient field induced by x."""
    if x.w.is_identity() and not any(x.lam):
        return f
    if f.is_constant():
        return f
    return f.compose_automorphism(phi_images(x, f.ring))


class TwistedElt:
    """sum_y c_y [y] with c_y rational functions (zero coefficients dropped)."""

    __slots__ = ("terms", "rs", "ring", "side")

    def __init__(self, rs: RootSystem, terms: Mapping[AffineElt, RatFn] | None = None,
                 side: str = "Fl", ring: Ring | None = None):
        self.rs = rs
        self.ring = ring or coefficient_ring(rs)
        self.side = side
        self.terms = {x: c for x, c in (terms or {}).items() if not c.is_zero()}

    # constructors
    @classmethod
    def basis(cls, x: AffineElt, coeff: RatFn | None = None, side: str = "Fl") -> "TwistedElt":
        ring = coefficient_ring(x.rs)
        return cls(x.rs, {x: coeff if coeff is not None else ring.one()}, side)

    @classmethod
    def scalar(cls, rs: RootSystem, f: RatFn) -> "TwistedElt":
        return cls(rs, {identity(rs): f})

    def copy(self, terms=None, side=None) -> "TwistedElt":
        return TwistedElt(self.rs, self.terms if terms is None else terms,
                          side or self.side, self.ring)

    # arithmetic
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, TwistedElt):
            return self.terms == other.terms
        return NotImplemented

    def __add__(self, other: "TwistedElt") -> "TwistedElt":
        out = dict(self.terms)
        for x, c in other.terms.items():
            prev = out.get(x)
            out[x] = c if prev is None else prev + c
        return self.copy(out)

    def __neg__(self):
        return self.copy({x: -c for x, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def lscale(self, f: RatFn | int | Fraction) -> "TwistedElt":
        """f * self (coefficient multiplies on the left)."""
        if not isinstance(f, RatFn):
            f = self.ring.const(f)
        return self.copy({x: f * c for x, c in self.terms.items()})

    def rscale(self, f: RatFn) -> "TwistedElt":
        """self * f."""
        return self.copy({x: c * phi(x, f) for x, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TwistedElt):
            return twisted_mul(self, other)
        if isinstance(other, (RatFn, int, Fraction)):
            return self.rscale(other if isinstance(other, RatFn) else self.ring.const(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (RatFn, int, Fraction)):
            return self.lscale(other)
        return NotImplemented

    def coeff(self, x: AffineElt) -> RatFn:
        return self.terms.get(x, self.ring.zero())

    def map_coeffs(self, fn) -> "TwistedElt":
        return self.copy({x: fn(c) for x, c in self.terms.items()})

    def support(self) -> list[AffineElt]:
        return sorted(self.terms, key=elt_key)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = set()
        for c in self.terms.values():
            if not c.is_homogeneous():
                return False
            degs.add(c.degree())
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    def specialize(self, **values) -> "TwistedElt":
        return self.map_coeffs(lambda c: c.specialize(**values))

    def __repr__(self):
        inner = " + ".join(f"[{to_string(c)}]*{x!r}" for x, c in sorted(self.terms.items(),
                                                                          key=lambda t: elt_key(t[0])))
        return f"TwistedElt({inner or '0'})"


def elt_key(x: AffineElt):
    return (aff_length(x), x.w.word, tuple(Fraction(c) for c in x.lam))


def twisted_mul(a: TwistedElt, b: TwistedElt) -> TwistedElt:
    out: dict = {}
    for x, f in a.terms.items():
        for y, g in b.terms.items():
            xy = x * y
            term = f * phi(x, g)
            prev = out.get(xy)
            out[xy] = term if prev is None else prev + term
    return a.copy(out)


def one(rs: RootSystem) -> TwistedElt:
    return TwistedElt.basis(identity(rs))


def linear_form(rs: RootSystem, weight, hbar=0) -> RatFn:
    return coefficient_ring(rs).linear(weight, hbar=hbar)


def affine_simple_root(rs: RootSystem, i: int) -> RatFn:
    """a_i for i >= 1; a_0 = -hbar - theta."""
    if i == 0:
        return linear_form(rs, tuple(-x for x in rs.theta), hbar=-1)
    return linear_form(rs, rs.simple_root(i))


# -- Demazure-Lusztig and nil-Hecke bases -----------------------------------------------
class HeckeData:
    """Per-root-system caches of A_x, D_x and DL expansions of [x]."""

    _instances: dict = {}

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.ring = coefficient_ring(rs)
        self._A: dict = {}
        self._D: dict = {}
        self._expand_basis: dict = {}

    @classmethod
    def of(cls, rs: RootSystem) -> "HeckeData":
        inst = cls._instances.get(id(rs))
        if inst is None or inst.rs is not rs:
            inst = cls._instances[id(rs)] = cls(rs)
        return inst

    def generator(self, i: int) -> TwistedElt:
        rs, ring = self.rs, self.ring
        si = simple_reflection(rs, i)
        a = affine_simple_root(rs, i)
        kk = ring.k / a
        return TwistedElt(rs, {si: ring.one() + kk, identity(rs): -kk})

    def nil_generator(self, i: int) -> TwistedElt:
        rs = self.rs
        inv = affine_simple_root(rs, i).inverse()
        return TwistedElt(rs, {identity(rs): inv, simple_reflection(rs, i): -inv})

    def _build(self, x: AffineElt, cache: dict, gen) -> TwistedElt:
        hit = cache.get(x)
        if hit is not None:
            return hit
        n = aff_length(x)
        if n == 0:
            val = TwistedElt.basis(x)
        else:
            i = next(i for i in range(self.rs.rank + 1)
                     if aff_length(x * simple_reflection(self.rs, i)) < n)
            prefix = x * simple_reflection(self.rs, i)
            val = twisted_mul(self._build(prefix, cache, gen), gen(i))
        cache[x] = val
        return val

    def A(self, x: AffineElt) -> TwistedElt:
        return self._build(x, self._A, self.generator)

    def D(self, x: AffineElt) -> TwistedElt:
        return self._build(x, self._D, self.nil_generator)

    def along_word(self, pi: AffineElt, word, nil: bool = False) -> TwistedElt:
        gen = self.nil_generator if nil else self.generator
        val = TwistedElt.basis(pi)
        for i in word:
            val = twisted_mul(val, gen(i))
        return val

    def expand_basis_element(self, x: AffineElt) -> dict:
        hit = self._expand_basis.get(x)
        if hit is None:
            hit = self._expand_basis[x] = expand_in_dl_basis(TwistedElt.basis(x))
        return hit


def dl_generator(rs: RootSystem, i) -> TwistedElt:
    """A_{s_i} for an index i in 0..r, or A_pi = [pi] for a length-0 AffineElt."""
    if isinstance(i, AffineElt):
        if aff_length(i) != 0:
            raise ValueError("A_pi requires a length-zero element")
        return TwistedElt.basis(i)
    if not 0 <= i <= rs.rank:
        raise ValueError(f"affine index {i} out of range")
    return HeckeData.of(rs).generator(i)


def dl_element(x: AffineElt) -> TwistedElt:
    return HeckeData.of(x.rs).A(x)


def nilhecke_element(x: AffineElt) -> TwistedElt:
    return HeckeData.of(x.rs).D(x)


def expand_in_dl_basis(a: TwistedElt) -> dict:
    """Coefficients c_x with a = sum c_x A_x (left coefficients)."""
    hd = HeckeData.of(a.rs)
    rem = dict(a.terms)
    out: dict = {}
    while rem:
        x = max(rem, key=elt_key)
        Ax = hd.A(x)
        c = rem[x] / Ax.terms[x]
        out[x] = c
        for y, cy in Ax.terms.items():
            v = rem.get(y)
            v = -(c * cy) if v is None else v - c * cy
            if v.is_zero():
                rem.pop(y, None)
            else:
                rem[y] = v
    return out


def in_dl_lattice(a: TwistedElt) -> bool:
    """Membership in the span of A_x over polynomials."""
    return all(c.is_polynomial() for c in expand_in_dl_basis(a).values())


def polynomial_rep(a: TwistedElt, f: RatFn) -> RatFn:
    """Action on functions: c [y] . f = c * phi_y(f)."""
    out = a.ring.zero()
    for y, c in a.terms.items():
        out = out + c * phi(y, f)
    return out


def spherical_idempotents(rs: RootSystem) -> tuple[TwistedElt, TwistedElt]:
    hd = HeckeData.of(rs)
    e = TwistedElt(rs)
    em = TwistedElt(rs)
    for w in rs.W:
        A = hd.A(finite(w))
        e = e + A
        em = em + (A if w.length % 2 == 0 else -A)
    inv = Fraction(1, len(rs.W))
    return e.lscale(inv), em.lscale(inv)


def theta_twist(a: TwistedElt) -> TwistedElt:
    return a.map_coeffs(theta_k)


# -- Gr side -------------------------------------------------------------------------------
def gr_unit(rs: RootSystem) -> TwistedElt:
    return TwistedElt(rs, {identity(rs): coefficient_ring(rs).one()}, side="Gr")


def gr_pushforward(a: TwistedElt) -> TwistedElt:
    """Point classes push forward to point classes: [w t_lam] -> [t_{w(lam)}]."""
    rs = a.rs
    out: dict = {}
    for x, c in a.terms.items():
        t = translation(rs, rs.act_coweight(x.w, x.lam))
        prev = out.get(t)
        out[t] = c if prev is None else prev + c
    return TwistedElt(rs, out, side="Gr")


def gr_module_action(a: TwistedElt, v: TwistedElt) -> TwistedElt:
    """f[w t_lam] . g[t_mu] = f phi_x(g) [t_{w(lam+mu)}]."""
    rs = a.rs
    out: dict = {}
    for x, f in a.terms.items():
        for t, g in v.terms.items():
            key = translation(rs, rs.act_coweight(x.w, tuple(p + q for p, q in zip(x.lam, t.lam))))
            term = f * phi(x, g)
            prev = out.get(key)
            out[key] = term if prev is None else prev + term
    return TwistedElt(rs, out, side="Gr")


def gr_convolution(a: TwistedElt, b: TwistedElt) -> TwistedElt:
    """Convolution of translation-supported elements (the twisted product)."""
    out = twisted_mul(a, b)
    out.side = "Gr"
    return out


def gr_is_w_invariant(v: TwistedElt) -> bool:
    rs = v.rs
    for i in range(1, rs.rank + 1):
        if gr_module_action(TwistedElt.basis(finite(rs.s[i])), v) != v:
            return False
    return True


# -- serialization ---------------------------------------------------------------------------
def to_json(a: TwistedElt) -> list:
    rs = a.rs
    names = a.ring.names
    rows = []
    for x in sorted(a.terms, key=elt_key):
        c = a.terms[x]
        rows.append({"w": list(x.w.word), "lam": [int(v) for v in rs.to_lattice_coords(x.lam)],
                     "num": poly_to_string(c.num, names), "den": poly_to_string(c.den, names)})
    return rows


def dumps(a: TwistedElt) -> str:
    return json.dumps(to_json(a), sort_keys=True)
