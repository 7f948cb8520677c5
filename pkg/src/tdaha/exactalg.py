"""Exact rational functions in (t, hbar, k) and Novikov Laurent polynomials.

Polynomials are ``flint.fmpq_mpoly`` objects over generators ``w1..wr`` (the
fundamental weights, i.e. linear coordinates on t), ``h`` (hbar) and ``kk``
(the conical parameter k), with graded lexicographic order.  A
:class:`RatFn` is a reduced fraction whose denominator has leading
coefficient 1, so equality is syntactic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

import flint

Poly = flint.fmpq_mpoly


class Ring:
    """Polynomial context Q[w1..wr, h, kk] (plus optional extra generators)."""

    _cache: dict = {}

    def __init__(self, rank: int, extra: tuple = ()):
        self.rank = rank
        self.extra = tuple(extra)
        self.names = tuple(f"w{i}" for i in range(1, rank + 1)) + ("h", "kk") + self.extra
        self.ctx = flint.fmpq_mpoly_ctx.get(self.names, "deglex")
        self.gens = self.ctx.gens()
        self.nvars = len(self.names)
        self.h_index = rank
        self.k_index = rank + 1
        self._zero = RatFn(self.ctx.constant(0), self.ctx.constant(1), self, True)
        self._one = RatFn(self.ctx.constant(1), self.ctx.constant(1), self, True)

    @classmethod
    def get(cls, rank: int, extra: Iterable[str] = ()) -> "Ring":
        key = (rank, tuple(extra))
        ring = cls._cache.get(key)
        if ring is None:
            ring = cls._cache[key] = cls(rank, tuple(extra))
        return ring

    def __repr__(self):
        return f"Ring({','.join(self.names)})"

    # constructors
    def zero(self) -> "RatFn":
        return self._zero

    def one(self) -> "RatFn":
        return self._one

    def const(self, c) -> "RatFn":
        c = Fraction(c)
        return RatFn(self.ctx.constant(flint.fmpq(c.numerator, c.denominator)),
                     self.ctx.constant(1), self, True)

    def poly(self, p: Poly) -> "RatFn":
        return RatFn(p, self.ctx.constant(1), self, True)

    def gen(self, name: str) -> "RatFn":
        return self.poly(self.gens[self.names.index(name)])

    @property
    def hbar(self) -> "RatFn":
        return self.poly(self.gens[self.h_index])

    @property
    def k(self) -> "RatFn":
        return self.poly(self.gens[self.k_index])

    def linear_poly(self, weight: Sequence, hbar=0, k=0, const=0) -> Poly:
        """The polynomial sum_i weight_i w_i + hbar*h + k*kk + const."""
        p = self.ctx.constant(_fq(const))
        for i, c in enumerate(weight):
            if c:
                p = p + _fq(c) * self.gens[i]
        if hbar:
            p = p + _fq(hbar) * self.gens[self.h_index]
        if k:
            p = p + _fq(k) * self.gens[self.k_index]
        return p

    def linear(self, weight: Sequence, hbar=0, k=0, const=0) -> "RatFn":
        return self.poly(self.linear_poly(weight, hbar, k, const))

    def frac(self, num: Poly, den: Poly) -> "RatFn":
        return RatFn(num, den, self)


def _fq(c) -> flint.fmpq:
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.p), int(c.q))


class RatFn:
    """Canonical reduced fraction num/den of polynomials in one :class:`Ring`."""

    __slots__ = ("num", "den", "ring", "_hash")

    def __init__(self, num: Poly, den: Poly, ring: Ring, canonical: bool = False):
        if not canonical:
            if den.is_zero():
                raise ZeroDivisionError("zero denominator")
            if num.is_zero():
                num, den = ring.ctx.constant(0), ring.ctx.constant(1)
            elif den.is_constant():
                c = den.leading_coefficient()
                if c != 1:
                    num, den = num / c, ring.ctx.constant(1)
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num, den = num / g, den / g
                c = den.leading_coefficient()
                if c != 1:
                    num, den = num / c, den / c
        self.num = num
        self.den = den
        self.ring = ring
        self._hash = None

    # -- predicates ---------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return _to_fraction(self.num.leading_coefficient()) if not self.num.is_zero() else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RatFn):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self.num.terms()), tuple(self.den.terms())))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    # -- arithmetic ---------------------------------------------------------------
    def _coerce(self, other) -> "RatFn":
        if isinstance(other, RatFn):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        raise TypeError(f"cannot combine RatFn with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        a, b, c, d = self.num, self.den, o.num, o.den
        ctx = self.ring
        if b.is_one() and d.is_one():
            return RatFn(a + c, b, ctx, True)
        if b == d:
            return RatFn(a + c, b, ctx)
        if b.is_one():
            return RatFn(a * d + c, d, ctx, True)
        if d.is_one():
            return RatFn(a + c * b, b, ctx, True)
        g = b.gcd(d)
        if g.is_one():
            return _make_reduced(a * d + c * b, b * d, ctx, None)
        bg, dg = b / g, d / g
        t = a * dg + c * bg
        return _make_reduced(t, bg * d, ctx, g)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den, self.ring, True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, RatFn):
            o = other
        elif isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ring.zero()
            return RatFn(self.num * _fq(other), self.den, self.ring, True)
        else:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return self.ring.zero()
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.is_one() and d.is_one():
            return RatFn(a * c, b, self.ring, True)
        g1 = a.gcd(d) if not d.is_one() else None
        g2 = c.gcd(b) if not b.is_one() else None
        if g1 is not None and not g1.is_one():
            a, d = a / g1, d / g1
        if g2 is not None and not g2.is_one():
            c, b = c / g2, b / g2
        num, den = a * c, b * d
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num / lc, den / lc
        return RatFn(num, den, self.ring, True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFn":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num / lc, den / lc
        return RatFn(num, den, self.ring, True)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return RatFn(self.num / _fq(other), self.den, self.ring, True)
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFn(self.num ** n, self.den ** n, self.ring, True)

    # -- substitutions ------------------------------------------------------------
    def compose(self, images: Sequence[Poly]) -> "RatFn":
        """Substitute polynomial images for all generators (renormalizing)."""
        num = self.num.compose(*images)
        if self.den.is_one():
            return RatFn(num, self.den, self.ring, True)
        return RatFn(num, self.den.compose(*images), self.ring)

    def compose_automorphism(self, images: Sequence[Poly]) -> "RatFn":
        """Substitution by an invertible affine-linear map: no gcd needed."""
        num = self.num.compose(*images)
        if self.den.is_one():
            return RatFn(num, self.den, self.ring, True)
        den = self.den.compose(*images)
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num / lc, den / lc
        return RatFn(num, den, self.ring, True)

    def specialize(self, **values) -> "RatFn":
        """Set generators (by name, e.g. ``h=0`` or ``kk=0``) to rational constants."""
        ring = self.ring
        images = list(ring.gens)
        for name, v in values.items():
            images[ring.names.index(name)] = ring.ctx.constant(_fq(v))
        num = self.num.compose(*images)
        den = self.den.compose(*images)
        if den.is_zero():
            raise ZeroDivisionError(f"denominator vanishes at {values}")
        return RatFn(num, den, ring)

    # -- gradings -----------------------------------------------------------------
    def is_homogeneous(self) -> bool:
        return _is_homog(self.num) and _is_homog(self.den)

    def degree(self) -> int:
        """Polynomial degree num - den (cohomological degree is twice this)."""
        if not self.is_homogeneous():
            raise ValueError("inhomogeneous rational function")
        if self.num.is_zero():
            return 0
        return self.num.total_degree() - self.den.total_degree()

    def var_degree(self, index: int) -> int:
        """Degree in one generator of num minus den (the order at infinity)."""
        if self.num.is_zero():
            raise ValueError("zero has no degree")
        return self.num.degrees()[index] - self.den.degrees()[index]

    def __repr__(self):
        return f"RatFn({to_string(self)})"

    def __str__(self):
        return to_string(self)


def _make_reduced(t: Poly, den: Poly, ring: Ring, g: Poly | None) -> RatFn:
    # Henrici: for reduced inputs the only possible common factor of t and den divides g
    if t.is_zero():
        return ring.zero()
    if g is not None:
        h = t.gcd(g)
        if not h.is_one():
            t, den = t / h, den / h
    lc = den.leading_coefficient()
    if lc != 1:
        t, den = t / lc, den / lc
    return RatFn(t, den, ring, True)


def _is_homog(p: Poly) -> bool:
    if p.is_zero():
        return True
    degs = {sum(m) for m in p.monoms()}
    return len(degs) == 1


# -- substitution helpers ------------------------------------------------------------
def linear_images(ring: Ring, w_images: Sequence[Sequence], w_shift: Sequence = None,
                  k_image: Poly | None = None) -> list[Poly]:
    """Images of generators for w_i -> sum_j w_images[i][j] w_j + w_shift[i] h."""
    out = []
    for i in range(ring.rank):
        out.append(ring.linear_poly(w_images[i], hbar=w_shift[i] if w_shift else 0))
    out.append(ring.gens[ring.h_index])
    out.append(k_image if k_image is not None else ring.gens[ring.k_index])
    out.extend(ring.gens[ring.k_index + 1:])
    return out


def hbar_shift(f: RatFn, lam: Sequence) -> RatFn:
    """f^lam: substitute each generator varpi_i -> varpi_i + <varpi_i, lam> hbar.

    ``lam`` is in simple-coroot coordinates, so <varpi_i, lam> = lam_i."""
    r = f.ring.rank
    ident = [[int(i == j) for j in range(r)] for i in range(r)]
    return f.compose_automorphism(linear_images(f.ring, ident, lam))


def weyl_subst(f: RatFn, w) -> RatFn:
    """w(f): substitute each generator varpi_i -> w(varpi_i)."""
    r = f.ring.rank
    cols = [[w.matrix[j][i] for j in range(r)] for i in range(r)]
    return f.compose_automorphism(linear_images(f.ring, cols))


def theta_k(f: RatFn) -> RatFn:
    """Substitute k -> k - hbar."""
    ring = f.ring
    img = ring.gens[ring.k_index] - ring.gens[ring.h_index]
    return f.compose_automorphism(linear_images(ring, [[int(i == j) for j in range(ring.rank)]
                                                       for i in range(ring.rank)], k_image=img))


def theta_k_inverse(f: RatFn) -> RatFn:
    ring = f.ring
    img = ring.gens[ring.k_index] + ring.gens[ring.h_index]
    return f.compose_automorphism(linear_images(ring, [[int(i == j) for j in range(ring.rank)]
                                                       for i in range(ring.rank)], k_image=img))


# -- Laurent expansion in 1/k ------------------------------------------------------
def _coeffs_in_var(p: Poly, index: int, ring: Ring) -> dict:
    out: dict = {}
    for mon, c in p.terms():
        e = mon[index]
        m = list(mon)
        m[index] = 0
        out.setdefault(e, {})[tuple(m)] = c
    return {e: ring.ctx.from_dict(d) for e, d in out.items()}


def leading_k_coefficient(f: RatFn, d: int) -> tuple[RatFn, RatFn]:
    """Coefficient of k^d in the expansion of f at k = infinity, and f minus that term.

    Raises ValueError when f grows faster than k^d."""
    ring = f.ring
    if f.is_zero():
        return ring.zero(), ring.zero()
    kidx = ring.k_index
    n = f.num.degrees()[kidx]
    m = f.den.degrees()[kidx]
    if n - m > d:
        raise ValueError(f"pole of order {n - m} at k = infinity exceeds requested order {d}")
    if n - m < d:
        return ring.zero(), f
    lead_num = _coeffs_in_var(f.num, kidx, ring)[n]
    lead_den = _coeffs_in_var(f.den, kidx, ring)[m]
    c = RatFn(lead_num, lead_den, ring)
    kd = ring.k ** d if d >= 0 else ring.k.inverse() ** (-d)
    return c, f - c * kd


# -- serialization -------------------------------------------------------------------
def poly_to_string(p: Poly, names: Sequence[str]) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for mon, c in p.terms():
        fr = _to_fraction(c)
        s = f"{fr.numerator}/{fr.denominator}"
        for name, e in zip(names, mon):
            if e == 1:
                s += f"*{name}"
            elif e > 1:
                s += f"*{name}^{e}"
        terms.append(s)
    return " + ".join(terms)


def to_string(f: RatFn) -> str:
    num = poly_to_string(f.num, f.ring.names)
    if f.den.is_one():
        return num
    return f"({num})/({poly_to_string(f.den, f.ring.names)})"


# -- Novikov polynomials ---------------------------------------------------------------
class NovikovPoly:
    """Finite sum of q^mu * RatFn with canonical exponent tuples.

    Exponent canonicalization (for coinvariant lattices) is the caller's job;
    this class only adds exponents and compares them syntactically."""

    __slots__ = ("terms", "ring")

    def __init__(self, terms: Mapping[tuple, RatFn] | None, ring: Ring):
        self.ring = ring
        self.terms = {e: c for e, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def scalar(cls, f: RatFn, rank: int) -> "NovikovPoly":
        return cls({(0,) * rank: f}, f.ring)

    @classmethod
    def monomial(cls, e: tuple, f: RatFn) -> "NovikovPoly":
        return cls({e: f}, f.ring)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, NovikovPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "NovikovPoly") -> "NovikovPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            prev = out.get(e)
            out[e] = c if prev is None else prev + c
        return NovikovPoly(out, self.ring)

    def __neg__(self):
        return NovikovPoly({e: -c for e, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f: RatFn) -> "NovikovPoly":
        if f.is_zero():
            return NovikovPoly({}, self.ring)
        return NovikovPoly({e: c * f for e, c in self.terms.items()}, self.ring)

    def shift(self, e: tuple, canon: Callable | None = None) -> "NovikovPoly":
        """Multiply by q^e."""
        out: dict = {}
        for e0, c in self.terms.items():
            key = tuple(a + b for a, b in zip(e0, e))
            if canon is not None:
                key = canon(key)
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
        return NovikovPoly(out, self.ring)

    def __mul__(self, other):
        if isinstance(other, RatFn):
            return self.scale(other)
        if isinstance(other, NovikovPoly):
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    prev = out.get(key)
                    out[key] = c1 * c2 if prev is None else prev + c1 * c2
            return NovikovPoly(out, self.ring)
        return NotImplemented

    __rmul__ = __mul__

    def map_coeffs(self, fn: Callable[[RatFn], RatFn]) -> "NovikovPoly":
        return NovikovPoly({e: fn(c) for e, c in self.terms.items()}, self.ring)

    def map_exponents(self, fn: Callable[[tuple], tuple]) -> "NovikovPoly":
        out: dict = {}
        for e, c in self.terms.items():
            key = fn(e)
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
        return NovikovPoly(out, self.ring)

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.terms.values())

    def is_scalar(self) -> bool:
        return all(not any(e) for e in self.terms)

    def scalar_part(self) -> RatFn:
        out = self.ring.zero()
        for e, c in self.terms.items():
            if not any(e):
                out = out + c
        return out

    def sorted_items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: tuple(Fraction(x) for x in kv[0]))

    def __repr__(self):
        return f"NovikovPoly({to_string_novikov(self)})"


def to_string_novikov(p: NovikovPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.sorted_items():
        if any(e):
            parts.append(f"q^({','.join(str(x) for x in e)})*[{to_string(c)}]")
        else:
            parts.append(f"[{to_string(c)}]")
    return " + ".join(parts)


# -- exact linear algebra over RatFn ---------------------------------------------------
def solve_linear(matrix: list[list[RatFn]], rhs: list[RatFn]) -> list[RatFn]:
    """Solve a square system by Gauss-Jordan elimination over the fraction field."""
    n = len(matrix)
    A = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for c in range(n):
        p = next((k for k in range(c, n) if not A[k][c].is_zero()), None)
        if p is None:
            raise ZeroDivisionError("singular system")
        A[c], A[p] = A[p], A[c]
        inv = A[c][c].inverse()
        A[c] = [x * inv for x in A[c]]
        for k in range(n):
            if k != c and not A[k][c].is_zero():
                f = A[k][c]
                A[k] = [x - f * y if not y.is_zero() else x for x, y in zip(A[k], A[c])]
    return [A[k][n] for k in range(n)]

