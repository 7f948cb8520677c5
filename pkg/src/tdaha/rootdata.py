"""Finite root data, Weyl groups and parabolic coset combinatorics.

Conventions used throughout the package:

* weights (elements of t*) are integer vectors in the basis of fundamental
  weights; the simple root a_i is row i of the Cartan matrix;
* coweights are vectors in simple-coroot coordinates (exact rationals), so the
  pairing <m, c> of a weight with a coweight is the plain dot product;
* ``cartan[i][j] = <a_i, a_j^vee>``;
* simple reflections are indexed 1..r (index 0 is reserved for the affine
  reflection in :mod:`tdaha.affweyl`).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

MAX_RANK = 4

Vec = tuple  # tuple of int / Fraction


def norm_q(x) -> int | Fraction:
    """Return ``x`` as an int when it is integral, else as a Fraction."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _euclid_simple_roots(t: str, r: int) -> list[list[Fraction]]:
    e = lambda n, i: [Fraction(int(j == i)) for j in range(n)]
    sub = lambda a, b: [x - y for x, y in zip(a, b)]
    add = lambda a, b: [x + y for x, y in zip(a, b)]
    if t == "A":
        return [sub(e(r + 1, i), e(r + 1, i + 1)) for i in range(r)]
    if t in "BCD":
        out = [sub(e(r, i), e(r, i + 1)) for i in range(r - 1)]
        if t == "B":
            out.append(e(r, r - 1))
        elif t == "C":
            out.append([2 * x for x in e(r, r - 1)])
        else:
            out.append(add(e(r, r - 2), e(r, r - 1)))
        return out
    if t == "G":
        return [sub(e(3, 0), e(3, 1)), add(sub(e(3, 1), [2 * x for x in e(3, 0)]), e(3, 2))]
    if t == "F":
        half = Fraction(1, 2)
        return [sub(e(4, 1), e(4, 2)), sub(e(4, 2), e(4, 3)), e(4, 3),
                [half, -half, -half, -half]]
    raise ValueError(t)


def _e_cartan(r: int) -> list[list[int]]:
    # Bourbaki labelling: chain 1-3-4-5-...-r with node 2 attached to node 4.
    edges = [(1, 3), (3, 4), (2, 4)] + [(k, k + 1) for k in range(4, r)]
    c = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for i, j in edges:
        c[i - 1][j - 1] = c[j - 1][i - 1] = -1
    return c


def cartan_matrix(t: str, r: int) -> list[list[int]]:
    """Cartan matrix with entries <a_i, a_j^vee>."""
    if t == "E":
        return _e_cartan(r)
    simple = _euclid_simple_roots(t, r)
    dot = lambda a, b: sum(x * y for x, y in zip(a, b))
    return [[int(2 * dot(simple[i], simple[j]) / dot(simple[j], simple[j]))
             for j in range(r)] for i in range(r)]


_VALID = {"A": range(1, 100), "B": range(2, 100), "C": range(2, 100),
          "D": range(4, 100), "E": range(6, 9), "F": range(4, 5), "G": range(2, 3)}


class WeylElt:
    """An element of a finite Weyl group, interned by its root system.

    Equality is identity of the underlying linear map (interning makes this an
    index comparison)."""

    __slots__ = ("rs", "idx", "matrix", "length", "inversions", "_word", "_perm")

    def __init__(self, rs: "RootSystem", idx: int, matrix: tuple, length: int):
        self.rs = rs
        self.idx = idx
        self.matrix = matrix
        self.length = length
        self.inversions: frozenset = frozenset()
        self._word: tuple | None = None
        self._perm: tuple | None = None

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.rs is other.rs and self.idx == other.idx

    def __hash__(self):
        return hash(("W", self.idx))

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return self.rs.mul(self, other)

    def __repr__(self):
        return f"WeylElt({self.name})"

    @property
    def sort_key(self):
        return (self.length, self.word)

    @property
    def word(self) -> tuple:
        """Lexicographically smallest reduced word (indices 1..r)."""
        return self._word

    @property
    def name(self) -> str:
        return ".".join(f"s{i}" for i in self.word) if self.word else "e"

    def inverse(self) -> "WeylElt":
        return self.rs.inverse(self)

    def is_identity(self) -> bool:
        return self.length == 0

    @property
    def perm(self) -> tuple:
        """Images of all roots (indices into ``rs.roots``)."""
        return self._perm

    def act_weight(self, m: Sequence) -> tuple:
        return tuple(sum(a * b for a, b in zip(row, m)) for row in self.matrix)

    def act_coweight(self, c: Sequence) -> tuple:
        return self.rs.act_coweight(self, c)

    def act_root(self, k: int) -> int:
        return self._perm[k]


class RootSystem:
    """Irreducible finite root datum together with its Weyl group.

    ``lattice`` selects the translation lattice used by the affine group:
    ``"coroot"`` (simply connected group) or ``"coweight"`` (adjoint group)."""

    def __init__(self, cartan_type: str, rank: int, lattice: str = "coroot",
                 max_rank: int = MAX_RANK):
        t = cartan_type.upper()
        if t not in _VALID:
            raise ValueError(f"unknown Cartan type {cartan_type!r}")
        if rank not in _VALID[t] or rank > max_rank:
            raise ValueError(f"rank {rank} not supported for type {t} (max rank {max_rank})")
        if lattice not in ("coroot", "coweight"):
            raise ValueError(f"unknown lattice mode {lattice!r}")
        self.cartan_type = t
        self.rank = r = rank
        self.lattice = lattice
        self.cartan = tuple(tuple(row) for row in cartan_matrix(t, r))
        self._build_roots()
        self._build_weyl()

    # -- roots ---------------------------------------------------------------
    def _build_roots(self):
        r, C = self.rank, self.cartan
        unit = lambda i: tuple(int(j == i) for j in range(r))
        coroot_of = {unit(i): unit(i) for i in range(r)}
        queue = list(coroot_of)
        while queue:
            b = queue.pop()
            cb = coroot_of[b]
            for j in range(r):
                pb = sum(b[i] * C[i][j] for i in range(r))
                pc = sum(C[j][i] * cb[i] for i in range(r))
                nb = tuple(b[i] - (pb if i == j else 0) for i in range(r))
                nc = tuple(cb[i] - (pc if i == j else 0) for i in range(r))
                if nb not in coroot_of:
                    coroot_of[nb] = nc
                    queue.append(nb)
        pos = sorted((b for b in coroot_of if all(x >= 0 for x in b)),
                     key=lambda b: (sum(b), tuple(-x for x in b)))
        self.n_pos = len(pos)
        self.roots_simple: list[tuple] = pos + [tuple(-x for x in b) for b in pos]
        self.coroots: list[tuple] = [coroot_of[b] for b in self.roots_simple]
        self.roots: list[tuple] = [self.simple_to_weight(b) for b in self.roots_simple]
        self.root_index = {m: k for k, m in enumerate(self.roots)}
        self.simple_root_index = [self.root_index[self.simple_to_weight(unit(i))] for i in range(r)]
        top = max(range(self.n_pos), key=lambda k: sum(self.roots_simple[k]))
        self.theta_index = top

    def simple_to_weight(self, b: Sequence) -> tuple:
        """Root-lattice vector in simple-root coordinates -> weight coordinates."""
        r, C = self.rank, self.cartan
        return tuple(sum(b[j] * C[j][i] for j in range(r)) for i in range(r))

    @property
    def positive_roots(self) -> list[tuple]:
        return self.roots[: self.n_pos]

    def is_positive(self, k: int) -> bool:
        return k < self.n_pos

    def neg(self, k: int) -> int:
        return k + self.n_pos if k < self.n_pos else k - self.n_pos

    def simple_root(self, i: int) -> tuple:
        return self.cartan[i - 1]

    def simple_coroot(self, i: int) -> tuple:
        return tuple(int(j == i - 1) for j in range(self.rank))

    @property
    def theta(self) -> tuple:
        return self.roots[self.theta_index]

    @property
    def theta_coroot(self) -> tuple:
        return self.coroots[self.theta_index]

    @cached_property
    def two_rho(self) -> tuple:
        return tuple(sum(col) for col in zip(*self.positive_roots))

    @staticmethod
    def pair(m: Sequence, c: Sequence):
        return norm_q(sum(Fraction(a) * b for a, b in zip(m, c)))

    def coweight_pairings(self, c: Sequence) -> tuple:
        """<a, c> for every root a, as a tuple indexed like ``roots``."""
        pos = tuple(norm_q(sum(a * b for a, b in zip(m, c))) for m in self.positive_roots)
        return pos + tuple(-x for x in pos)

    # -- Weyl group ------------------------------------------------------------
    def _build_weyl(self):
        r, C = self.rank, self.cartan
        ident = tuple(tuple(int(a == b) for b in range(r)) for a in range(r))
        self._simple_mats = [
            tuple(tuple(int(a == b) - (C[i][a] if b == i else 0) for b in range(r)) for a in range(r))
            for i in range(r)]
        matmul = lambda A, B: tuple(tuple(sum(A[a][k] * B[k][b] for k in range(r)) for b in range(r))
                                    for a in range(r))
        self._matmul = matmul
        elems = {ident: 0}
        layer = [ident]
        lengths = [0]
        mats = [ident]
        while layer:
            nxt = []
            for M in layer:
                for i in range(r):
                    N = matmul(M, self._simple_mats[i])
                    if N not in elems:
                        elems[N] = len(mats)
                        mats.append(N)
                        lengths.append(lengths[elems[M]] + 1)
                        nxt.append(N)
            layer = nxt
        self._by_matrix = elems
        self.W: list[WeylElt] = [WeylElt(self, k, M, lengths[k]) for k, M in enumerate(mats)]
        for w in self.W:
            w._perm = tuple(self.root_index[w.act_weight(m)] for m in self.roots)
            w.inversions = frozenset(k for k in range(self.n_pos) if w._perm[k] >= self.n_pos)
            assert len(w.inversions) == w.length
        self._by_perm = {w._perm: w for w in self.W}
        self.e = self.W[0]
        self.s = [None] + [self.W[self._by_matrix[S]] for S in self._simple_mats]
        self._mul: dict = {}
        self._inv: dict = {}
        for w in sorted(self.W, key=lambda w: w.length):
            if w.length == 0:
                w._word = ()
                continue
            i = min(i for i in range(1, r + 1) if self.is_left_descent(w, i))
            w._word = (i,) + self.mul(self.s[i], w).word
        self.w0 = max(self.W, key=lambda w: w.length)

    def element(self, word: Iterable[int]) -> WeylElt:
        w = self.e
        for i in word:
            if not 1 <= i <= self.rank:
                raise ValueError(f"simple index {i} out of range")
            w = self.mul(w, self.s[i])
        return w

    def from_matrix(self, M) -> WeylElt:
        return self.W[self._by_matrix[tuple(tuple(row) for row in M)]]

    def mul(self, a: WeylElt, b: WeylElt) -> WeylElt:
        key = (a.idx, b.idx)
        hit = self._mul.get(key)
        if hit is None:
            hit = self._mul[key] = self.W[self._by_matrix[self._matmul(a.matrix, b.matrix)]]
        return hit

    def inverse(self, w: WeylElt) -> WeylElt:
        hit = self._inv.get(w.idx)
        if hit is None:
            hit = self._inv[w.idx] = self._by_perm[self._inverse_perm(w)]
        return hit

    def is_left_descent(self, w: WeylElt, i: int) -> bool:
        """l(s_i w) < l(w), i.e. w^{-1}(a_i) < 0."""
        winv_perm = self._inverse_perm(w)
        return winv_perm[self.simple_root_index[i - 1]] >= self.n_pos

    def _inverse_perm(self, w: WeylElt) -> tuple:
        perm = w._perm
        out = [0] * len(perm)
        for k, v in enumerate(perm):
            out[v] = k
        return tuple(out)

    def is_right_descent(self, w: WeylElt, i: int) -> bool:
        return w._perm[self.simple_root_index[i - 1]] >= self.n_pos

    def act_coweight(self, w: WeylElt, c: Sequence) -> tuple:
        # contragredient action: transpose of the weight matrix of w^{-1}
        Minv = self.inverse(w).matrix
        r = self.rank
        return tuple(norm_q(sum(Minv[k][a] * c[k] for k in range(r))) for a in range(r))

    def reflection(self, k: int) -> WeylElt:
        """The reflection s_a for the root with index k."""
        r = self.rank
        m, cv = self.roots[k], self.coroots[k]
        # s_a(x) = x - <x, a^vee> a on weight coordinates; <x, a^vee> = sum x_i cv_i
        M = tuple(tuple(int(a == b) - m[a] * cv[b] for b in range(r)) for a in range(r))
        return self.from_matrix(M)

    # -- Bruhat order ----------------------------------------------------------
    def bruhat_leq(self, u: WeylElt, v: WeylElt) -> bool:
        """u <= v via the subword property along the stored reduced word of v."""
        return u.idx in self._below(v)

    def _below(self, v: WeylElt) -> frozenset:
        cache = self.__dict__.setdefault("_below_cache", {})
        hit = cache.get(v.idx)
        if hit is None:
            reach = {self.e.idx}
            for i in v.word:
                si = self.s[i]
                reach |= {self.mul(self.W[x], si).idx for x in reach}
            hit = cache[v.idx] = frozenset(reach)
        return hit

    # -- lattice ---------------------------------------------------------------
    @cached_property
    def cartan_inverse(self) -> tuple:
        r = self.rank
        A = [[Fraction(self.cartan[i][j]) for j in range(r)] + [Fraction(int(i == j)) for j in range(r)]
             for i in range(r)]
        for c in range(r):
            p = next(k for k in range(c, r) if A[k][c] != 0)
            A[c], A[p] = A[p], A[c]
            piv = A[c][c]
            A[c] = [x / piv for x in A[c]]
            for k in range(r):
                if k != c and A[k][c] != 0:
                    f = A[k][c]
                    A[k] = [x - f * y for x, y in zip(A[k], A[c])]
        return tuple(tuple(norm_q(x) for x in row[r:]) for row in A)

    def fundamental_coweight(self, j: int) -> tuple:
        """varpi_j^vee in simple-coroot coordinates (the dual basis to the simple roots)."""
        # <a_i, varpi_j^vee> = delta_ij; a_i = row i of C, so varpi_j^vee = column j of C^{-1}
        Ci = self.cartan_inverse
        return tuple(Ci[k][j - 1] for k in range(self.rank))

    def lattice_basis(self) -> list[tuple]:
        if self.lattice == "coroot":
            return [self.simple_coroot(i) for i in range(1, self.rank + 1)]
        return [self.fundamental_coweight(j) for j in range(1, self.rank + 1)]

    def to_lattice_coords(self, c: Sequence) -> tuple:
        """Coordinates of a coweight in the lattice basis (integers iff c is in the lattice)."""
        if self.lattice == "coroot":
            return tuple(norm_q(x) for x in c)
        return tuple(norm_q(sum(a * b for a, b in zip(row, c))) for row in self.cartan)

    def from_lattice_coords(self, n: Sequence) -> tuple:
        basis = self.lattice_basis()
        return tuple(norm_q(sum(Fraction(n[k]) * basis[k][i] for k in range(self.rank)))
                     for i in range(self.rank))

    def in_lattice(self, c: Sequence) -> bool:
        return all(isinstance(x, int) for x in self.to_lattice_coords(c))

    def coweight_norm(self, c: Sequence) -> int:
        return max((abs(x) for x in self.to_lattice_coords(c)), default=0)

    def lattice_points(self, bound: int) -> Iterator[tuple]:
        """All lattice coweights with max-abs lattice coordinate <= bound."""
        for n in product(range(-bound, bound + 1), repeat=self.rank):
            yield self.from_lattice_coords(n)

    def __repr__(self):
        return f"RootSystem({self.cartan_type}{self.rank}, {self.lattice})"

    @property
    def label(self) -> str:
        return f"{self.cartan_type}{self.rank}"


_RS_CACHE: dict = {}


def build_root_system(cartan_type: str, rank: int, lattice: str = "coroot",
                      max_rank: int = MAX_RANK) -> RootSystem:
    key = (cartan_type.upper(), rank, lattice)
    rs = _RS_CACHE.get(key)
    if rs is None:
        if rank > max_rank:
            raise ValueError(f"rank {rank} exceeds maximum {max_rank}")
        rs = _RS_CACHE[key] = RootSystem(cartan_type, rank, lattice, max_rank=max(max_rank, rank))
    return rs


def weyl_act(w: WeylElt, v: Sequence, kind: str = "weight") -> tuple:
    if kind == "weight":
        return w.act_weight(v)
    if kind == "coweight":
        return w.act_coweight(v)
    raise ValueError(kind)


def bruhat_leq(u: WeylElt, v: WeylElt) -> bool:
    return u.rs.bruhat_leq(u, v)


class ParabolicData:
    """Parabolic subgroup data for a subset S_P of simple indices."""

    def __init__(self, rs: RootSystem, subset: Iterable[int] = ()):
        S = frozenset(subset)
        if not S <= set(range(1, rs.rank + 1)):
            raise ValueError(f"parabolic subset {sorted(S)} out of range")
        self.rs = rs
        self.subset = S
        self.pos_roots_P = frozenset(
            k for k in range(rs.n_pos)
            if all(b == 0 or (i + 1) in S for i, b in enumerate(rs.roots_simple[k])))
        self.roots_P = self.pos_roots_P | {rs.neg(k) for k in self.pos_roots_P}
        self.pos_roots_out = tuple(k for k in range(rs.n_pos) if k not in self.pos_roots_P)
        self.W_P = [w for w in rs.W if w.inversions <= self.pos_roots_P]
        simple_P = [rs.simple_root_index[i - 1] for i in sorted(S)]
        reps = [u for u in rs.W if all(u.perm[k] < rs.n_pos for k in simple_P)]
        reps.sort(key=lambda u: u.sort_key)
        self.reps: list[WeylElt] = reps
        self.rep_index = {u.idx: n for n, u in enumerate(reps)}
        coset = {}
        for n, u in enumerate(reps):
            for v in self.W_P:
                coset[rs.mul(u, v).idx] = n
        assert len(coset) == len(rs.W)
        self._coset = coset
        self.dim = len(self.pos_roots_out)
        self.two_rho_P = tuple(sum(rs.roots[k][i] for k in self.pos_roots_out)
                               for i in range(rs.rank))
        self._d = self._torsion_moduli()
        self.normalizer_reps = [u for u in reps if self._normalizes(u)]

    # cosets
    def coset(self, w: WeylElt) -> int:
        return self._coset[w.idx]

    def rep(self, w: WeylElt) -> WeylElt:
        return self.reps[self._coset[w.idx]]

    def ell(self, u: WeylElt) -> int:
        return self.rep(u).length

    def bruhat_leq(self, u: WeylElt, v: WeylElt) -> bool:
        return self.rs.bruhat_leq(self.rep(u), self.rep(v))

    @property
    def is_borel(self) -> bool:
        return not self.subset

    def _normalizes(self, w: WeylElt) -> bool:
        rs = self.rs
        winv = rs.inverse(w)
        WP = {v.idx for v in self.W_P}
        return all(rs.mul(rs.mul(w, rs.s[i]), winv).idx in WP for i in self.subset)

    # coinvariants
    def _torsion_moduli(self) -> dict:
        """For i in S_P, the generator d_i of {<a_i, lam> : lam in Lambda}.

        The span of {lam - v lam : v in W_P} equals the direct sum of
        d_i Z a_i^vee over i in S_P, so reducing the a_i^vee coordinate modulo
        d_i gives a canonical coinvariant representative."""
        from math import gcd
        rs = self.rs
        out = {}
        for i in self.subset:
            vals = [rs.pair(rs.simple_root(i), b) for b in rs.lattice_basis()]
            g = 0
            for v in vals:
                g = gcd(g, int(v))
            out[i] = g
        return out

    def canon(self, c: Sequence) -> tuple:
        """Canonical representative of the class of a coweight in the coinvariants."""
        out = []
        for i, x in enumerate(c, start=1):
            if i in self._d:
                d = self._d[i]
                x = Fraction(x) - d * (Fraction(x) // d)
            out.append(norm_q(x))
        return tuple(out)

    @property
    def torsion_free(self) -> bool:
        return all(d == 1 for d in self._d.values())

    def d_sign(self, u: WeylElt, c: Sequence) -> int:
        """d_{u,lambda} = <u(2rho_P), lambda>."""
        return int(self.rs.pair(u.act_weight(self.two_rho_P), c))

    def __repr__(self):
        return f"ParabolicData({self.rs.label}, S_P={sorted(self.subset)})"


def minimal_coset_reps(P: ParabolicData) -> list[WeylElt]:
    return list(P.reps)
