"""The extended affine Weyl group W ⋉ Λ.

An element ``AffineElt(w, lam)`` stands for x = w t_lam with lam in
simple-coroot coordinates.  Affine simple reflections are s_1..s_r and
s_0 = s_theta t_{-theta^vee}.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .rootdata import ParabolicData, RootSystem, WeylElt, norm_q


class AffineElt:
    __slots__ = ("w", "lam", "_hash", "_len")

    def __init__(self, w: WeylElt, lam: Sequence):
        self.w = w
        self.lam = tuple(norm_q(x) for x in lam)
        self._hash = hash((w.idx, self.lam))
        self._len = None

    @property
    def rs(self) -> RootSystem:
        return self.w.rs

    def __eq__(self, other):
        return isinstance(other, AffineElt) and self.w == other.w and self.lam == other.lam

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "AffineElt") -> "AffineElt":
        # (w t_lam)(u t_mu) = wu t_{u^{-1} lam + mu}
        rs = self.rs
        uinv = rs.inverse(other.w)
        lam = rs.act_coweight(uinv, self.lam)
        return AffineElt(rs.mul(self.w, other.w), tuple(a + b for a, b in zip(lam, other.lam)))

    def inverse(self) -> "AffineElt":
        rs = self.rs
        wl = rs.act_coweight(self.w, self.lam)
        return AffineElt(rs.inverse(self.w), tuple(-x for x in wl))

    @property
    def length(self) -> int:
        if self._len is None:
            self._len = aff_length(self)
        return self._len

    def is_translation(self) -> bool:
        return self.w.is_identity()

    def __repr__(self):
        return f"AffineElt({format_affine(self)})"


def identity(rs: RootSystem) -> AffineElt:
    return AffineElt(rs.e, (0,) * rs.rank)


def translation(rs: RootSystem, lam: Sequence) -> AffineElt:
    return AffineElt(rs.e, lam)


def finite(w: WeylElt) -> AffineElt:
    return AffineElt(w, (0,) * w.rs.rank)


def simple_reflection(rs: RootSystem, i: int) -> AffineElt:
    if i == 0:
        th = rs.reflection(rs.theta_index)
        return AffineElt(th, tuple(-x for x in rs.theta_coroot))
    return finite(rs.s[i])


def aff_length(x: AffineElt) -> int:
    """sum_{a>0} |<a,lam>| + #{a>0: wa<0, <a,lam> >= 0} - #{a>0: wa<0, <a,lam> < 0}."""
    rs = x.rs
    pairs = rs.coweight_pairings(x.lam)
    total = sum(abs(pairs[k]) for k in range(rs.n_pos))
    for k in x.w.inversions:
        total += 1 if pairs[k] >= 0 else -1
    return int(total)


def affine_inversion_count(x: AffineElt) -> int:
    """Independent oracle: count positive affine roots sent to negative ones.

    With the action a - n*hbar -> w(a) - (n - <a,lam>) hbar on affine roots,
    positive affine roots are a - n hbar (a>0, n>=0) and -a - n hbar (a>0, n>=1)."""
    rs = x.rs
    pairs = rs.coweight_pairings(x.lam)
    count = 0
    for k in range(rs.n_pos):
        p = pairs[k]
        wk_pos = rs.is_positive(x.w.perm[k])
        # a - n hbar  maps to  w(a) - (n - p) hbar;  -a - n hbar maps to -w(a) - (n + p) hbar
        bound = abs(p) + 2 + 2  # finitely many n can flip sign
        for n in range(0, bound + 1):
            m = n - p
            if not _positive_affine(wk_pos, m):
                count += 1
        for n in range(1, bound + 1):
            m = n + p
            if not _positive_affine(not wk_pos, m):
                count += 1
    return count


def _positive_affine(root_positive: bool, n: int) -> bool:
    # b - n hbar with b a finite root is positive iff n > 0, or n == 0 and b > 0
    return n > 0 or (n == 0 and root_positive)


def right_mul_simple(x: AffineElt, i: int) -> AffineElt:
    return x * simple_reflection(x.rs, i)


def is_right_descent(x: AffineElt, i: int) -> bool:
    return aff_length(right_mul_simple(x, i)) < aff_length(x)


def reduced_word(x: AffineElt) -> tuple[AffineElt, tuple]:
    """(pi, word) with x = pi s_{i1} ... s_{il}, chosen by smallest right descent."""
    rs = x.rs
    letters = []
    cur = x
    n = aff_length(cur)
    while n > 0:
        for i in range(rs.rank + 1):
            nxt = right_mul_simple(cur, i)
            m = aff_length(nxt)
            if m < n:
                letters.append(i)
                cur, n = nxt, m
                break
        else:
            raise RuntimeError(f"no descent found for {x!r} of positive length")
    return cur, tuple(reversed(letters))


def all_reduced_words(x: AffineElt) -> list[tuple]:
    """Every reduced word (with common length-0 prefix pi) of x."""
    out: list = []

    def rec(cur, suffix):
        n = aff_length(cur)
        if n == 0:
            out.append(tuple(suffix))
            return
        for i in range(cur.rs.rank + 1):
            nxt = right_mul_simple(cur, i)
            if aff_length(nxt) < n:
                rec(nxt, [i] + suffix)

    rec(x, [])
    return sorted(set(out))


def from_word(rs: RootSystem, word: Sequence[int], pi: AffineElt | None = None) -> AffineElt:
    x = pi if pi is not None else identity(rs)
    for i in word:
        x = x * simple_reflection(rs, i)
    return x


@lru_cache(maxsize=None)
def omega(rs: RootSystem) -> tuple:
    """Length-zero elements, one per class of Lambda / Q^vee, identity first."""
    out = [identity(rs)]
    if rs.lattice == "coweight":
        minuscule = [j for j in range(1, rs.rank + 1) if rs.roots_simple[rs.theta_index][j - 1] == 1]
        for j in minuscule:
            orbit = {w.act_coweight(rs.fundamental_coweight(j)) for w in rs.W}
            found = [AffineElt(w, lam) for lam in sorted(orbit) for w in rs.W
                     if aff_length(AffineElt(w, lam)) == 0]
            assert len(found) == 1, found
            out.append(found[0])
    return tuple(out)


def omega_part(x: AffineElt) -> AffineElt:
    return reduced_word(x)[0]


def enumerate_elements(rs: RootSystem, max_length: int) -> list[AffineElt]:
    """All x in the extended affine Weyl group with l(x) <= max_length, sorted."""
    seen = {}
    layer = list(omega(rs))
    for x in layer:
        seen[x] = 0
    for n in range(1, max_length + 1):
        nxt = []
        for x in layer:
            for i in range(rs.rank + 1):
                y = right_mul_simple(x, i)
                if y not in seen and aff_length(y) == n:
                    seen[y] = n
                    nxt.append(y)
        layer = nxt
    return sorted(seen, key=sort_key)


def sort_key(x: AffineElt):
    pi, word = reduced_word(x)
    pis = omega(x.rs)
    return (aff_length(x), pis.index(pi) if pi in pis else 0, word)


def antidominant_data(lam: Sequence, rs: RootSystem) -> tuple[tuple, WeylElt]:
    """(lam^-, w) with lam^- antidominant in W.lam and w minimal with w(lam^-) = lam."""
    lam = tuple(norm_q(x) for x in lam)
    orbit = {rs.act_coweight(w, lam) for w in rs.W}
    anti = next(mu for mu in orbit
                if all(p <= 0 for p in rs.coweight_pairings(mu)[: rs.n_pos]))
    w = min((w for w in rs.W if rs.act_coweight(w, anti) == lam), key=lambda w: w.sort_key)
    return anti, w


def p_allowed_pair(x: AffineElt, u: WeylElt, P: ParabolicData) -> bool:
    rs = x.rs
    w, lam = x.w, x.lam
    pairs = rs.coweight_pairings(lam)
    pos = rs.is_positive
    for a in P.pos_roots_out:
        ua = u.perm[a]
        wua = w.perm[ua]
        p = pairs[ua]
        if pos(ua) == pos(wua):
            if p > 0:
                return False
        elif not pos(ua):
            if p > 1:
                return False
        elif p > -1:
            return False
    # alpha in R^+ ∩ u(R_P)
    uP = {u.perm[k] for k in P.roots_P}
    for a in range(rs.n_pos):
        if a in uP:
            want = 0 if pos(w.perm[a]) else -1
            if pairs[a] != want:
                return False
    return True


def p_allowed_coweight(lam: Sequence, P: ParabolicData) -> bool:
    rs = P.rs
    anti, w = antidominant_data(lam, rs)
    pairs = rs.coweight_pairings(anti)
    for a in P.pos_roots_P:
        want = 0 if rs.is_positive(w.perm[a]) else -1
        if pairs[a] != want:
            return False
    return True


def degree_defect(x: AffineElt, u: WeylElt, P: ParabolicData) -> int:
    """l(x) - l_P(u) + l_P(wu) + <2rho_P, u^{-1}(lam)>."""
    rs = x.rs
    uinv_lam = rs.act_coweight(rs.inverse(u), x.lam)
    return (aff_length(x) - P.ell(u) + P.ell(rs.mul(x.w, u))
            + int(rs.pair(P.two_rho_P, uinv_lam)))


# -- text format -------------------------------------------------------------------------
def format_affine(x: AffineElt) -> str:
    w = ".".join(f"s{i}" for i in x.w.word)
    lam = ",".join(str(c) for c in x.rs.to_lattice_coords(x.lam))
    return f"w={w};lam=({lam})"


def parse_affine(rs: RootSystem, text: str) -> AffineElt:
    """Parse "w=s1.s2;lam=(c1,...,cr)" (lattice coordinates) or a word "0.1.2"."""
    text = text.strip()
    if text.startswith("w="):
        wpart, _, lpart = text.partition(";")
        letters = [t for t in wpart[2:].split(".") if t]
        word = [int(t[1:]) if t.startswith("s") else int(t) for t in letters]
        w = rs.element(word)
        if not lpart.startswith("lam="):
            raise ValueError(f"bad element syntax {text!r}")
        lam = parse_coweight(rs, lpart[4:])
        return AffineElt(w, lam)
    word = [int(t) for t in text.split(".") if t != ""] if text not in ("", "e") else []
    for i in word:
        if not 0 <= i <= rs.rank:
            raise ValueError(f"affine index {i} out of range")
    return from_word(rs, word)


def parse_coweight(rs: RootSystem, text: str) -> tuple:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"bad coweight syntax {text!r}")
    vals = [int(t) for t in body[1:-1].split(",") if t.strip()]
    if len(vals) != rs.rank:
        raise ValueError(f"coweight needs {rs.rank} coordinates")
    return rs.from_lattice_coords(vals)
