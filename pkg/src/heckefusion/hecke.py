"""The finite Hecke algebra H_l on the basis T_sigma.

Elements are sparse maps from permutations (one-line tuples) to scalars.
The scalar type is anything with field arithmetic and truthiness for zero,
so the same code runs over Q(q) and over Q(q)(eps).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .combinatorics import (
    _as_partition,
    identity,
    inverse,
    length,
    reduced_word,
    rho_of,
    row_tableau,
    young_subgroup_elements,
)
from .scalars import RationalFunction, qpow, rf

__all__ = [
    "AlgebraElement",
    "RankMismatch",
    "ZETA",
    "gen",
    "unit",
    "t_word",
    "t_letters",
    "inv_letters",
    "mul",
    "inv_basis",
    "inv_gen",
    "murphy",
    "murphy_inv",
    "evaluation_murphy",
    "alpha",
    "beta",
    "embed_low",
    "embed_shift",
    "p_symmetrizer",
    "q_antisymmetrizer",
    "a_symmetrizer",
    "coefficient",
    "symmetric_sum",
]

ZETA = qpow(1) - qpow(-1)


class RankMismatch(ValueError):
    pass


def _scalar(c):
    if isinstance(c, (int, Fraction, str)):
        return rf(c)
    return c


def _acc(out: dict, key, val):
    v = out.get(key)
    out[key] = val if v is None else v + val


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if v}


class AlgebraElement:
    """``sum c_sigma T_sigma`` in H_rank; zero coefficients are never stored."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping | None = None):
        self.rank = rank
        if terms:
            clean = {}
            for s, c in terms.items():
                s = tuple(s)
                if len(s) != rank:
                    raise RankMismatch(f"permutation {s} has degree {len(s)}, expected {rank}")
                c = _scalar(c)
                if c:
                    clean[s] = c
            self.terms = clean
        else:
            self.terms = {}

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> "AlgebraElement":
        obj = cls.__new__(cls)
        obj.rank = rank
        obj.terms = terms
        return obj

    # basic protocol -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, s) -> object:
        return self.terms.get(tuple(s), RationalFunction.ZERO)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def _check(self, other: "AlgebraElement"):
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            other = unit(self.rank).scale(_scalar(other))
        self._check(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            _acc(out, s, c)
        return AlgebraElement._raw(self.rank, _clean(out))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw(self.rank, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            other = unit(self.rank).scale(_scalar(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "AlgebraElement":
        c = _scalar(c)
        if not c:
            return AlgebraElement._raw(self.rank, {})
        return AlgebraElement._raw(self.rank, _clean({s: v * c for s, v in self.terms.items()}))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        c = _scalar(c)
        return self.scale(1 / c if not isinstance(c, RationalFunction) else c.inv())

    def map_coefficients(self, f: Callable) -> "AlgebraElement":
        return AlgebraElement._raw(self.rank, _clean({s: f(c) for s, c in self.terms.items()}))

    # fast one-sided generator actions ------------------------------------
    def rmul_gen(self, i: int, a=None, b=None) -> "AlgebraElement":
        """``self * (a T_i + b)``; defaults give ``self * T_i``."""
        n = self.rank
        if not 1 <= i < n:
            raise ValueError(f"generator T_{i} not in H_{n}")
        a = RationalFunction.ONE if a is None else a
        b = RationalFunction.ZERO if b is None else b
        a_desc = a * ZETA + b
        j = i - 1
        out: dict = {}
        for s, c in self.terms.items():
            t = s[:j] + (s[j + 1], s[j]) + s[j + 2:]
            if a:
                _acc(out, t, c * a)
            if s[j] < s[j + 1]:
                if b:
                    _acc(out, s, c * b)
            elif a_desc:
                _acc(out, s, c * a_desc)
        return AlgebraElement._raw(n, _clean(out))

    def lmul_gen(self, i: int, a=None, b=None) -> "AlgebraElement":
        """``(a T_i + b) * self``."""
        n = self.rank
        if not 1 <= i < n:
            raise ValueError(f"generator T_{i} not in H_{n}")
        a = RationalFunction.ONE if a is None else a
        b = RationalFunction.ZERO if b is None else b
        a_desc = a * ZETA + b
        out: dict = {}
        for s, c in self.terms.items():
            pi = s.index(i)
            pj = s.index(i + 1)
            t = list(s)
            t[pi], t[pj] = i + 1, i
            t = tuple(t)
            if a:
                _acc(out, t, c * a)
            if pi < pj:
                if b:
                    _acc(out, s, c * b)
            elif a_desc:
                _acc(out, s, c * a_desc)
        return AlgebraElement._raw(n, _clean(out))

    def rmul_word(self, word: Iterable[int]) -> "AlgebraElement":
        out = self
        for i in word:
            out = out.rmul_gen(i)
        return out

    def rmul_inv_word(self, word: Iterable[int]) -> "AlgebraElement":
        """``self * T_{i1}^{-1} * T_{i2}^{-1} ...``."""
        out = self
        for i in word:
            out = out.rmul_gen(i, RationalFunction.ONE, -ZETA)
        return out

    def lmul_word(self, word: Iterable[int]) -> "AlgebraElement":
        """``T_{i1} T_{i2} ... * self``."""
        out = self
        for i in reversed(tuple(word)):
            out = out.lmul_gen(i)
        return out

    # display --------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (length(kv[0]), kv[0]))

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [{"perm": list(s), "coeff": c.to_json()} for s, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "AlgebraElement":
        return cls(obj["rank"], {tuple(t["perm"]): RationalFunction.from_json(t["coeff"]) for t in obj["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for s, c in self.sorted_terms():
            w = reduced_word(s)
            basis = "*".join(f"T{i}" for i in w)
            cs = str(c)
            if not basis:
                parts.append(cs)
            elif cs == "1":
                parts.append(basis)
            elif cs == "-1":
                parts.append("-" + basis)
            else:
                parts.append(f"({cs})*{basis}")
        return " + ".join(parts)

    def __repr__(self):
        return f"AlgebraElement(rank={self.rank}, {self})"


# --- constructors -----------------------------------------------------------

def unit(l: int, scalar=None) -> AlgebraElement:
    c = RationalFunction.ONE if scalar is None else _scalar(scalar)
    return AlgebraElement._raw(l, {identity(l): c} if c else {})


def gen(l: int, i: int) -> AlgebraElement:
    if not 1 <= i < l:
        raise ValueError(f"generator T_{i} not in H_{l}")
    s = list(range(1, l + 1))
    s[i - 1], s[i] = s[i], s[i - 1]
    return AlgebraElement._raw(l, {tuple(s): RationalFunction.ONE})


def t_word(l: int, s) -> AlgebraElement:
    s = tuple(s)
    if len(s) != l:
        raise RankMismatch(f"permutation {s} not in S_{l}")
    return AlgebraElement._raw(l, {s: RationalFunction.ONE})


def t_letters(l: int, word: Iterable[int]) -> AlgebraElement:
    """``T_{i1} T_{i2} ...`` for an arbitrary (not necessarily reduced) word."""
    return unit(l).rmul_word(word)


def inv_letters(l: int, word: Iterable[int]) -> AlgebraElement:
    """``T_{i1}^{-1} T_{i2}^{-1} ...``."""
    return unit(l).rmul_inv_word(word)


def inv_gen(l: int, i: int) -> AlgebraElement:
    return gen(l, i) - ZETA


def inv_basis(s, l: int | None = None) -> AlgebraElement:
    """``T_s^{-1}`` = product of inverted letters of a reduced word, reversed."""
    s = tuple(s)
    l = len(s) if l is None else l
    return inv_letters(l, reversed(reduced_word(s)))


def coefficient(a: AlgebraElement, s) -> object:
    return a.coefficient(s)


# --- multiplication ---------------------------------------------------------

def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Product in H_l. The side with smaller support is expanded into words."""
    a._check(b)
    if not a.terms or not b.terms:
        return AlgebraElement._raw(a.rank, {})
    n = a.rank
    out: dict = {}
    if len(b.terms) <= len(a.terms):
        memo = {identity(n): a}

        def a_times(s):
            got = memo.get(s)
            if got is None:
                w = reduced_word(s)
                i = w[-1]
                t = list(s)
                t[i - 1], t[i] = t[i], t[i - 1]
                got = a_times(tuple(t)).rmul_gen(i)
                memo[s] = got
            return got

        for s, c in b.terms.items():
            for u, v in a_times(s).terms.items():
                _acc(out, u, v * c)
    else:
        memo = {identity(n): b}

        def times_b(s):
            got = memo.get(s)
            if got is None:
                w = reduced_word(s)
                i = w[0]
                # s = s_i * s', so T_s b = T_i (T_{s'} b)
                t = list(s)
                pi, pj = t.index(i), t.index(i + 1)
                t[pi], t[pj] = i + 1, i
                got = times_b(tuple(t)).lmul_gen(i)
                memo[s] = got
            return got

        for s, c in a.terms.items():
            for u, v in times_b(s).terms.items():
                _acc(out, u, c * v)
    return AlgebraElement._raw(n, _clean(out))


# --- Murphy elements --------------------------------------------------------

def murphy(l: int, i: int) -> AlgebraElement:
    """``X_i = T_{i-1} ... T_1 T_1 ... T_{i-1}``."""
    if not 1 <= i <= l:
        raise ValueError(f"Murphy index {i} out of range for H_{l}")
    down = list(range(i - 1, 0, -1))
    return t_letters(l, down + down[::-1])


def murphy_inv(l: int, i: int) -> AlgebraElement:
    if not 1 <= i <= l:
        raise ValueError(f"Murphy index {i} out of range for H_{l}")
    down = list(range(i - 1, 0, -1))
    return inv_letters(l, down + down[::-1])


def evaluation_murphy(l: int, i: int, z) -> AlgebraElement:
    """Image ``z X_i`` of the affine generator Y_i under evaluation at z."""
    z = _scalar(z)
    if not z:
        raise ValueError("evaluation parameter must be nonzero")
    return murphy(l, i).scale(z)


# --- structural maps --------------------------------------------------------

def alpha(a: AlgebraElement) -> AlgebraElement:
    """Anti-automorphism fixing every T_i: ``T_s -> T_{s^-1}``."""
    return AlgebraElement._raw(a.rank, {inverse(s): c for s, c in a.terms.items()})


def beta(a: AlgebraElement) -> AlgebraElement:
    """Automorphism over Q with q -> 1/q and T_i -> -T_i."""
    out = {}
    for s, c in a.terms.items():
        c = c.bar()
        out[s] = -c if length(s) % 2 else c
    return AlgebraElement._raw(a.rank, out)


def embed_low(a: AlgebraElement, L: int) -> AlgebraElement:
    """Standard embedding H_l -> H_L, T_i -> T_i."""
    return embed_shift(a, 0, L)


def embed_shift(a: AlgebraElement, m: int, L: int) -> AlgebraElement:
    """Embedding H_l -> H_L with T_i -> T_{i+m}."""
    n = a.rank
    if m < 0 or n + m > L:
        raise ValueError(f"cannot embed H_{n} into H_{L} with offset {m}")
    head = tuple(range(1, m + 1))
    tail = tuple(range(n + m + 1, L + 1))
    return AlgebraElement._raw(L, {head + tuple(x + m for x in s) + tail: c for s, c in a.terms.items()})


# --- symmetrizers -----------------------------------------------------------

def _inverse_sum(l: int, perms, weight: Callable[[int], RationalFunction]) -> AlgebraElement:
    out: dict = {}
    for s in perms:
        for u, v in inv_basis(s, l).scale(weight(length(s))).terms.items():
            _acc(out, u, v)
    return AlgebraElement._raw(l, _clean(out))


def p_symmetrizer(lam) -> AlgebraElement:
    """``sum over the row Young subgroup of q^{-len} T_s^{-1}``."""
    lam = _as_partition(lam)
    return _inverse_sum(lam.size, young_subgroup_elements(lam, "row"), lambda k: qpow(-k))


def q_antisymmetrizer(lam) -> AlgebraElement:
    """``sum over the Young subgroup of the conjugate shape of (-q)^{len} T_s^{-1}``."""
    lam = _as_partition(lam)
    return _inverse_sum(lam.size, young_subgroup_elements(lam, "column"), lambda k: qpow(k, (-1) ** k))


def a_symmetrizer(lam) -> AlgebraElement:
    """``P T_{rho^-1}^{-1} Q T_{rho^-1}`` with rho the row-tableau permutation."""
    lam = _as_partition(lam)
    l = lam.size
    rinv = inverse(rho_of(row_tableau(lam)))
    return p_symmetrizer(lam) * inv_basis(rinv, l) * q_antisymmetrizer(lam) * t_word(l, rinv)


def symmetric_sum(l: int, weight: Callable[[int], RationalFunction], inverted: bool) -> AlgebraElement:
    """``sum_s weight(len s) T_s`` (or ``T_s^{-1}``) over all of S_l."""
    perms = list(itertools.permutations(range(1, l + 1)))
    if inverted:
        return _inverse_sum(l, perms, weight)
    return AlgebraElement._raw(l, _clean({s: weight(length(s)) for s in perms}))
