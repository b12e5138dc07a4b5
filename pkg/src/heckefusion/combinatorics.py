"""Permutations, partitions, Young tableaux and the closed-form products
built from them (hook scalars, mixed hook ratios, eigenvalue predictions).

Permutations are plain tuples in one-line notation with entries ``1..n``.
Composition follows ``(s*t)(i) = s(t(i))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial
from typing import Iterator, Sequence

from .scalars import RationalFunction, qpow, rf

Permutation = tuple

__all__ = [
    "Permutation",
    "Partition",
    "StandardTableau",
    "identity",
    "compose",
    "inverse",
    "length",
    "simple",
    "word_to_perm",
    "reduced_word",
    "longest_element",
    "tau_permutation",
    "tau_word",
    "partitions_of",
    "standard_tableaux",
    "count_standard",
    "content",
    "column_tableau",
    "row_tableau",
    "rho_of",
    "a_sequences",
    "b_sequences",
    "rd_word",
    "rd_word_b",
    "d_value",
    "xi_partition",
    "xi_tableau",
    "eta_partition",
    "mixed_hook_ratio",
    "hook_scalar",
    "hook_scalar_hff",
    "hook_scalar_hf",
    "hook_product",
    "skew_nodes",
    "skew_cancellation_check",
    "young_subgroup_elements",
    "r_xi",
    "r_eta",
    "InvalidInsertion",
    "insertion_sequences",
    "skew_product",
]


class InvalidInsertion(ValueError):
    """An insertion sequence does not produce a partition."""


# --- permutations -----------------------------------------------------------

def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(s: Permutation, t: Permutation) -> Permutation:
    return tuple(s[i - 1] for i in t)


def inverse(s: Permutation) -> Permutation:
    out = [0] * len(s)
    for i, v in enumerate(s, 1):
        out[v - 1] = i
    return tuple(out)


def length(s: Permutation) -> int:
    n = len(s)
    return sum(1 for i in range(n) for j in range(i + 1, n) if s[i] > s[j])


def simple(n: int, i: int) -> Permutation:
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def word_to_perm(n: int, word: Sequence[int]) -> Permutation:
    p = identity(n)
    for i in word:
        p = compose(p, simple(n, i))
    return p


@lru_cache(maxsize=None)
def reduced_word(s: Permutation) -> tuple[int, ...]:
    """A reduced word ``(i1,...,iL)`` with ``s = s_{i1} ... s_{iL}``."""
    p = list(s)
    word = []
    # strip right descents: s = (s s_i) s_i when s(i) > s(i+1)
    while True:
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))


def longest_element(l: int) -> Permutation:
    if l < 1:
        raise ValueError("rank must be at least 1")
    return tuple(range(l, 0, -1))


def tau_permutation(l: int, m: int) -> Permutation:
    """``tau(i) = l+i`` for ``i <= m`` and ``tau(m+j) = j`` for ``j <= l``."""
    if l < 1 or m < 1:
        raise ValueError("l and m must be positive")
    return tuple([l + i for i in range(1, m + 1)] + list(range(1, l + 1)))


def tau_word(l: int, m: int) -> tuple[int, ...]:
    """Reduced word of tau: outer i = l..1, inner j = 1..m, letter i+j-1."""
    return tuple(i + j - 1 for i in range(l, 0, -1) for j in range(1, m + 1))


# --- partitions -------------------------------------------------------------

@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if int(p) != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {self.parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        return cls(tuple(int(x) for x in text.split(",")))

    def __str__(self):
        return ",".join(map(str, self.parts))

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, a: int) -> int:
        """1-based row length, zero past the last row."""
        return self.parts[a - 1] if 1 <= a <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @cached_property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= b) for b in range(1, self.parts[0] + 1)))

    @property
    def nodes(self) -> list[tuple[int, int]]:
        return [(a, b) for a, p in enumerate(self.parts, 1) for b in range(1, p + 1)]

    def contains(self, other: "Partition") -> bool:
        return all(self[a] >= other[a] for a in range(1, len(other) + 1))

    def hook(self, a: int, b: int) -> int:
        return self[a] + self.conjugate[b] - a - b + 1


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, in reverse lexicographic order."""
    out = []

    def rec(rest, maxp, acc):
        if rest == 0:
            out.append(Partition(tuple(acc)))
            return
        for p in range(min(rest, maxp), 0, -1):
            rec(rest - p, p, acc + [p])

    rec(n, n, [])
    return out


def _as_partition(x) -> Partition:
    if isinstance(x, Partition):
        return x
    if isinstance(x, str):
        return Partition.parse(x)
    if isinstance(x, int):
        return Partition((x,))
    return Partition(tuple(x))


# --- tableaux ---------------------------------------------------------------

@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        shape = Partition(tuple(len(r) for r in rows))
        n = shape.size
        if sorted(x for r in rows for x in r) != list(range(1, n + 1)):
            raise ValueError(f"entries of {rows} are not 1..{n}")
        for a, r in enumerate(rows):
            for b, x in enumerate(r):
                if b + 1 < len(r) and r[b + 1] <= x:
                    raise ValueError(f"row {a + 1} of {rows} not increasing")
                if a + 1 < len(rows) and b < len(rows[a + 1]) and rows[a + 1][b] <= x:
                    raise ValueError(f"column {b + 1} of {rows} not increasing")

    @cached_property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return self.shape.size

    @cached_property
    def node_of_entry(self) -> dict[int, tuple[int, int]]:
        return {x: (a, b) for a, r in enumerate(self.rows, 1) for b, x in enumerate(r, 1)}

    @cached_property
    def entry_of_node(self) -> dict[tuple[int, int], int]:
        return {v: k for k, v in self.node_of_entry.items()}

    def __call__(self, a: int, b: int) -> int:
        return self.rows[a - 1][b - 1]

    @cached_property
    def contents(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in (self.node_of_entry[i] for i in range(1, self.size + 1)))

    def column_of(self, i: int) -> int:
        return self.node_of_entry[i][1]

    def transpose(self) -> "StandardTableau":
        """The tableau of the conjugate shape with entry (b, a) = entry (a, b)."""
        lam = self.shape
        return StandardTableau(tuple(
            tuple(self(a, b) for a in range(1, lam.conjugate[b] + 1))
            for b in range(1, lam[1] + 1)
        ))

    def permuted(self, s: Permutation) -> "StandardTableau":
        """``s . self``: every entry i replaced by s(i); raises if not standard."""
        return StandardTableau(tuple(tuple(s[x - 1] for x in r) for r in self.rows))

    def swap_is_standard(self, k: int) -> bool:
        return abs(d_value(self, k)) >= 2

    def swapped(self, k: int) -> "StandardTableau":
        return self.permuted(simple(self.size, k))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self):
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.rows) + "]"


def standard_tableaux(lam) -> list[StandardTableau]:
    """All standard tableaux of shape lam, ordered lexicographically by the
    sequence (node of 1, node of 2, ...)."""
    lam = _as_partition(lam)
    return list(_standard_tableaux(lam.parts))


@lru_cache(maxsize=None)
def _standard_tableaux(parts: tuple[int, ...]) -> tuple[StandardTableau, ...]:
    n = sum(parts)
    out = []
    filled = [0] * len(parts)
    rows: list[list[int]] = [[] for _ in parts]

    def rec(i):
        if i > n:
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for a in range(len(parts)):
            if filled[a] < parts[a] and (a == 0 or filled[a - 1] > filled[a]):
                filled[a] += 1
                rows[a].append(i)
                rec(i + 1)
                rows[a].pop()
                filled[a] -= 1

    rec(1)
    return tuple(out)


def hook_product(lam) -> int:
    lam = _as_partition(lam)
    out = 1
    for a, b in lam.nodes:
        out *= lam.hook(a, b)
    return out


def count_standard(lam) -> int:
    """f_lambda by the hook-length count."""
    lam = _as_partition(lam)
    return factorial(lam.size) // hook_product(lam)


def content(tab: StandardTableau, i: int) -> int:
    a, b = tab.node_of_entry[i]
    return b - a


def column_tableau(lam) -> StandardTableau:
    lam = _as_partition(lam)
    conj = lam.conjugate
    rows = [[0] * lam[a] for a in range(1, len(lam) + 1)]
    k = 0
    for b in range(1, len(conj) + 1):
        for a in range(1, conj[b] + 1):
            k += 1
            rows[a - 1][b - 1] = k
    return StandardTableau(tuple(tuple(r) for r in rows))


def row_tableau(lam) -> StandardTableau:
    lam = _as_partition(lam)
    rows, k = [], 0
    for p in lam.parts:
        rows.append(tuple(range(k + 1, k + p + 1)))
        k += p
    return StandardTableau(tuple(rows))


def rho_of(tab: StandardTableau) -> Permutation:
    """The permutation rho with tab(a,b) = rho(column_tableau(a,b))."""
    col = column_tableau(tab.shape)
    rho = [0] * tab.size
    for node, x in col.entry_of_node.items():
        rho[x - 1] = tab.entry_of_node[node]
    return tuple(rho)


def a_sequences(tab: StandardTableau) -> list[tuple[int, ...]]:
    """``A_j`` for j = 1..l (index 0 holds A_1): the i < j placed after j in
    rho(1..l), listed in reverse order of appearance."""
    rho = rho_of(tab)
    pos = inverse(rho)
    out = []
    for j in range(1, tab.size + 1):
        sub = [i for i in rho if i < j and pos[i - 1] > pos[j - 1]]
        out.append(tuple(reversed(sub)))
    return out


def b_sequences(tab: StandardTableau) -> list[tuple[int, ...]]:
    """``B_j``: the i < j placed before j in rho(1..l), in order of appearance."""
    rho = rho_of(tab)
    pos = inverse(rho)
    return [tuple(i for i in rho if i < j and pos[i - 1] < pos[j - 1]) for j in range(1, tab.size + 1)]


def _word_from(seqs) -> tuple[int, ...]:
    return tuple(j - k for j, s in enumerate(seqs, 1) for k in range(1, len(s) + 1))


def rd_word(tab: StandardTableau) -> tuple[int, ...]:
    """Word for rho assembled from the A_j."""
    return _word_from(a_sequences(tab))


def rd_word_b(tab: StandardTableau) -> tuple[int, ...]:
    """Word for rho*w0 assembled from the B_j."""
    return _word_from(b_sequences(tab))


def d_value(tab: StandardTableau, k: int) -> int:
    c = tab.contents
    return c[k - 1] - c[k]


# --- insertion partitions ---------------------------------------------------

def xi_partition(lam, mu, iseq: Sequence[int]) -> Partition:
    lam, mu = _as_partition(lam), _as_partition(mu)
    iseq = tuple(iseq)
    if len(iseq) != len(lam):
        raise InvalidInsertion(f"need {len(lam)} insertion rows, got {len(iseq)}")
    if len(set(iseq)) != len(iseq) or any(i < 1 for i in iseq):
        raise InvalidInsertion(f"insertion rows must be distinct positive integers: {iseq}")
    top = max(len(mu), max(iseq, default=0))
    xi = [mu[i] for i in range(1, top + 1)]
    for a, i in enumerate(iseq, 1):
        xi[i - 1] += lam[a]
    for i in range(len(xi) - 1):
        if xi[i] < xi[i + 1]:
            raise InvalidInsertion(
                f"invalid insertion sequence {iseq}: row {i + 1} has {xi[i]} < {xi[i + 1]} in row {i + 2}")
    return Partition(tuple(xi))


def xi_tableau(lam, mu, iseq: Sequence[int], M: StandardTableau) -> StandardTableau:
    lam, mu = _as_partition(lam), _as_partition(mu)
    if M.shape != mu:
        raise ValueError("M must have shape mu")
    xi = xi_partition(lam, mu, iseq)
    m = mu.size
    col = column_tableau(lam)
    conj = lam.conjugate
    grid = {node: M.entry_of_node[node] for node in mu.nodes}
    for j in range(1, (lam[1] if len(lam) else 0) + 1):
        block = list(range(conj[j + 1] + 1, conj[j] + 1))
        block.sort(key=lambda a: iseq[a - 1])
        for k, a in enumerate(block, 1):
            i_a = iseq[a - 1]
            for b in range(1, lam[a] + 1):
                grid[(i_a, mu[i_a] + b)] = m + col(conj[j + 1] + k, b)
    rows = tuple(tuple(grid[(a, b)] for b in range(1, xi[a] + 1)) for a in range(1, len(xi) + 1))
    return StandardTableau(rows)


def eta_partition(lam, mu, jseq: Sequence[int]) -> Partition:
    lam, mu = _as_partition(lam), _as_partition(mu)
    return xi_partition(lam.conjugate, mu.conjugate, jseq).conjugate


# --- closed-form products ---------------------------------------------------

def _t(t) -> RationalFunction:
    return t if isinstance(t, RationalFunction) else rf(t)


def _factor(t: RationalFunction, k: int) -> RationalFunction:
    """``t - q^k``, rejecting an identically zero factor."""
    f = t - qpow(k)
    if f.is_zero():
        raise ZeroDivisionError(f"factor t - q^{k} vanishes")
    return f


def mixed_hook_ratio(lam, mu, t) -> RationalFunction:
    """Product over the common nodes of lam and mu of
    ``(t - q^(-2 h'))/(t - q^(2 h))`` with h = lam_a + mu*_b - a - b + 1 and
    h' = mu_a + lam*_b - a - b + 1."""
    lam, mu, t = _as_partition(lam), _as_partition(mu), _t(t)
    lc, mc = lam.conjugate, mu.conjugate
    num = den = RationalFunction.ONE
    for a, b in lam.nodes:
        if b > mu[a]:
            continue
        num = num * (t - qpow(-2 * (mu[a] + lc[b] - a - b + 1)))
        den = den * _factor(t, 2 * (lam[a] + mc[b] - a - b + 1))
    return num / den


def hook_scalar_hff(lam) -> RationalFunction:
    lam = _as_partition(lam)
    q2 = qpow(2)
    out = qpow(sum(p * (1 - p) for p in lam.parts))
    for a, b in lam.nodes:
        out = out * (1 - qpow(2 * lam.hook(a, b))) / (1 - q2)
    return out


def hook_scalar_hf(lam) -> RationalFunction:
    lam = _as_partition(lam)
    qm2 = qpow(-2)
    out = qpow(sum(p * (p - 1) for p in lam.conjugate.parts))
    for a, b in lam.nodes:
        out = out * (1 - qpow(-2 * lam.hook(a, b))) / (1 - qm2)
    return out


def hook_scalar(lam) -> RationalFunction:
    """h_lambda(q); the two product formulas are evaluated and compared."""
    x, y = hook_scalar_hff(lam), hook_scalar_hf(lam)
    if x != y:
        raise AssertionError(f"hook formulas disagree for {lam}: {x} vs {y}")
    return x


def skew_nodes(lam, mu) -> list[tuple[int, int]]:
    lam, mu = _as_partition(lam), _as_partition(mu)
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    return [(a, b) for a, b in lam.nodes if b > mu[a]]


def skew_product(lam, mu, t) -> RationalFunction:
    lam, mu, t = _as_partition(lam), _as_partition(mu), _t(t)
    lc, mc = lam.conjugate, mu.conjugate
    out = RationalFunction.ONE
    for a, b in skew_nodes(lam, mu):
        out = out * (t - qpow(-2 * (mu[a] + lc[b] - a - b + 1)))
        out = out / _factor(t, 2 * (lam[a] + mc[b] - a - b + 1))
    return out


def skew_cancellation_check(lam, mu, t) -> bool:
    return skew_product(lam, mu, t) == RationalFunction.ONE


def _block_group(n: int, blocks: Sequence[Sequence[int]]) -> list[Permutation]:
    out = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        p = list(range(1, n + 1))
        for blk, img in zip(blocks, choice):
            for x, y in zip(blk, img):
                p[x - 1] = y
        out.append(tuple(p))
    out.sort(key=lambda s: (length(s), s))
    return out


def young_subgroup_elements(lam, arrangement: str = "row") -> list[Permutation]:
    """Elements of a Young subgroup of S_l.

    ``row``: permutations preserving each row of the row tableau of lam.
    ``column``: the Young subgroup of the conjugate shape, i.e. permutations
    preserving each column of the column tableau of lam.
    """
    lam = _as_partition(lam)
    if arrangement == "row":
        tab = row_tableau(lam)
        blocks = tab.rows
    elif arrangement == "column":
        tab = column_tableau(lam)
        blocks = tab.transpose().rows
    else:
        raise ValueError(f"unknown arrangement {arrangement!r}")
    return _block_group(lam.size, blocks)


def r_xi(lam, mu, iseq: Sequence[int], t) -> RationalFunction:
    lam, mu, t = _as_partition(lam), _as_partition(mu), _t(t)
    if lam.size < 1:
        raise ValueError("lambda must be non-empty")
    xi_partition(lam, mu, iseq)
    lc = lam.conjugate
    out = RationalFunction.ONE
    for a, b in lam.nodes:
        i = iseq[a - 1]
        out = out * (t - qpow(-2 * (mu[i] + lc[b] - i - b + 1))) / _factor(t, 2 * b - 2 * a)
    return out


def r_eta(lam, mu, jseq: Sequence[int], t) -> RationalFunction:
    lam, mu, t = _as_partition(lam), _as_partition(mu), _t(t)
    if lam.size < 1:
        raise ValueError("lambda must be non-empty")
    eta_partition(lam, mu, jseq)
    mc = mu.conjugate
    out = RationalFunction.ONE
    for a, b in lam.nodes:
        j = jseq[b - 1]
        out = out * (t - qpow(2 * (lam[a] + mc[j] - a - j + 1))) / _factor(t, 2 * b - 2 * a)
    return out


def insertion_sequences(lam, mu, conjugate: bool = False) -> Iterator[tuple[int, ...]]:
    """All admissible insertion sequences (for xi, or for eta if conjugate)."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    if conjugate:
        lam, mu = lam.conjugate, mu.conjugate
    k = len(lam)
    top = len(mu) + k
    for seq in itertools.permutations(range(1, top + 1), k):
        try:
            xi_partition(lam, mu, seq)
        except InvalidInsertion:
            continue
        yield seq
