"""The irreducible module V_lambda in the basis {G_Lambda}: generator
matrices, characters, Murphy spectra, branching, and the check that the
abstract matrices agree with the left action on the ideal H_l F_{column}."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import (
    Partition,
    _as_partition,
    compose,
    content,
    d_value,
    hook_scalar,
    identity,
    partitions_of,
    reduced_word,
    standard_tableaux,
    StandardTableau,
    word_to_perm,
)
from .fusion import FusionConfig, DEFAULT, fuse_G
from .hecke import ZETA, AlgebraElement, inv_basis, murphy
from .linalg import Basis, mat_eq, mat_identity, mat_mul
from .scalars import RationalFunction, qpow

__all__ = [
    "RelationFailure",
    "SeminormalRep",
    "build_rep",
    "represent",
    "character",
    "check_relations",
    "check_delta_expansion",
    "check_murphy_diagonal",
    "check_branching",
    "compare_with_ideal_model",
    "ideal_matrices",
    "specialize_rep",
    "check_classical_limit",
]


class RelationFailure(AssertionError):
    pass


@dataclass(frozen=True)
class SeminormalRep:
    shape: Partition
    basis: tuple[StandardTableau, ...]
    generator_matrices: tuple[tuple[tuple[RationalFunction, ...], ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        return self.shape.size

    def matrix(self, k: int) -> list:
        return [list(r) for r in self.generator_matrices[k - 1]]

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "basis": [t.to_json() for t in self.basis],
            "generators": [[[x.to_json() for x in row] for row in m] for m in self.generator_matrices],
        }


def action_coefficients(tab: StandardTableau, k: int):
    """(diagonal, off-diagonal) coefficients of T_k on G_Lambda; the second is
    None when the swapped tableau is not standard."""
    d = d_value(tab, k)
    if d == -1:
        return qpow(1), None
    if d == 1:
        return -qpow(-1), None
    diag = ZETA / (1 - qpow(2 * d))
    if d >= 2:
        return diag, RationalFunction.ONE
    diff = qpow(d) - qpow(-d)
    return diag, 1 - ZETA * ZETA / (diff * diff)


def _matrices(lam: Partition, basis) -> list:
    index = {t: n for n, t in enumerate(basis)}
    l = lam.size
    out = []
    for k in range(1, l):
        m = [[RationalFunction.ZERO] * len(basis) for _ in basis]
        for col, tab in enumerate(basis):
            diag, off = action_coefficients(tab, k)
            m[col][col] = diag
            if off is not None:
                m[index[tab.swapped(k)]][col] = off
        out.append(m)
    return out


def check_relations(mats, l: int) -> None:
    """Quadratic, braid and far-commutation relations; raises on failure."""
    n = len(mats[0]) if mats else 0
    one = mat_identity(n)
    for k in range(1, l):
        a = mats[k - 1]
        lhs = mat_mul(a, a)
        rhs = [[one[i][j] + ZETA * a[i][j] for j in range(n)] for i in range(n)]
        if not mat_eq(lhs, rhs):
            raise RelationFailure(f"quadratic relation fails for T_{k}")
        for j in range(k + 1, l):
            b = mats[j - 1]
            if j == k + 1:
                if not mat_eq(mat_mul(mat_mul(a, b), a), mat_mul(mat_mul(b, a), b)):
                    raise RelationFailure(f"braid relation fails for T_{k}, T_{j}")
            elif not mat_eq(mat_mul(a, b), mat_mul(b, a)):
                raise RelationFailure(f"T_{k} and T_{j} do not commute")


@lru_cache(maxsize=64)
def _build(parts: tuple[int, ...]) -> SeminormalRep:
    lam = Partition(parts)
    basis = tuple(standard_tableaux(lam))
    mats = _matrices(lam, basis)
    check_relations(mats, lam.size)
    return SeminormalRep(lam, basis, tuple(tuple(tuple(r) for r in m) for m in mats))


def build_rep(lam) -> SeminormalRep:
    lam = _as_partition(lam)
    if lam.size < 1:
        raise ValueError("need a nonempty partition")
    return _build(lam.parts)


class _Images:
    """Matrices of T_sigma, built along reduced-word prefixes."""

    def __init__(self, rep: SeminormalRep):
        self.rep = rep
        l = rep.rank
        self.cache = {identity(l): mat_identity(rep.dimension)}

    def __call__(self, s):
        got = self.cache.get(s)
        if got is None:
            word = reduced_word(s)
            i = word[-1]
            prefix = compose(s, word_to_perm(len(s), (i,)))
            got = mat_mul(self(prefix), self.rep.matrix(i))
            self.cache[s] = got
        return got


_IMAGES: dict = {}


def _images(rep: SeminormalRep) -> _Images:
    img = _IMAGES.get(rep.shape)
    if img is None:
        img = _IMAGES[rep.shape] = _Images(rep)
    return img


def represent(rep: SeminormalRep, a: AlgebraElement) -> list:
    if a.rank != rep.rank:
        raise ValueError(f"element of H_{a.rank} acting on a module of H_{rep.rank}")
    n = rep.dimension
    img = _images(rep)
    out = [[RationalFunction.ZERO] * n for _ in range(n)]
    for s, c in a.terms.items():
        m = img(s)
        for i in range(n):
            row, mrow = out[i], m[i]
            for j in range(n):
                if mrow[j]:
                    row[j] = row[j] + c * mrow[j]
    return out


def character(rep: SeminormalRep, a: AlgebraElement) -> RationalFunction:
    """Trace of the represented element, computed from diagonals only."""
    if a.rank != rep.rank:
        raise ValueError(f"element of H_{a.rank} acting on a module of H_{rep.rank}")
    img = _images(rep)
    acc = RationalFunction.ZERO
    for s, c in a.terms.items():
        m = img(s)
        tr = RationalFunction.ZERO
        for i in range(rep.dimension):
            if m[i][i]:
                tr = tr + m[i][i]
        if tr:
            acc = acc + c * tr
    return acc


def check_delta_expansion(l: int) -> bool:
    """sum over lambda of phi_lambda(T_sigma^{-1}) / h_lambda is 1 at sigma = 1
    and 0 elsewhere."""
    import itertools

    reps = [(build_rep(lam), hook_scalar(lam).inv()) for lam in partitions_of(l)]
    for s in itertools.permutations(range(1, l + 1)):
        elem = inv_basis(s, l)
        total = RationalFunction.ZERO
        for rep, w in reps:
            total = total + w * character(rep, elem)
        expected = RationalFunction.ONE if s == identity(l) else RationalFunction.ZERO
        if total != expected:
            return False
    return True


def check_murphy_diagonal(lam) -> bool:
    rep = build_rep(lam)
    l = rep.rank
    n = rep.dimension
    for i in range(1, l + 1):
        m = represent(rep, murphy(l, i))
        for r in range(n):
            for c in range(n):
                want = qpow(2 * content(rep.basis[c], i)) if r == c else RationalFunction.ZERO
                if m[r][c] != want:
                    return False
    spectra = {tab.contents for tab in rep.basis}
    return len(spectra) == n


def check_branching(lam) -> bool:
    """The G_Lambda with l in a fixed row span an H_{l-1}-submodule which
    is V_kappa in its own seminormal basis."""
    rep = build_rep(lam)
    l = rep.rank
    if l == 1:
        return True
    index = {t: n for n, t in enumerate(rep.basis)}
    rows = sorted({t.node_of_entry[l][0] for t in rep.basis})
    for a in rows:
        block = [t for t in rep.basis if t.node_of_entry[l][0] == a]
        inside = {index[t] for t in block}
        smaller = [_remove_last(t) for t in block]
        kappa = smaller[0].shape
        sub = build_rep(kappa)
        pos = [sub.basis.index(t) for t in smaller]
        for k in range(1, l - 1):
            m = rep.matrix(k)
            sm = sub.matrix(k)
            for c in inside:
                for r in range(rep.dimension):
                    if r not in inside and m[r][c]:
                        return False
            for bi, ci in enumerate(block):
                for bj, cj in enumerate(block):
                    if m[index[ci]][index[cj]] != sm[pos[bi]][pos[bj]]:
                        return False
        for i in range(1, l):
            for t, s in zip(block, smaller):
                if content(t, i) != content(s, i):
                    return False
    return True


def _remove_last(tab: StandardTableau) -> StandardTableau:
    l = tab.size
    rows = [tuple(x for x in r if x != l) for r in tab.rows]
    return StandardTableau(tuple(r for r in rows if r))


def ideal_matrices(lam, cfg: FusionConfig = DEFAULT) -> list:
    """Matrices of T_k on the span of the fused G_Lambda, by exact solves."""
    lam = _as_partition(lam)
    basis = standard_tableaux(lam)
    gs = [fuse_G(t, cfg) for t in basis]
    b = Basis(gs)
    mats = []
    for k in range(1, lam.size):
        cols = [b.coords(g.lmul_gen(k)) for g in gs]
        mats.append([[cols[c][r] for c in range(len(gs))] for r in range(len(gs))])
    return mats


def compare_with_ideal_model(lam, cfg: FusionConfig = DEFAULT) -> bool:
    rep = build_rep(lam)
    return all(mat_eq(m, rep.matrix(k)) for k, m in enumerate(ideal_matrices(lam, cfg), 1))


def specialize_rep(rep: SeminormalRep, q0) -> list:
    return [[[x.at(q0) for x in row] for row in rep.matrix(k)] for k in range(1, rep.rank)]


def _fmul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [[sum((a[i][t] * b[t][j] for t in range(m)), Fraction(0)) for j in range(p)] for i in range(n)]


def check_classical_limit(lam) -> bool:
    """At q = 1 the matrices satisfy the Coxeter relations of S_l and the
    classical Jucys-Murphy elements act diagonally by contents."""
    rep = build_rep(lam)
    l, n = rep.rank, rep.dimension
    mats = specialize_rep(rep, 1)
    one = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(1, l):
        a = mats[k - 1]
        if _fmul(a, a) != one:
            return False
        for j in range(k + 1, l):
            b = mats[j - 1]
            if j == k + 1:
                if _fmul(_fmul(a, b), a) != _fmul(_fmul(b, a), b):
                    return False
            elif _fmul(a, b) != _fmul(b, a):
                return False

    def perm_matrix(s):
        out = one
        for i in reduced_word(s):
            out = _fmul(out, mats[i - 1])
        return out

    for i in range(2, l + 1):
        acc = [[Fraction(0)] * n for _ in range(n)]
        for j in range(1, i):
            t = list(range(1, l + 1))
            t[i - 1], t[j - 1] = t[j - 1], t[i - 1]
            m = perm_matrix(tuple(t))
            acc = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(acc, m)]
        for r in range(n):
            for c in range(n):
                want = Fraction(content(rep.basis[c], i)) if r == c else Fraction(0)
                if acc[r][c] != want:
                    return False
    return True
