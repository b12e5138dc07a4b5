"""Induced left ideals W = H_{l+m} F_Lambda F̄_M, the intertwining elements
S and S', the operator J of right multiplication by S T_tau^{-1}, and the
checks of its eigenvalues."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

from .combinatorics import (
    InvalidInsertion,
    Partition,
    StandardTableau,
    _as_partition,
    column_tableau,
    compose,
    count_standard,
    eta_partition,
    insertion_sequences,
    length,
    mixed_hook_ratio,
    r_eta,
    r_xi,
    reduced_word,
    simple,
    standard_tableaux,
    tau_permutation,
    tau_word,
    xi_partition,
    xi_tableau,
)
from .fusion import DEFAULT, FusionConfig, NotProportional, baxter_scalar, fuse_F, fuse_G, scalar_ratio
from .hecke import (
    ZETA,
    AlgebraElement,
    alpha,
    beta,
    embed_low,
    embed_shift,
    gen,
    murphy,
    murphy_inv,
    q_antisymmetrizer,
    t_word,
    unit,
)
from .linalg import Echelon, NotInSpan, det, mat_eq, mat_mul, mat_sub_scalar
from .scalars import RationalFunction, qpow, rf

__all__ = [
    "NotGeneric",
    "InducedSetup",
    "ModuleBasisReport",
    "EigenReport",
    "induced_setup",
    "s_element",
    "s_prime_element",
    "check_s_exchange",
    "murphy_factorization_rhs",
    "check_murphy_factorization",
    "apply_J",
    "span_induced",
    "j_matrix",
    "left_matrix",
    "check_j_commutes",
    "eigenvector_D",
    "eigenvector_eta",
    "measured_eigenvalue",
    "verify_eigen_det",
    "check_tau_relations",
    "corollary11_report",
    "eigen_report",
]


class NotGeneric(ValueError):
    """z^{-1} w lies (or may lie) in q^{2Z}."""


class InvariantViolation(AssertionError):
    pass


@dataclass(frozen=True)
class InducedSetup:
    lam: Partition
    mu: Partition
    Lam: StandardTableau
    M: StandardTableau
    z: RationalFunction
    w: RationalFunction

    @property
    def l(self) -> int:
        return self.lam.size

    @property
    def m(self) -> int:
        return self.mu.size

    @property
    def rank(self) -> int:
        return self.l + self.m

    @property
    def t(self) -> RationalFunction:
        return self.w / self.z

    @property
    def generator(self) -> AlgebraElement:
        return _generator(self.Lam, self.M)

    @property
    def swapped_generator(self) -> AlgebraElement:
        """F_M F̄_Lambda, the generator of the ideal with the factors swapped."""
        L = self.rank
        return embed_low(fuse_F(self.M), L) * embed_shift(fuse_F(self.Lam), self.m, L)


@lru_cache(maxsize=256)
def _generator(Lam: StandardTableau, M: StandardTableau) -> AlgebraElement:
    l, m = Lam.size, M.size
    return embed_low(fuse_F(Lam), l + m) * embed_shift(fuse_F(M), l, l + m)


def induced_setup(lam, mu, Lam: StandardTableau | None = None, M: StandardTableau | None = None,
                  z=1, w=3) -> InducedSetup:
    lam, mu = _as_partition(lam), _as_partition(mu)
    if lam.size < 1 or mu.size < 1:
        raise ValueError("lambda and mu must be non-empty")
    Lam = Lam or column_tableau(lam)
    M = M or column_tableau(mu)
    if Lam.shape != lam or M.shape != mu:
        raise ValueError("tableau shapes do not match the partitions")
    z, w = rf(z), rf(w)
    if not z or not w:
        raise NotGeneric("z and w must be non-zero")
    t = w / z
    for k in range(-(lam.size + mu.size), lam.size + mu.size + 1):
        if t == qpow(2 * k):
            raise NotGeneric(f"z^-1 w = q^{2 * k}")
    return InducedSetup(lam, mu, Lam, M, z, w)


# --- S, S' and the relations ------------------------------------------------

def _s_factors(setup: InducedSetup, prime: bool):
    l, m = setup.l, setup.m
    cl, cm = setup.Lam.contents, setup.M.contents
    arg = lambda i, j: (qpow(2 * cl[i - 1]) * setup.z, qpow(2 * cm[j - 1]) * setup.w)
    if prime:
        return [(i + j - 1,) + arg(i, j) for i in range(l, 0, -1) for j in range(1, m + 1)]
    return [(l + m - i - j + 1,) + arg(i, j) for i in range(1, l + 1) for j in range(m, 0, -1)]


def _rmul_factors(a: AlgebraElement, factors) -> AlgebraElement:
    for k, x, y in factors:
        a = a.rmul_gen(k, RationalFunction.ONE, baxter_scalar(x, y))
    return a


def s_element(setup: InducedSetup) -> AlgebraElement:
    return _rmul_factors(unit(setup.rank), _s_factors(setup, False))


def s_prime_element(setup: InducedSetup) -> AlgebraElement:
    return _rmul_factors(unit(setup.rank), _s_factors(setup, True))


def _times_s(a: AlgebraElement, setup: InducedSetup) -> AlgebraElement:
    return _rmul_factors(a, _s_factors(setup, False))


def check_s_exchange(setup: InducedSetup) -> bool:
    lhs = _times_s(setup.generator, setup)
    rhs = s_prime_element(setup) * setup.swapped_generator
    return lhs == rhs


def murphy_factorization_rhs(setup: InducedSetup) -> AlgebraElement:
    """``T_tau * prod_{i=l..1} (t - q^{2c_i} X̄_i X_{i+m}^{-1})/(t - q^{2c_i}) * F_M F̄_Lambda``."""
    L, l, m = setup.rank, setup.l, setup.m
    t = setup.t
    c = setup.Lam.contents
    out = t_word(L, tau_permutation(l, m))
    for i in range(l, 0, -1):
        qc = qpow(2 * c[i - 1])
        xbar = embed_shift(murphy(l, i), m, L)
        num = unit(L, t) - (xbar * murphy_inv(L, i + m)).scale(qc)
        out = out * num.scale((t - qc).inv())
    return out * setup.swapped_generator


def check_murphy_factorization(setup: InducedSetup) -> bool:
    return _times_s(setup.generator, setup) == murphy_factorization_rhs(setup)


def check_tau_relations(l: int, m: int, tableaux: bool = True) -> bool:
    """T_i T_tau = T_tau T_{i+m}, T_{l+j} T_tau = T_tau T_j and, for all
    standard pairs of the given sizes, F_Lambda F̄_M T_tau = T_tau F_M F̄_Lambda."""
    L = l + m
    tt = t_word(L, tau_permutation(l, m))
    if tt != unit(L).rmul_word(tau_word(l, m)):
        return False
    for i in range(1, l):
        if gen(L, i) * tt != tt * gen(L, i + m):
            return False
    for j in range(1, m):
        if gen(L, l + j) * tt != tt * gen(L, j):
            return False
    if not tableaux:
        return True
    from .combinatorics import partitions_of

    for lam in partitions_of(l):
        for mu in partitions_of(m):
            for Lam in standard_tableaux(lam):
                for M in standard_tableaux(mu):
                    s = InducedSetup(lam, mu, Lam, M, RationalFunction.ONE, rf(3))
                    if s.generator * tt != tt * s.swapped_generator:
                        return False
    return True


# --- the ideal W and the operator J -----------------------------------------

@dataclass
class ModuleBasisReport:
    basis: list
    dimension: int
    expected: int
    echelon: Echelon = field(repr=False)

    def coords(self, v: AlgebraElement) -> list:
        return self.echelon.coords(v)

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "expected": self.expected}


@lru_cache(maxsize=128)
def _span(Lam: StandardTableau, M: StandardTableau) -> ModuleBasisReport:
    l, m = Lam.size, M.size
    L = l + m
    g = _generator(Lam, M)
    perms = sorted(itertools.permutations(range(1, L + 1)), key=lambda s: (length(s), s))
    images = {}
    ech = Echelon(L)
    for s in perms:
        if length(s) == 0:
            v = g
        else:
            i = reduced_word(s)[0]
            v = images[compose(simple(L, i), s)].lmul_gen(i)
        images[s] = v
        ech.insert(v)
    expected = comb(L, l) * count_standard(Lam.shape) * count_standard(M.shape)
    if len(ech) != expected:
        raise InvariantViolation(f"induced ideal has dimension {len(ech)}, expected {expected}")
    return ModuleBasisReport(ech.elements(), len(ech), expected, ech)


def span_induced(setup: InducedSetup) -> ModuleBasisReport:
    return _span(setup.Lam, setup.M)


def apply_J(v: AlgebraElement, setup: InducedSetup) -> AlgebraElement:
    """Right multiplication by S T_tau^{-1}."""
    out = _times_s(v, setup)
    for i in reversed(tau_word(setup.l, setup.m)):
        out = out.rmul_gen(i, RationalFunction.ONE, -ZETA)
    return out


def _matrix_of(report: ModuleBasisReport, op) -> list:
    cols = []
    for v in report.basis:
        try:
            cols.append(report.coords(op(v)))
        except NotInSpan as exc:
            raise InvariantViolation("the image leaves the ideal W") from exc
    n = report.dimension
    return [[cols[c][r] for c in range(n)] for r in range(n)]


def j_matrix(setup: InducedSetup, report: ModuleBasisReport | None = None) -> list:
    report = report or span_induced(setup)
    return _matrix_of(report, lambda v: apply_J(v, setup))


def left_matrix(setup: InducedSetup, k: int, report: ModuleBasisReport | None = None) -> list:
    report = report or span_induced(setup)
    return _matrix_of(report, lambda v: v.lmul_gen(k))


def check_j_commutes(setup: InducedSetup, J: list | None = None) -> bool:
    report = span_induced(setup)
    J = J if J is not None else j_matrix(setup, report)
    for k in range(1, setup.rank):
        Lk = left_matrix(setup, k, report)
        if not mat_eq(mat_mul(Lk, J), mat_mul(J, Lk)):
            return False
    return True


def verify_eigen_det(setup: InducedSetup, predicted: RationalFunction, J: list | None = None) -> bool:
    J = J if J is not None else j_matrix(setup)
    return det(mat_sub_scalar(J, predicted)).is_zero()


# --- explicit eigenvectors --------------------------------------------------

def eigenvector_D(lam, mu, iseq: Sequence[int], M: StandardTableau | None = None,
                  cfg: FusionConfig = DEFAULT) -> AlgebraElement:
    """``alpha(Q̄_lambda G_Xi) F_M F̄_{column} T_tau^{-1}``; lies in the ideal
    generated by F_{column} F̄_M.  Independent of z and w."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    M = M or column_tableau(mu)
    l, m = lam.size, mu.size
    L = l + m
    xi_t = xi_tableau(lam, mu, iseq, M)
    qbar = embed_shift(q_antisymmetrizer(lam), m, L)
    out = alpha(qbar * fuse_G(xi_t, cfg))
    out = out * embed_low(fuse_F(M, cfg), L) * embed_shift(fuse_F(column_tableau(lam), cfg), m, L)
    for i in reversed(tau_word(l, m)):
        out = out.rmul_gen(i, RationalFunction.ONE, -ZETA)
    if not out:
        raise InvariantViolation("eigenvector is zero")
    return out


def eigenvector_eta(lam, mu, jseq: Sequence[int], M: StandardTableau | None = None,
                    cfg: FusionConfig = DEFAULT) -> tuple[AlgebraElement, StandardTableau, StandardTableau]:
    """Image under beta of the xi-eigenvector built for the conjugate shapes.

    Returns the vector with the tableaux (Lambda, M) of the ideal it lies in:
    Lambda is the row tableau of lambda and M the transpose of the tableau
    used for mu*."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    Mc = M.transpose() if M is not None else column_tableau(mu.conjugate)
    vec = beta(eigenvector_D(lam.conjugate, mu.conjugate, jseq, Mc, cfg))
    return vec, column_tableau(lam.conjugate).transpose(), Mc.transpose()


def measured_eigenvalue(vec: AlgebraElement, setup: InducedSetup) -> RationalFunction:
    """The scalar r with J(vec) = r vec, after checking vec lies in W."""
    if not span_induced(setup).echelon.contains(vec):
        raise InvariantViolation("vector is not in the ideal W")
    try:
        return scalar_ratio(apply_J(vec, setup), vec)
    except NotProportional as exc:
        raise InvariantViolation("vector is not an eigenvector of J") from exc


# --- reports ----------------------------------------------------------------

def corollary11_report(lam, mu, t) -> dict:
    """Ratio of the eigenvalues for xi = lambda + mu and eta = (lambda* + mu*)*
    against the closed mixed-hook product."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    iseq = tuple(range(1, len(lam) + 1))
    jseq = tuple(range(1, lam[1] + 1))
    ratio = r_xi(lam, mu, iseq, t) / r_eta(lam, mu, jseq, t)
    closed = mixed_hook_ratio(lam, mu, t)
    return {
        "xi": list(xi_partition(lam, mu, iseq).parts),
        "eta": list(eta_partition(lam, mu, jseq).parts),
        "ratio": ratio,
        "closed_form": closed,
        "ok": ratio == closed,
    }


@dataclass
class EigenReport:
    setup: InducedSetup
    predicted: dict = field(default_factory=dict)
    verified: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(all(v.values()) for v in self.verified.values())

    def to_json(self) -> dict:
        s = self.setup
        return {
            "lambda": list(s.lam.parts),
            "mu": list(s.mu.parts),
            "z": str(s.z),
            "w": str(s.w),
            "predicted": {k: str(v) for k, v in self.predicted.items()},
            "verified": self.verified,
            "ok": self.ok,
        }


def eigen_report(setup: InducedSetup, iseqs=None, jseqs=None, eigenvectors: bool = True) -> EigenReport:
    """Check every predicted eigenvalue by the determinant test and, where
    the vector is available, by the explicit eigenvector."""
    lam, mu, t = setup.lam, setup.mu, setup.t
    iseqs = list(insertion_sequences(lam, mu)) if iseqs is None else [tuple(s) for s in iseqs]
    jseqs = list(insertion_sequences(lam, mu, conjugate=True)) if jseqs is None else [tuple(s) for s in jseqs]
    J = j_matrix(setup)
    rep = EigenReport(setup)
    for seq in iseqs:
        key = f"xi={','.join(map(str, xi_partition(lam, mu, seq).parts))} iseq={','.join(map(str, seq))}"
        r = r_xi(lam, mu, seq, t)
        rep.predicted[key] = r
        checks = {"determinant": verify_eigen_det(setup, r, J)}
        if eigenvectors and setup.Lam == column_tableau(lam):
            vec = eigenvector_D(lam, mu, seq, setup.M)
            checks["eigenvector"] = measured_eigenvalue(vec, setup) == r
        rep.verified[key] = checks
    for seq in jseqs:
        key = f"eta={','.join(map(str, eta_partition(lam, mu, seq).parts))} jseq={','.join(map(str, seq))}"
        r = r_eta(lam, mu, seq, t)
        rep.predicted[key] = r
        checks = {"determinant": verify_eigen_det(setup, r, J)}
        if eigenvectors:
            vec, Lam2, M2 = eigenvector_eta(lam, mu, seq)
            s2 = InducedSetup(lam, mu, Lam2, M2, setup.z, setup.w)
            checks["eigenvector"] = measured_eigenvalue(vec, s2) == r
        rep.verified[key] = checks
    return rep
