"""Baxterized generators, their ordered products, and the fusion limits
F_Lambda, G_Lambda and E_Lambda.

The limit onto the column-constant subspace is taken along a line
``z_i = 1 + beta_{col(i)} eps``.  Each factor ``F_k(x, y)`` is multiplied by
the denominator ``D(eps) = x^{-1} y - 1`` (rescaled by x), which turns it into
an eps-polynomial with coefficients in H_l.  The value at eps = 0 of the
product is then ``N(eps) / prod D(eps)``, and only the eps-coefficients of N
up to the order of vanishing of ``prod D`` matter.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .combinatorics import (
    StandardTableau,
    a_sequences,
    b_sequences,
    column_tableau,
    compose,
    d_value,
    length,
    longest_element,
    rd_word,
    rho_of,
    row_tableau,
    standard_tableaux,
)
from .hecke import (
    ZETA,
    AlgebraElement,
    a_symmetrizer,
    embed_low,
    embed_shift,
    gen,
    inv_basis,
    inv_letters,
    t_letters,
    unit,
)
from .scalars import EpsilonFunction, NotRegularError, RationalFunction, eval_eps_zero, qpow, rf

__all__ = [
    "FusionConfig",
    "SingularFactor",
    "baxter_scalar",
    "baxter_factor",
    "unitarity_scalar",
    "ordered_product",
    "fuse_F",
    "fuse_G",
    "fuse_F_via_tower",
    "transport_F",
    "transport_path",
    "chain_F",
    "chain_G",
    "diagonal_element",
    "h_from_idempotency",
    "check_regularity_identity",
    "triple_product_limit",
    "scalar_ratio",
    "NotTransportable",
    "NotProportional",
    "check_column_factor_identity",
    "check_g_column_factor_identity",
    "check_descending_factors",
    "check_descending_shift",
    "check_row_symmetrizer",
]

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class SingularFactor(ZeroDivisionError):
    """A baxterized factor was evaluated where ``x^{-1} y = 1``."""


@dataclass(frozen=True)
class FusionConfig:
    """Directions of the limiting line, one slope per column, and how many
    fresh direction sets to try if a line happens to be non-generic."""

    line_directions: tuple[int, ...] | None = None
    retry_budget: int = 3

    def directions(self, ncols: int, attempt: int) -> tuple[int, ...]:
        if attempt == 0:
            if self.line_directions is not None:
                dirs = tuple(self.line_directions[:ncols])
                if len(dirs) < ncols:
                    raise ValueError(f"need {ncols} line directions, got {len(dirs)}")
            else:
                dirs = tuple(range(1, ncols + 1))
        else:
            start = (attempt - 1) * 3
            pool = _PRIMES[start:] + tuple(range(53, 53 + ncols))
            dirs = pool[:ncols]
        if len(set(dirs)) != len(dirs) or 0 in dirs:
            raise ValueError(f"line directions must be distinct and nonzero: {dirs}")
        return dirs


DEFAULT = FusionConfig()


# --- single factors ---------------------------------------------------------

def baxter_scalar(x, y):
    """``(q - q^-1)/(x^{-1} y - 1)``."""
    r = y / x - 1
    if not r:
        raise SingularFactor("x^{-1} y = 1")
    return ZETA / r if isinstance(r, RationalFunction) else r.inv() * ZETA


def baxter_factor(l: int, i: int, x, y) -> AlgebraElement:
    """``F_i(x, y) = T_i + (q - q^-1)/(x^{-1} y - 1)`` in H_l."""
    return gen(l, i) + unit(l).scale(baxter_scalar(x, y))


def unitarity_scalar(x, y) -> RationalFunction:
    """``1 - (q - q^-1)^2 x y / (x - y)^2``, the value of F_i(x,y) F_i(y,x)."""
    return 1 - ZETA * ZETA * x * y / ((x - y) * (x - y))


def _rmul_factor(a: AlgebraElement, i: int, x, y) -> AlgebraElement:
    return a.rmul_gen(i, RationalFunction.ONE, baxter_scalar(x, y))


def _lmul_factor(a: AlgebraElement, i: int, x, y) -> AlgebraElement:
    return a.lmul_gen(i, RationalFunction.ONE, baxter_scalar(x, y))


def _pairs(l: int):
    return [(i, j) for j in range(1, l + 1) for i in range(1, j)]


def ordered_product(tab: StandardTableau, zvals: Sequence) -> AlgebraElement:
    """``F_Lambda(z_1..z_l)``: product over pairs i<j ordered by j then i of
    ``F_{j-i}(q^{2c_i} z_i, q^{2c_j} z_j)``.  The z may be RationalFunction
    or EpsilonFunction values."""
    l = tab.size
    if len(zvals) != l:
        raise ValueError(f"need {l} spectral parameters")
    c = tab.contents
    zs = [rf(z) if isinstance(z, (int, str)) else z for z in zvals]
    out = unit(l)
    for i, j in _pairs(l):
        out = _rmul_factor(out, j - i, qpow(2 * c[i - 1]) * zs[i - 1], qpow(2 * c[j - 1]) * zs[j - 1])
    return out


# --- eps-line limit ----------------------------------------------------------

def _line_limit(l: int, factors: Sequence[tuple[int, int, int, int, int]]) -> AlgebraElement:
    """Value at eps = 0 of the ordered product of
    ``F_k(q^{2ci}(1 + bi eps), q^{2cj}(1 + bj eps))`` over ``(k, ci, cj, bi, bj)``."""
    specs = []
    order = 0
    lead = RationalFunction.ONE
    for k, ci, cj, bi, bj in factors:
        Q = qpow(2 * (cj - ci))
        d0 = Q - 1
        d1 = Q * bj - bi
        if d0:
            lead = lead * d0
        elif d1:
            order += 1
            lead = lead * d1
        else:
            raise SingularFactor(f"factor F_{k} is singular along the whole line")
        # D * F_k = (d0 T_k + zeta) + eps (d1 T_k + zeta bi)
        specs.append((k, d0, ZETA, d1, ZETA * bi))
    series = [unit(l)] + [AlgebraElement._raw(l, {})] * order
    for k, a0, b0, a1, b1 in specs:
        new = []
        for t in range(order + 1):
            acc = series[t].rmul_gen(k, a0, b0) if series[t] else series[t]
            if t and series[t - 1]:
                acc = acc + series[t - 1].rmul_gen(k, a1, b1)
            new.append(acc)
        series = new
    for t in range(order):
        if series[t]:
            raise NotRegularError(f"eps-coefficient {t} of the numerator does not vanish")
    return series[order].scale(lead.inv())


def _limit_with_retry(tab: StandardTableau, build, cfg: FusionConfig) -> AlgebraElement:
    ncols = tab.shape[1] if tab.size else 0
    last = None
    for attempt in range(cfg.retry_budget + 1):
        betas = cfg.directions(ncols, attempt)
        try:
            return _line_limit(tab.size, build(betas))
        except (NotRegularError, SingularFactor) as exc:
            last = exc
    raise NotRegularError(f"fusion limit failed for {tab} on every line tried: {last}")


def _f_factors(tab: StandardTableau, betas):
    c = tab.contents
    b = [betas[tab.column_of(i) - 1] for i in range(1, tab.size + 1)]
    return [(j - i, c[i - 1], c[j - 1], b[i - 1], b[j - 1]) for i, j in _pairs(tab.size)]


def _g_factors(tab: StandardTableau, betas):
    c = tab.contents
    b = [betas[tab.column_of(i) - 1] for i in range(1, tab.size + 1)]
    out = []
    for j, seq in enumerate(b_sequences(tab), 1):
        for k, i in enumerate(seq, 1):
            out.append((j - k, c[i - 1], c[j - 1], b[i - 1], b[j - 1]))
    return out


@lru_cache(maxsize=512)
def _fuse_F_cached(tab: StandardTableau, cfg: FusionConfig) -> AlgebraElement:
    return _limit_with_retry(tab, lambda betas: _f_factors(tab, betas), cfg)


@lru_cache(maxsize=512)
def _fuse_G_cached(tab: StandardTableau, cfg: FusionConfig) -> AlgebraElement:
    return _limit_with_retry(tab, lambda betas: _g_factors(tab, betas), cfg)


def fuse_F(tab: StandardTableau, cfg: FusionConfig = DEFAULT) -> AlgebraElement:
    """F_Lambda as the eps -> 0 value of the ordered product on a generic
    line inside the column-constant subspace."""
    return _fuse_F_cached(tab, cfg)


def fuse_G(tab: StandardTableau, cfg: FusionConfig = DEFAULT) -> AlgebraElement:
    """G_Lambda as the eps -> 0 value of the B-ordered product."""
    return _fuse_G_cached(tab, cfg)


def fuse_F_via_tower(tab: StandardTableau, betas: Sequence[int] | None = None) -> AlgebraElement:
    """F_Lambda computed with every coefficient in Q(q)(eps), reduced, then
    evaluated at eps = 0.  Slow; kept as an independent check of the line
    method at small sizes."""
    ncols = tab.shape[1]
    betas = tuple(betas) if betas is not None else tuple(range(1, ncols + 1))
    eps = EpsilonFunction.epsilon()
    zs = [1 + eps * rf(betas[tab.column_of(i) - 1]) for i in range(1, tab.size + 1)]
    prod = ordered_product(tab, zs)
    return AlgebraElement._raw(tab.size, {s: eval_eps_zero(c) for s, c in prod.terms.items() if eval_eps_zero(c)})


# --- transport between tableaux ---------------------------------------------

class NotTransportable(ValueError):
    pass


def transport_F(tab: StandardTableau, k: int, F_from: AlgebraElement) -> AlgebraElement:
    """F for the tableau with k and k+1 swapped, from F for tab:
    ``F_k(x,y)^{-1} F_Lambda F_{l-k}(y,x)`` with x, y = q^{2c_k}, q^{2c_{k+1}}."""
    l = tab.size
    if abs(d_value(tab, k)) < 2:
        raise NotTransportable(f"swapping {k},{k + 1} in {tab} is not standard")
    c = tab.contents
    x, y = qpow(2 * c[k - 1]), qpow(2 * c[k])
    out = _rmul_factor(F_from, l - k, y, x)
    out = _lmul_factor(out, k, y, x)
    return out.scale(unitarity_scalar(x, y).inv())


def transport_path(tab: StandardTableau, order: str = "rd") -> list[int]:
    """Letters k such that applying the swaps in sequence takes the column
    tableau to tab through standard tableaux.

    ``rd`` reads the reduced word assembled from the A_j backwards.
    ``bfs`` takes a breadth-first shortest path preferring large k, an
    independent route used to test path independence.
    """
    if order == "rd":
        return list(reversed(rd_word(tab)))
    if order != "bfs":
        raise ValueError(order)
    start = column_tableau(tab.shape)
    prev = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == tab:
            break
        for k in range(cur.size - 1, 0, -1):
            if abs(d_value(cur, k)) >= 2:
                nxt = cur.swapped(k)
                if nxt not in prev:
                    prev[nxt] = (cur, k)
                    queue.append(nxt)
    path = []
    cur = tab
    while prev[cur] is not None:
        cur, k = prev[cur]
        path.append(k)
    return list(reversed(path))


def chain_F(tab: StandardTableau, order: str = "rd", cfg: FusionConfig = DEFAULT) -> AlgebraElement:
    """F_Lambda transported from F of the column tableau along a swap path."""
    cur = column_tableau(tab.shape)
    F = fuse_F(cur, cfg)
    for k in transport_path(tab, order):
        F = transport_F(cur, k, F)
        cur = cur.swapped(k)
    assert cur == tab
    return F


def chain_G(tab: StandardTableau, order: str = "rd", cfg: FusionConfig = DEFAULT) -> AlgebraElement:
    """G_Lambda propagated from G = F of the column tableau with
    ``G_{s_k Lambda} = F_k(q^{2c_{k+1}}, q^{2c_k}) G_Lambda`` (divided by the
    unitarity scalar when d_k is negative)."""
    cur = column_tableau(tab.shape)
    G = fuse_F(cur, cfg)
    for k in transport_path(tab, order):
        c = cur.contents
        x, y = qpow(2 * c[k]), qpow(2 * c[k - 1])
        G = _lmul_factor(G, k, x, y)
        if d_value(cur, k) < 0:
            G = G.scale(unitarity_scalar(x, y).inv())
        cur = cur.swapped(k)
    return G


# --- E and h ----------------------------------------------------------------

def diagonal_element(tab: StandardTableau, cfg: FusionConfig = DEFAULT) -> AlgebraElement:
    """``E_Lambda = F_Lambda T_0^{-1}``."""
    l = tab.size
    return fuse_F(tab, cfg) * inv_basis(longest_element(l), l)


class NotProportional(AssertionError):
    pass


def scalar_ratio(a: AlgebraElement, b: AlgebraElement) -> RationalFunction:
    """The scalar r with a = r b, or NotProportional."""
    if not b:
        raise NotProportional("reference element is zero")
    s = next(iter(b.terms))
    r = a.coefficient(s) / b.terms[s]
    if a != b.scale(r):
        raise NotProportional("elements are not proportional")
    return r


def h_from_idempotency(tab: StandardTableau, cfg: FusionConfig = DEFAULT) -> RationalFunction:
    E = diagonal_element(tab, cfg)
    return scalar_ratio(E * E, E)


# --- identities -------------------------------------------------------------

def check_regularity_identity(x, z, upper: bool = True, l: int = 3, i: int = 1) -> bool:
    """A closed form for the triple product T_i(x,y) T_{i+1}(x,z) T_i(y,z) at y = q^{-+2} x,
    at concrete nonzero x, z with x != z."""
    x, z = rf(x), rf(z)
    sign = 1 if upper else -1
    qs = qpow(sign)
    T = gen(l, i)
    lhs = (T - unit(l, qs)) if upper else (T + unit(l, qs))
    lhs = lhs * (T + unit(l, ZETA / (qpow(2 * sign) * z / x - 1)))
    lhs = lhs.scale(ZETA / (z / x - 1))
    core = (unit(l, qs) - T) if upper else (unit(l, qs) + T)
    # the right side needs an extra factor q^{-+1}; without it the two sides
    # differ by exactly that factor (regularity at x = z is unaffected)
    rhs = core.scale(qpow(-sign) * ZETA / (z / x - qpow(-2 * sign)))
    if lhs != rhs:
        return False
    triple_product_limit(z, upper, l, i)
    return True


def triple_product_limit(z, upper: bool = True, l: int = 3, i: int = 1) -> AlgebraElement:
    """The Yang-Baxter triple product restricted to y = q^{-+2} x along the
    line x = z (1 + eps), evaluated at eps = 0."""
    sign = 1 if upper else -1
    eps = EpsilonFunction.epsilon()
    z = rf(z)
    x = (1 + eps) * z
    y = x * qpow(-2 * sign)
    prod = _rmul_factor(unit(l), i, x, y)
    prod = _rmul_factor(prod, i + 1, x, z)
    prod = _rmul_factor(prod, i, y, z)
    return AlgebraElement._raw(l, {s: eval_eps_zero(c) for s, c in prod.terms.items() if eval_eps_zero(c)})


def _a_products(tab: StandardTableau):
    """(left factors, right factors) of the A_j identity: lists of (k, x, y)."""
    l = tab.size
    c = tab.contents
    left, right = [], []
    for j, seq in enumerate(a_sequences(tab), 1):
        for k, i in enumerate(seq, 1):
            left.append((l - j + k, qpow(2 * c[j - 1]), qpow(2 * c[i - 1])))
            right.append((j - k, qpow(2 * c[i - 1]), qpow(2 * c[j - 1])))
    return left, right


def check_column_factor_identity(tab: StandardTableau, cfg: FusionConfig = DEFAULT) -> bool:
    """``F_Lambda * prod F_{l-j+k}(..) = prod F_{j-k}(..) * F_{column tableau}``."""
    left, right = _a_products(tab)
    lhs = fuse_F(tab, cfg)
    for k, x, y in left:
        lhs = _rmul_factor(lhs, k, x, y)
    rhs = fuse_F(column_tableau(tab.shape), cfg)
    for k, x, y in reversed(right):
        rhs = _lmul_factor(rhs, k, x, y)
    return lhs == rhs


def check_g_column_factor_identity(tab: StandardTableau, cfg: FusionConfig = DEFAULT) -> bool:
    c = tab.contents
    scal = RationalFunction.ONE
    for j, seq in enumerate(a_sequences(tab), 1):
        for i in seq:
            d = c[i - 1] - c[j - 1]
            diff = qpow(d) - qpow(-d)
            scal = scal * (1 - ZETA * ZETA / (diff * diff))
    lhs = fuse_G(tab, cfg).scale(scal)
    _, right = _a_products(tab)
    rhs = fuse_F(column_tableau(tab.shape), cfg)
    for k, x, y in reversed(right):
        rhs = _lmul_factor(rhs, k, x, y)
    return lhs == rhs


def _descending_product(tab: StandardTableau, z: RationalFunction, cfg: FusionConfig) -> AlgebraElement:
    l = tab.size
    F = embed_low(fuse_F(tab, cfg), l + 1)
    c = tab.contents
    for k in range(l, 0, -1):
        F = _lmul_factor(F, k, z, qpow(2 * c[k - 1]))
    return F


def check_descending_factors(tab: StandardTableau, z, cfg: FusionConfig = DEFAULT) -> bool:
    z = rf(z)
    l = tab.size
    F = embed_low(fuse_F(tab, cfg), l + 1)
    word = list(range(1, l + 1))
    core = t_letters(l + 1, word) - inv_letters(l + 1, word).scale(z)
    rhs = (core * F).scale((1 - z).inv())
    return _descending_product(tab, z, cfg) == rhs


def check_descending_shift(tab: StandardTableau, z, cfg: FusionConfig = DEFAULT) -> bool:
    z = rf(z)
    l = tab.size
    c = tab.contents
    rhs = embed_shift(fuse_F(tab, cfg), 1, l + 1)
    for k in range(l, 0, -1):
        rhs = _rmul_factor(rhs, l - k + 1, z, qpow(2 * c[k - 1]))
    return _descending_product(tab, z, cfg) == rhs


def check_row_symmetrizer(lam, cfg: FusionConfig = DEFAULT) -> bool:
    """G of the row tableau times T_{rho w0}^{-1} equals the q-Young symmetrizer."""
    tab = row_tableau(lam)
    l = tab.size
    rw0 = compose(rho_of(tab), longest_element(l))
    return fuse_G(tab, cfg) * inv_basis(rw0, l) == a_symmetrizer(tab.shape)
