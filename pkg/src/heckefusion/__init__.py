"""Exact computations with Hecke algebras of type A: baxterized generators,
the fusion construction of primitive idempotents, seminormal matrices, and
the intertwining operator on induced modules."""

from .scalars import (
    EpsilonFunction,
    LaurentPolynomial,
    NotRegularError,
    PoleError,
    RationalFunction,
    bar_involution,
    eval_eps_zero,
    parse_rf,
    qpow,
    rf,
    rf_arith,
    specialize_q,
)
from .combinatorics import Partition, StandardTableau, column_tableau, row_tableau, standard_tableaux
from .hecke import AlgebraElement, gen, inv_basis, murphy, t_word, unit
from .fusion import FusionConfig, diagonal_element, fuse_F, fuse_G, h_from_idempotency
from .seminormal import SeminormalRep, build_rep, character
from .intertwiner import InducedSetup, induced_setup

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "EpsilonFunction",
    "FusionConfig",
    "InducedSetup",
    "LaurentPolynomial",
    "NotRegularError",
    "Partition",
    "PoleError",
    "RationalFunction",
    "SeminormalRep",
    "StandardTableau",
    "bar_involution",
    "build_rep",
    "character",
    "column_tableau",
    "diagonal_element",
    "eval_eps_zero",
    "fuse_F",
    "fuse_G",
    "gen",
    "h_from_idempotency",
    "induced_setup",
    "inv_basis",
    "murphy",
    "parse_rf",
    "qpow",
    "rf",
    "rf_arith",
    "row_tableau",
    "specialize_q",
    "standard_tableaux",
    "t_word",
    "unit",
]
