"""Hypothesis strategies shared across the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from heckefusion.combinatorics import Partition
from heckefusion.hecke import AlgebraElement
from heckefusion.scalars import LaurentPolynomial, RationalFunction

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def laurent(draw, max_terms=3):
    n = draw(st.integers(0, max_terms))
    terms = {draw(st.integers(-3, 3)): draw(small_rationals) for _ in range(n)}
    return LaurentPolynomial(terms)


@st.composite
def rational_functions(draw, nonzero=False):
    num = draw(laurent())
    den = draw(laurent(max_terms=2).filter(lambda p: not p.is_zero()))
    out = RationalFunction(num, den)
    if nonzero and out.is_zero():
        out = RationalFunction.ONE
    return out


@st.composite
def permutations(draw, n):
    return tuple(draw(st.permutations(range(1, n + 1))))


@st.composite
def partitions(draw, max_size=6):
    n = draw(st.integers(1, max_size))
    parts = []
    left = n
    while left:
        p = draw(st.integers(1, min(left, parts[-1] if parts else left)))
        parts.append(p)
        left -= p
    return Partition(tuple(parts))


@st.composite
def algebra_elements(draw, rank, max_terms=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        terms[draw(permutations(rank))] = RationalFunction.const(draw(small_rationals)) * RationalFunction.q_power(
            draw(st.integers(-2, 2)))
    return AlgebraElement(rank, terms)


def fractions_nonzero():
    return small_rationals.filter(lambda x: x != Fraction(0))
