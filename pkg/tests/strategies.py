"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from tripletrep.linalg import Matrix
from tripletrep.scalar import LaurentPoly

VARS = ("t", "s")

monomials = st.tuples(*[st.integers(-3, 3) for _ in VARS]).map(
    lambda exps: tuple((v, e) for v, e in zip(VARS, exps) if e))

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)

laurent = st.dictionaries(monomials, coefficients, max_size=4).map(LaurentPoly)

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=6)


def square_matrices(n, elements=rationals):
    return st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n).map(Matrix)


nonzero_rationals = rationals.filter(lambda x: x != 0)


def unit_diagonal(n):
    return st.lists(nonzero_rationals, min_size=n, max_size=n).map(lambda v: Matrix.diag(*v))


__all__ = ["laurent", "rationals", "square_matrices", "unit_diagonal", "Fraction"]
