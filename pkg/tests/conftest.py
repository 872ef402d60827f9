"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tensorcert.poly import PolyRing
from tensorcert.xyz import Signature, xyz_ring


def coefficients():
    return st.fractions(
        min_value=-4, max_value=4, max_denominator=3
    ).filter(lambda q: q != 0)


def monomials(ring: PolyRing, max_exp: int = 2):
    return st.tuples(*[st.integers(0, max_exp) for _ in range(ring.nvars)])


def polynomials(ring: PolyRing, max_terms: int = 5, max_exp: int = 2):
    """Random sparse polynomials, possibly zero."""

    def build(pairs):
        terms = {}
        for mono, coeff in pairs:
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return ring.from_terms({m: c for m, c in terms.items() if c})

    return st.lists(
        st.tuples(monomials(ring, max_exp), coefficients()), max_size=max_terms
    ).map(build)


def nonzero_polynomials(ring: PolyRing, max_terms: int = 5, max_exp: int = 2):
    return polynomials(ring, max_terms, max_exp).filter(lambda f: not f.is_zero())


def seeded(name: str) -> random.Random:
    return random.Random(f"tensorcert-tests:{name}")


@pytest.fixture
def ring1() -> PolyRing:
    return xyz_ring(1)


@pytest.fixture
def ring2() -> PolyRing:
    return xyz_ring(2)


def all_signatures(n: int) -> list[Signature]:
    return Signature.sweep(n)
