"""Shared helpers: signed-arithmetic oracles live here, outside the
library, so every ordered-difference result can be checked against plain
Fraction subtraction."""

import random
from fractions import Fraction

import pytest

from semikit import NonnegScalar, SemiVector


def F(x) -> Fraction:
    """Fraction view of a scalar (the signed oracle's number type)."""
    if isinstance(x, NonnegScalar):
        return Fraction(x.numerator, x.denominator)
    return Fraction(x)


def NS(x) -> NonnegScalar:
    return NonnegScalar(x)


def rand_scalar(rng: random.Random, max_num=60, max_den=12, allow_zero=True) -> NonnegScalar:
    return NonnegScalar(rng.randint(0 if allow_zero else 1, max_num), rng.randint(1, max_den))


def rand_vector(rng: random.Random, n: int, **kw) -> SemiVector:
    return SemiVector([rand_scalar(rng, **kw) for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(20240901)
