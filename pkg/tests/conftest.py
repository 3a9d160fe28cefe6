from fractions import Fraction

import pytest

from mertenslab import MobiusTable


def half_odds(lo: int, hi: int) -> list[Fraction]:
    """Half-odd grid lo+1/2 .. hi+1/2 inclusive."""
    return [Fraction(2 * n + 1, 2) for n in range(lo, hi + 1)]


@pytest.fixture(scope="session")
def table_200() -> MobiusTable:
    return MobiusTable.upto(201)


@pytest.fixture(scope="session")
def table_10k() -> MobiusTable:
    return MobiusTable.upto(10001)
