"""Exact rational arithmetic on open intervals.

Everything here is built on ``fractions.Fraction``: exact big-integer
rationals, no floating point anywhere.  The central objects are open
intervals (lo, hi) with rational endpoints, finite disjoint unions of
them, and the two counting quantities used throughout the workbench:

* ``count_integers``: the number of integers strictly between lo and hi,
* ``residual``: (hi - lo) minus that count, which for (0, t) is the
  fractional part of t and for shifted intervals may be negative.

Irrational thresholds are modelled by half-odd rationals (odd/2, e.g.
21/2 for 10.5): dividing such a value by any positive integer can never
produce an integer, which is the only property irrationality is needed
for.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import CapacityError

Rational = Fraction

DEFAULT_ENUM_CAP = 10**6


def rational(num: int, den: int = 1) -> Fraction:
    return Fraction(num, den)


def half_odd(n: int) -> Fraction:
    """The half-odd surrogate n + 1/2 (e.g. half_odd(10) == 21/2)."""
    return Fraction(2 * n + 1, 2)


def is_half_odd(x: Fraction) -> bool:
    x = Fraction(x)
    return x.denominator == 2 and x.numerator % 2 == 1


def require_half_odd(x: Fraction) -> Fraction:
    """Validate that x is odd/2, the exact stand-in for an irrational threshold.

    For such x and any integer a >= 1, x/a has an odd numerator and an even
    denominator, hence is never an integer.
    """
    x = Fraction(x)
    if not is_half_odd(x):
        raise ValueError(f"expected a half-odd value (odd/2), got {x}")
    return x


def parse_half_odd(text: str) -> Fraction:
    """Parse decimal text like '10.5'; anything not ending in .5 is rejected."""
    t = text.strip()
    if not t.endswith(".5") or not t[:-2].isdigit():
        raise ValueError(f"expected a positive half-odd decimal like '10.5', got {text!r}")
    return Fraction(2 * int(t[:-2]) + 1, 2)


def floor_rational(r: Fraction) -> int:
    """Largest integer <= r."""
    r = Fraction(r)
    return r.numerator // r.denominator


def last_integer_below(r: Fraction) -> int:
    """Largest integer strictly below r."""
    r = Fraction(r)
    return (r.numerator - 1) // r.denominator


@dataclass(frozen=True)
class OpenInterval:
    """The open interval {t : lo < t < hi} with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: ({self.lo}, {self.hi})")

    def __repr__(self) -> str:
        return f"({self.lo}, {self.hi})"

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, t: Fraction) -> bool:
        return self.lo < t < self.hi

    def count_integers(self) -> int:
        """Number of integers strictly inside, by exact floor/ceil arithmetic."""
        n = last_integer_below(self.hi) - floor_rational(self.lo)
        return n if n > 0 else 0

    def residual(self) -> Fraction:
        """(hi - lo) - count_integers; negative values are possible for shifted intervals."""
        return self.length - self.count_integers()

    def integers_in(self, cap: int = DEFAULT_ENUM_CAP) -> list[int]:
        """The integers strictly inside, ascending.  Errors out above `cap` entries."""
        n = self.count_integers()
        if n > cap:
            raise CapacityError(f"interval {self} holds {n} integers, enumeration cap is {cap}")
        first = floor_rational(self.lo) + 1
        return list(range(first, first + n))

    def divided_by(self, a: int) -> "OpenInterval":
        """Scale endpoints by 1/a (a >= 1): the multiples-of-a view used by the sieve."""
        if a < 1:
            raise ValueError(f"divisor must be a positive integer, got {a}")
        return OpenInterval(self.lo / a, self.hi / a)

    def intersects(self, other: "OpenInterval") -> bool:
        return self.lo < other.hi and other.lo < self.hi


def count_integers(iv: OpenInterval) -> int:
    return iv.count_integers()


def residual(iv: OpenInterval) -> Fraction:
    return iv.residual()


def integers_in(iv: OpenInterval, cap: int = DEFAULT_ENUM_CAP) -> list[int]:
    return iv.integers_in(cap)


class IntervalSet:
    """A finite union of pairwise-disjoint open intervals, sorted by lo.

    Touching parts (hi_i == lo_{i+1}) are merged only when the shared
    boundary is not an integer, so integer counting is never affected by
    normalization.  Under the half-odd threshold regime boundaries are
    never integers; an integer boundary between touching parts is treated
    as a construction error.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[OpenInterval] = ()):
        merged: list[OpenInterval] = []
        for iv in sorted(parts, key=lambda v: (v.lo, v.hi)):
            if iv.lo == iv.hi:
                continue
            if merged and iv.lo < merged[-1].hi:
                raise ValueError(f"overlapping parts: {merged[-1]} and {iv}")
            if merged and iv.lo == merged[-1].hi:
                boundary = iv.lo
                if boundary.denominator == 1:
                    raise ValueError(f"integer {boundary} sits on a shared part boundary")
                merged[-1] = OpenInterval(merged[-1].lo, iv.hi)
            else:
                merged.append(iv)
        self.parts: tuple[OpenInterval, ...] = tuple(merged)

    def __iter__(self) -> Iterator[OpenInterval]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntervalSet) and self.parts == other.parts

    def __repr__(self) -> str:
        return "IntervalSet[" + ", ".join(map(repr, self.parts)) + "]"

    def count_integers(self) -> int:
        return sum(iv.count_integers() for iv in self.parts)

    def integers_in(self, cap: int = DEFAULT_ENUM_CAP) -> list[int]:
        out: list[int] = []
        for iv in self.parts:
            out.extend(iv.integers_in(cap))
        return out

    def total_length(self) -> Fraction:
        return sum((iv.length for iv in self.parts), Fraction(0))

    def complement_within(self, universe: OpenInterval) -> "IntervalSet":
        """universe minus this cover, as a disjoint set of open intervals.

        Every part must lie inside the universe.  The result and the cover
        together contain every integer of the universe exactly once; parts
        may share (non-integer) boundary points, which hold no integers.
        """
        gaps: list[OpenInterval] = []
        cursor = universe.lo
        for iv in self.parts:
            if iv.lo < universe.lo or iv.hi > universe.hi:
                raise ValueError(f"cover part {iv} is not inside universe {universe}")
            if cursor < iv.lo:
                gaps.append(OpenInterval(cursor, iv.lo))
            cursor = max(cursor, iv.hi)
        if cursor < universe.hi:
            gaps.append(OpenInterval(cursor, universe.hi))
        result = IntervalSet(gaps)
        assert result.count_integers() + self.count_integers() == universe.count_integers(), (
            "integer partition broken: an integer sits on a part boundary"
        )
        return result
