#!/usr/bin/env python3
"""Exact open-interval arithmetic: counting, residuals, complements.

Everything is a big-integer rational; there is no floating point and no
tolerance anywhere.  Run me directly:  python demos/01_intervals_and_residuals.py
"""
from fractions import Fraction as F

from mertenslab import IntervalSet, OpenInterval, half_odd

print("== counting integers in open intervals ==")
for lo, hi in [(F(0), F("10.5")), (F("2.8"), F("3.1")), (F("19.5"), F(30)), (F(3), F(7))]:
    iv = OpenInterval(lo, hi)
    print(f"  {iv!r:>14}  holds {iv.count_integers():2d} integers: {iv.integers_in()}")

print()
print("== residuals: (hi - lo) minus the integer count ==")
print("  for (0, t) this is the fractional part of t; shifted intervals can go negative")
for lo, hi in [(F(0), F("2.5")), (F("2.8"), F("3.1")), (F(0), F(21, 2))]:
    iv = OpenInterval(lo, hi)
    print(f"  R{iv!r} = {iv.residual()}")

print()
print("== half-odd thresholds stand in for irrational cutoffs ==")
x = half_odd(10)  # 21/2
print(f"  x = {x}; x/a is never an integer:")
for a in (1, 2, 3, 7, 21):
    print(f"    x/{a} = {x / a}")

print()
print("== set complements partition the integers exactly ==")
universe = OpenInterval(F(1, 2), F(23, 2))
cover = IntervalSet([OpenInterval(F(5, 2), F(9, 2)), OpenInterval(F(13, 2), F(17, 2))])
gaps = cover.complement_within(universe)
print(f"  universe {universe!r}: integers {universe.integers_in()}")
print(f"  cover    {cover!r}: integers {cover.integers_in()}")
print(f"  gaps     {gaps!r}: integers {gaps.integers_in()}")
assert sorted(cover.integers_in() + gaps.integers_in()) == universe.integers_in()
print("  cover + gaps == universe, integer for integer")
