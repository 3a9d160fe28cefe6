#!/usr/bin/env python3
"""The two-prime decomposition and the correction-term scan.

For primes q < p the p-series splits into a main term, gap terms from
the long rows, and leftover terms from the short rows against the
q-series.  Whatever happens to the individual claims, the difference
Sigma_p - Sigma_q equals -(p - q) exactly whenever q*q > x, because the
one-row defects of the two series cancel.
"""
from fractions import Fraction as F

from mertenslab import (
    Interpretation,
    MobiusTable,
    build_row_diagram,
    exponent_scan,
    gap_sum,
    mertens_coprime,
    OpenInterval,
    row_sum,
    series_sum,
    strategy_decomposition,
    within_sqrt,
)

table = MobiusTable.upto(250)
x = F("23.5")

print(f"== row diagram for x = {x}, p = 7 ==")
d = build_row_diagram(x, 7)
mp_x = mertens_coprime(OpenInterval(F(0), x), 7, table)
print(f"  columns per row: {d.m};  coprime Mertens over (0, x): {mp_x}")
for i in range(1, 7):
    r, g = row_sum(d, i, table), gap_sum(d, i, table)
    print(f"  row {i}: sum {r:3d}   gap sum {g:3d}   row+gap = {r + g:3d}")
print("  every row plus its gaps reproduces the full coprime sum")

print()
print("== decomposition against -(p - q) ==")
for interp in (Interpretation(), Interpretation(gap_sign=-1, leftover_measure="q"),
               Interpretation(gap_sign=1, leftover_measure="p")):
    rep = strategy_decomposition(x, 7, 5, interp, table)
    print(
        f"  [{rep.interpretation:<22}] main {rep.term_main:3d}  gaps {rep.term_gaps:3d}  "
        f"leftover {rep.term_leftover:3d}  total {rep.total:3d}  expected {rep.expected}  "
        f"{'pass' if rep.passed else 'FAIL'}"
    )

print()
print("== the interpretation-free consequence ==")
for (p, q) in [(7, 5), (11, 7), (23, 19)]:
    if F(p) < x:
        sp, sq = series_sum(x, p, table), series_sum(x, q, table)
        print(f"  Sigma_{p} - Sigma_{q} = {sp} - ({sq}) = {sp - sq} = -({p} - {q})")

print()
print("== correction magnitudes against sqrt(x) (exact squaring) ==")
rows = exponent_scan([F(2 * n + 1, 2) for n in range(10, 201, 10)], table=table)
for row in rows:
    flag = "within" if row.within_sqrt else "ABOVE"
    print(
        f"  x={str(row.x):>6}  (p,q)=({row.p},{row.q})  Mp'(x)={row.mp_x:3d}  "
        f"correction={row.correction!s:>4}  {flag} sqrt(x)"
    )
assert all(within_sqrt(r.correction, r.x) == r.within_sqrt for r in rows)
