#!/usr/bin/env python3
"""The Mobius sieve and the Mertens-sum family built on top of it."""
from fractions import Fraction as F

from mertenslab import (
    MobiusTable,
    OpenInterval,
    mertens,
    mertens_coprime,
    mertens_interval,
    mertens_multiples,
    mobius_of,
)

table = MobiusTable.upto(1000)

print("== mu and smallest prime factor from the segmented sieve ==")
print("  n      1..15")
print("  mu   ", [table.mu(n) for n in range(1, 16)])
print("  spf  ", [table.spf(n) for n in range(1, 16)])
print("  cross-check against per-integer factorization:",
      all(table.mu(n) == mobius_of(n) for n in range(1, 1001)))

print()
print("== Mertens values ==")
for x in (F("10.5"), F("100.5"), F("1000.5")):
    print(f"  M({x}) = {mertens(x, table)}")

print()
print("== interval and restricted variants ==")
iv = OpenInterval(F(0), F("10.5"))
print(f"  mu-sum over (2.5, 6.5)               = {mertens_interval(OpenInterval(F('2.5'), F('6.5')), table)}")
print(f"  mu-sum over (0, 10.5), 7 coprime     = {mertens_coprime(iv, 7, table)}")
print(f"  mu-sum over (0, 10.5), multiples of 7 = {mertens_multiples(iv, 7, table=table)}")

print()
print("== the sign that relates the plain and coprime sums ==")
print("  mu(p*b) = -mu(b) for p not dividing b forces a subtraction:")
x = F("10.5")
for p in (2, 7):
    full = mertens(x, table)
    minus = mertens_coprime(OpenInterval(F(0), x), p, table) - mertens_coprime(
        OpenInterval(F(0), x / p), p, table
    )
    plus = mertens_coprime(OpenInterval(F(0), x), p, table) + mertens_coprime(
        OpenInterval(F(0), x / p), p, table
    )
    print(f"  p={p}: M(x) = {full}; coprime difference = {minus}; coprime sum = {plus}")
print("  the additive variant is simply false; only the difference reproduces M(x)")
