#!/usr/bin/env python3
"""Rough numbers in primorial-shifted windows, by oracle and by sieve.

The window (k*N_p - x, k*N_p), where N_p multiplies every prime below x
except p, is claimed to hold exactly the integers k*N_p - p**j with
p**j < x.  The oracle shows something sharper: that is true unless
k*N_p = 1 (mod p), in which case the j = 0 element k*N_p - 1 is
divisible by p and drops out.  Exactly one k per (x, p) is affected.
"""
from fractions import Fraction as F

from mertenslab import (
    OpenInterval,
    floor_log,
    lemma1_predicted_set,
    primes_below,
    primorial_excluding,
    rough_count_oracle,
    rough_count_sieve,
)

x = F("10.5")
print(f"== rough windows for x = {x} ==")
print(f"  primes below x: {primes_below(x)}")
print(f"  S(0, x) members: {rough_count_oracle(OpenInterval(F(0), x), x).members}")
print()

for p in (7, 3, 2):
    n_p = primorial_excluding(x, p)
    L = floor_log(p, x)
    print(f"  p = {p}: N_p = {n_p.value}, floor_log = {L}, claimed count = {L + 1}")
    for k in range(1, p):
        base = k * n_p.value
        window = OpenInterval(base - x, F(base))
        found = rough_count_oracle(window, x)
        predicted = lemma1_predicted_set(k, p, x, n_p)
        marker = "  <-- k*N_p = 1 (mod p): k*N_p - 1 drops out" if base % p == 1 else ""
        print(
            f"    k={k}: window just below {base:4d}: "
            f"found {list(found.members)} vs predicted {predicted}{marker}"
        )
    print()

print("== the inclusion-exclusion sieve agrees with the oracle everywhere ==")
for p in (3, 5, 7):
    n_p = primorial_excluding(x, p)
    for k in range(1, p):
        window = OpenInterval(k * n_p.value - x, F(k * n_p.value))
        assert rough_count_sieve(window, x) == rough_count_oracle(window, x).count
print("  checked every window above: sieve == oracle, member for member count")
