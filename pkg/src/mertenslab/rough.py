"""Rough-number sets and the inclusion-exclusion machinery around them.

An integer is x-rough when no prime below x divides it.  The workbench
counts the x-rough integers in an open interval two independent ways:

* ``rough_count_oracle``: enumerate the integers and trial-divide each
  one by every prime below x (the slow, trustworthy route), and
* ``rough_count_sieve``: the alternating Legendre sum over squarefree
  products of the primes below x (the classical sieve route).

Membership treats any integer: 1 and -1 have no prime factor and always
qualify; 0 is divisible by every prime and never does; negative
integers divide like their absolute value.  These conventions are
exactly the ones under which the two routes agree on every interval,
including shifted windows that dip below zero.

The shifted windows of interest sit just below k*N_p, where N_p is the
primorial of all primes below x with one prime p left out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import CapacityError
from .intervals import DEFAULT_ENUM_CAP, OpenInterval
from .moebius import floor_log, is_prime, primes_below

PRIMORIAL_BIT_LIMIT = 128
SUBSET_PRIME_CAP = 20


@dataclass(frozen=True)
class Primorial:
    """N_p: the product of every prime below x except p."""

    x: Fraction
    excluded: int
    value: int


def max_primorial_threshold() -> Fraction:
    """Largest half-odd x whose full primorial still fits in 128 bits.

    The bound sits just below the first prime whose inclusion overflows.
    """
    product = 1
    for p in primes_below(Fraction(1000)):
        product *= p
        if product.bit_length() > PRIMORIAL_BIT_LIMIT:
            return Fraction(2 * p - 1, 2)
    raise AssertionError("prime scan bound too small for the bit limit")


def primorial_excluding(x: Fraction, p: int, primes: Optional[Sequence[int]] = None) -> Primorial:
    """N_p for the threshold x.  The full primorial must fit 128-bit arithmetic."""
    x = Fraction(x)
    if not is_prime(p) or not p < x:
        raise ValueError(f"need a prime p < x, got p={p}, x={x}")
    ps = list(primes) if primes is not None else primes_below(x)
    full = 1
    for q in ps:
        full *= q
    if full.bit_length() > PRIMORIAL_BIT_LIMIT:
        raise CapacityError(
            f"primorial for x={x} needs {full.bit_length()} bits "
            f"(limit {PRIMORIAL_BIT_LIMIT}); largest supported x is {max_primorial_threshold()}"
        )
    return Primorial(x=x, excluded=p, value=full // p)


@dataclass(frozen=True)
class RoughCount:
    """The x-rough integers found in an interval, with the method that produced them."""

    interval: OpenInterval
    threshold: Fraction
    members: tuple[int, ...]
    method: str

    @property
    def count(self) -> int:
        return len(self.members)


def is_rough(a: int, threshold: Fraction, primes: Optional[Sequence[int]] = None) -> bool:
    """True when no prime below the threshold divides a (1 and -1 qualify, 0 never)."""
    if a == 0:
        return False
    ps = primes if primes is not None else primes_below(threshold)
    n = abs(a)
    return all(n % q for q in ps)


def rough_count_oracle(
    iv: OpenInterval,
    x: Fraction,
    primes: Optional[Sequence[int]] = None,
    cap: int = DEFAULT_ENUM_CAP,
) -> RoughCount:
    """Count x-rough integers in iv by trial division on every integer, one by one."""
    x = Fraction(x)
    ps = list(primes) if primes is not None else primes_below(x)
    members = tuple(a for a in iv.integers_in(cap) if is_rough(a, x, ps))
    return RoughCount(interval=iv, threshold=x, members=members, method="oracle")


def lemma1_predicted_set(
    k: int, p: int, x: Fraction, primorial: Optional[Primorial] = None
) -> list[int]:
    """The claimed members of the window (k*N_p - x, k*N_p): {k*N_p - p**j : p**j < x}."""
    x = Fraction(x)
    if not 1 <= k <= p - 1:
        raise ValueError(f"need 1 <= k <= p-1, got k={k}, p={p}")
    n_p = primorial if primorial is not None else primorial_excluding(x, p)
    base = k * n_p.value
    return sorted(base - p**j for j in range(floor_log(p, x) + 1))


@dataclass(frozen=True)
class SquarefreeFamily:
    """Squarefree products of the primes below x, stratified by factor count.

    stratum k holds the products of exactly k distinct primes, in
    lexicographic order of the prime subsets; stratum 0 is (1,).
    """

    x: Fraction
    primes: tuple[int, ...]
    strata: tuple[tuple[int, ...], ...]

    def stratum(self, k: int) -> tuple[int, ...]:
        return self.strata[k]

    @property
    def prime_count(self) -> int:
        return len(self.primes)


def squarefree_family(x: Fraction, max_primes: int = SUBSET_PRIME_CAP) -> SquarefreeFamily:
    """All strata A_0..A_pi(x); capacity-bounded at 2**max_primes subsets."""
    x = Fraction(x)
    ps = primes_below(x)
    if len(ps) > max_primes:
        raise CapacityError(
            f"pi({x}) = {len(ps)} primes would need 2**{len(ps)} subsets (cap 2**{max_primes})"
        )
    strata: list[list[int]] = [[] for _ in range(len(ps) + 1)]
    strata[0].append(1)

    def extend(start: int, value: int, size: int) -> None:
        for idx in range(start, len(ps)):
            v = value * ps[idx]
            strata[size + 1].append(v)
            extend(idx + 1, v, size + 1)

    extend(0, 1, 0)
    return SquarefreeFamily(x=x, primes=tuple(ps), strata=tuple(tuple(s) for s in strata))


def rough_count_sieve(iv: OpenInterval, x: Fraction, family: Optional[SquarefreeFamily] = None) -> int:
    """Legendre count of x-rough integers in iv: alternating sums of multiples counts."""
    fam = family if family is not None else squarefree_family(Fraction(x))
    total = 0
    sign = 1
    for stratum in fam.strata:
        total += sign * sum(iv.divided_by(a).count_integers() for a in stratum)
        sign = -sign
    return total


def squarefree_multiples_of(
    p: int, x: Fraction, bound: Fraction
) -> list[tuple[int, int]]:
    """Squarefree multiples of p below `bound` with all prime factors below x.

    Returns (value, omega) pairs ascending by value; omega counts the
    distinct prime factors, so mu(value) = (-1)**omega.
    """
    x = Fraction(x)
    bound = Fraction(bound)
    others = [q for q in primes_below(x) if q != p]
    found: list[tuple[int, int]] = []

    def extend(start: int, value: int, omega: int) -> None:
        found.append((value, omega))
        for idx in range(start, len(others)):
            v = value * others[idx]
            if Fraction(v) < bound:
                extend(idx + 1, v, omega + 1)

    if Fraction(p) < bound:
        extend(0, p, 1)
    return sorted(found)
