"""Mobius sieve and the Mertens-sum family.

The sieve fills mu and smallest-prime-factor tables over an integer
window, segment by segment.  On top of the table sit the summatory
queries used everywhere else:

* ``mertens(x)``                  -- sum of mu(a) for 1 <= a <= x,
* ``mertens_interval(iv)``        -- the same over an open interval,
* ``mertens_coprime(iv, p)``      -- restricted to a not divisible by p,
* ``mertens_multiples(iv, p)``    -- restricted to squarefree multiples
                                     of p, optionally with the largest
                                     prime factor below a cap.

Coprime sums are answered from Mertens prefix sums via the exact
recursion  coprime(n, p) = mertens(n) + coprime(n // p, p),  a
consequence of mu(p*b) = -mu(b) for p not dividing b.  The same
relation forces  mertens(x) = mertens_coprime((0,x), p) -
mertens_coprime((0,x/p), p)  with a minus sign; the plus-sign variant
of that identity is false (see tests).

Naive helpers (`mobius_of`, `factorize`, trial-division primality) are
deliberately independent of the sieve so they can serve as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence

from .errors import CapacityError
from .intervals import OpenInterval, floor_rational, last_integer_below

DEFAULT_SEGMENT_SIZE = 1 << 16
DEFAULT_SIEVE_CAP = 10**8


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 by trial division, as (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    out: list[tuple[int, int]] = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def mobius_of(n: int) -> int:
    """mu(n) by direct factorization; the per-integer oracle for the sieve."""
    if n == 1:
        return 1
    fs = factorize(n)
    if any(e > 1 for _, e in fs):
        return 0
    return -1 if len(fs) % 2 else 1


def largest_prime_factor(a: int) -> int:
    if a < 2:
        raise ValueError(f"no prime factor for a={a}")
    return factorize(a)[-1][0]


def smallest_prime_factor(a: int) -> int:
    if a < 2:
        raise ValueError(f"no prime factor for a={a}")
    return factorize(a)[0][0]


def primes_below(x: Fraction | int) -> list[int]:
    """All primes p with p < x, ascending (pi(x) = len of the result)."""
    x = Fraction(x)
    if x <= 2:
        return []
    limit = last_integer_below(x)
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(range(p * p, limit + 1, p))
    return [n for n in range(2, limit + 1) if sieve[n]]


def floor_log(p: int, x: Fraction) -> int:
    """Largest n >= 0 with p**n < x ([log_p x] for the non-integer thresholds used here)."""
    if p < 2:
        raise ValueError(f"base must be >= 2, got {p}")
    x = Fraction(x)
    if x <= 1:
        raise ValueError(f"threshold must exceed 1, got {x}")
    n = 0
    power = p
    while power < x:
        n += 1
        power *= p
    return n


@dataclass
class MobiusTable:
    """mu and smallest prime factor over the window lo..hi, plus Mertens prefix sums.

    Invariants: mu[n] = 0 iff some p**2 divides n; otherwise (-1)**omega(n);
    mu[1] = +1; spf[n] is the least prime dividing n for n >= 2 (0 for n = 1).
    """

    lo: int
    hi: int
    _mu: list[int] = field(repr=False)
    _spf: list[int] = field(repr=False)
    _prefix: Optional[list[int]] = field(default=None, repr=False)

    @classmethod
    def sieve(
        cls,
        lo: int,
        hi: int,
        segment_size: int = DEFAULT_SEGMENT_SIZE,
        cap: int = DEFAULT_SIEVE_CAP,
    ) -> "MobiusTable":
        """Fill the window [lo, hi] with a segmented sieve.

        Segment size is a cache tunable only; results are independent of it.
        """
        if not 1 <= lo <= hi:
            raise ValueError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
        if hi > cap:
            raise CapacityError(f"sieve bound {hi} exceeds cap {cap}")
        if segment_size < 1:
            raise ValueError("segment_size must be positive")
        width = hi - lo + 1
        mu = [1] * width
        spf = [0] * width
        base = primes_below(isqrt(hi) + 1)
        for seg_lo in range(lo, hi + 1, segment_size):
            seg_hi = min(hi, seg_lo + segment_size - 1)
            rem = list(range(seg_lo, seg_hi + 1))
            for p in base:
                start = ((seg_lo + p - 1) // p) * p
                for m in range(start, seg_hi + 1, p):
                    i = m - lo
                    j = m - seg_lo
                    e = 0
                    while rem[j] % p == 0:
                        rem[j] //= p
                        e += 1
                    if spf[i] == 0:
                        spf[i] = p
                    mu[i] = 0 if e > 1 else -mu[i]
            for m in range(seg_lo, seg_hi + 1):
                j = m - seg_lo
                if rem[j] > 1:
                    # leftover prime above sqrt(hi); it divides m exactly once
                    i = m - lo
                    if spf[i] == 0:
                        spf[i] = rem[j]
                    mu[i] = -mu[i]
        if lo == 1:
            mu[0] = 1
            spf[0] = 0
        return cls(lo=lo, hi=hi, _mu=mu, _spf=spf)

    @classmethod
    def upto(cls, hi: int, **kwargs) -> "MobiusTable":
        return cls.sieve(1, hi, **kwargs)

    def _index(self, n: int) -> int:
        if not self.lo <= n <= self.hi:
            raise CapacityError(f"n={n} outside sieved window [{self.lo}, {self.hi}]")
        return n - self.lo

    def mu(self, n: int) -> int:
        return self._mu[self._index(n)]

    def spf(self, n: int) -> int:
        """Smallest prime factor of n (0 for n = 1, which has no prime factor)."""
        return self._spf[self._index(n)]

    def mu_values(self) -> Sequence[int]:
        return tuple(self._mu)

    def spf_values(self) -> Sequence[int]:
        return tuple(self._spf)

    def _prefix_sums(self) -> list[int]:
        if self.lo != 1:
            raise ValueError("Mertens prefix sums need a table starting at 1")
        if self._prefix is None:
            acc = 0
            pref = [0] * (self.hi + 1)
            for m in range(1, self.hi + 1):
                acc += self._mu[m - 1]
                pref[m] = acc
            self._prefix = pref
        return self._prefix

    def mertens_upto(self, n: int) -> int:
        """Sum of mu(a) for 1 <= a <= n; needs a table rooted at lo = 1."""
        pref = self._prefix_sums()
        if n <= 0:
            return 0
        if n > self.hi:
            raise CapacityError(f"n={n} beyond sieved bound {self.hi}")
        return pref[n]

    def coprime_mertens_upto(self, n: int, p: int) -> int:
        """Sum of mu(a) for 1 <= a <= n with p not dividing a."""
        pref = self._prefix_sums()
        if n > self.hi:
            raise CapacityError(f"n={n} beyond sieved bound {self.hi}")
        total = 0
        while n >= 1:
            total += pref[n]
            n //= p
        return total


def _table_for(bound: Fraction | int, table: Optional[MobiusTable]) -> MobiusTable:
    n = max(1, floor_rational(Fraction(bound)))
    if table is None:
        return MobiusTable.upto(n)
    if table.lo != 1 or table.hi < n:
        raise CapacityError(f"table window [{table.lo}, {table.hi}] too small for bound {bound}")
    return table


def mertens(x: Fraction | int, table: Optional[MobiusTable] = None) -> int:
    """M(x): sum of mu(a) over 1 <= a <= x."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"mertens needs x > 0, got {x}")
    n = floor_rational(x)
    return _table_for(n, table).mertens_upto(n)


def mertens_interval(iv: OpenInterval, table: Optional[MobiusTable] = None) -> int:
    """Sum of mu(a) over the positive integers strictly inside iv."""
    hi = last_integer_below(iv.hi)
    lo = max(0, floor_rational(iv.lo))
    if hi <= lo:
        return 0
    t = table if table is not None and table.lo == 1 else _table_for(hi, table)
    return t.mertens_upto(hi) - t.mertens_upto(lo)


def mertens_coprime(iv: OpenInterval, p: int, table: Optional[MobiusTable] = None) -> int:
    """Sum of mu(a) over integers in iv not divisible by the prime p."""
    r = iv.hi
    hi = (r.numerator - 1) // r.denominator
    r = iv.lo
    lo = r.numerator // r.denominator
    if lo < 0:
        lo = 0
    if hi <= lo:
        return 0
    t = table if table is not None and table.lo == 1 else _table_for(hi, table)
    return t.coprime_mertens_upto(hi, p) - t.coprime_mertens_upto(lo, p)


def mertens_multiples(
    iv: OpenInterval,
    p: int,
    largest_factor_below: Optional[Fraction] = None,
    table: Optional[MobiusTable] = None,
) -> int:
    """Sum of mu(a) over squarefree multiples of p in iv.

    With `largest_factor_below` set, only terms whose largest prime factor
    lies below that threshold are kept (1 has no prime factor and never
    qualifies as a multiple of p anyway).
    """
    b_hi = last_integer_below(iv.hi / p)
    b_lo = max(0, floor_rational(iv.lo / p))
    if b_hi <= b_lo:
        return 0
    t = _table_for(b_hi * p, table)
    cap = Fraction(largest_factor_below) if largest_factor_below is not None else None
    total = 0
    for b in range(b_lo + 1, b_hi + 1):
        m = t.mu(b * p)
        if m == 0:
            continue
        if cap is not None and Fraction(largest_prime_factor(b * p)) >= cap:
            continue
        total += m
    return total
