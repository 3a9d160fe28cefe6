"""Brute-force reference implementations, kept independent of the package.

Everything here recomputes from first principles (trial division,
per-integer enumeration) so the package's fast paths have something
honest to disagree with.
"""

from fractions import Fraction


def naive_factor_exponents(n: int) -> list[tuple[int, int]]:
    assert n >= 1
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def naive_mu(n: int) -> int:
    if n == 1:
        return 1
    fs = naive_factor_exponents(n)
    if any(e > 1 for _, e in fs):
        return 0
    return -1 if len(fs) % 2 else 1


def naive_mertens(n: int) -> int:
    return sum(naive_mu(a) for a in range(1, n + 1))


def naive_primes_below(x: Fraction) -> list[int]:
    out = []
    n = 2
    while Fraction(n) < x:
        if all(n % d for d in range(2, n)):
            out.append(n)
        n += 1
    return out


def naive_integers_in(lo: Fraction, hi: Fraction) -> list[int]:
    lo, hi = Fraction(lo), Fraction(hi)
    first = lo.numerator // lo.denominator + 1
    out = []
    n = first
    while Fraction(n) < hi:
        out.append(n)
        n += 1
    return out


def naive_rough_members(lo: Fraction, hi: Fraction, x: Fraction) -> list[int]:
    """Integers in (lo, hi) not divisible by any prime below x; 0 never counts."""
    ps = naive_primes_below(Fraction(x))
    out = []
    for a in naive_integers_in(lo, hi):
        if a == 0:
            continue
        if all(abs(a) % p for p in ps):
            out.append(a)
    return out


def naive_mertens_interval(lo: Fraction, hi: Fraction, skip_multiples_of: int = 0) -> int:
    total = 0
    for a in naive_integers_in(lo, hi):
        if a < 1:
            continue
        if skip_multiples_of and a % skip_multiples_of == 0:
            continue
        total += naive_mu(a)
    return total


def naive_double_sum(x: Fraction, p: int) -> int:
    """The grid double sum, evaluated entirely by per-integer enumeration."""
    x = Fraction(x)
    m = (x / p).numerator // (x / p).denominator + 2
    total = 0
    for n in range(1, m + 1):
        for i in range(1, p):
            total += naive_mertens_interval(x / (n * p), x / (n * p - i), skip_multiples_of=p)
    return total
