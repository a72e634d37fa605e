"""Primality, p-adic valuations, and prime enumeration in progressions.

`is_prime` is exact trial division below 2^32 and a deterministic
Miller-Rabin witness set (the first twelve primes) above, which is proven
correct for all inputs below 3.317e24 -- far beyond anything this package
produces.  Larger inputs fall back to the same witnesses as a strong
pseudoprime test and are documented as high-confidence rather than proven.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import count
from typing import Iterator, Union

from .errors import BadPrimeError, DomainError
from .polys import Poly

INFINITY = math.inf  # ord_p(0); never enters any exact computation

_SIEVE_LIMIT = 1 << 16
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


def _small_primes() -> list[int]:
    sieve = bytearray([1]) * _SIEVE_LIMIT
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(_SIEVE_LIMIT) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(_SIEVE_LIMIT) if sieve[i]]


SMALL_PRIMES = _small_primes()
_SMALL_PRIME_SET = frozenset(SMALL_PRIMES)


def _strong_probable_prime(n: int, a: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < _SIEVE_LIMIT:
        return m in _SMALL_PRIME_SET
    for p in SMALL_PRIMES:
        if p * p > m:
            return True
        if m % p == 0:
            return False
    # m has no factor below 2^16, so m < 2^32 is already settled above.
    return all(_strong_probable_prime(m, a) for a in _MR_WITNESSES if a % m != 0)


def primes() -> Iterator[int]:
    """All primes, ascending."""
    yield from SMALL_PRIMES
    for m in count(_SIEVE_LIMIT + 1, 2):
        if is_prime(m):
            yield m


def ord_p(q: Union[int, Fraction], p: int) -> Union[int, float]:
    """The p-adic valuation of a rational; ord_p(0) is INFINITY."""
    if not is_prime(p):
        raise BadPrimeError(f"{p} is not prime")
    q = Fraction(q)
    if q == 0:
        return INFINITY

    def _ord(n: int) -> int:
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        return v

    return _ord(abs(q.numerator)) - _ord(q.denominator)


def primes_in_ap_interval(lam: int, mu: int, lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi and p = lam (mod mu), ascending."""
    if mu < 1:
        raise DomainError("modulus must be positive")
    if math.gcd(lam, mu) != 1:
        raise DomainError(f"gcd({lam}, {mu}) != 1")
    if lo > hi:
        raise DomainError("empty interval: lo > hi")
    start = max(lo, 2)
    first = start + (lam - start) % mu
    return [m for m in range(first, hi + 1, mu) if is_prime(m)]


def _pollard_rho(n: int) -> int:
    # n odd composite with no factor below 2^16
    for c in count(1):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise AssertionError("unreachable")


def prime_factors(m: int) -> set[int]:
    """The set of primes dividing |m|; m must be nonzero."""
    if m == 0:
        raise DomainError("0 has no prime factorization")
    m = abs(m)
    out: set[int] = set()
    for p in SMALL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            out.add(p)
            while m % p == 0:
                m //= p
    if m > 1:
        if is_prime(m):
            out.add(m)
        else:
            d = _pollard_rho(m)
            out |= prime_factors(d)
            out |= prime_factors(m // d)
    return out


def candidate_primes(g: Poly) -> set[int]:
    """Primes dividing a_0 * a_n of a primitive integer polynomial; outside
    this set the Newton polygon is a single slope-0 segment."""
    if g.is_zero() or g[0] == 0:
        raise DomainError("constant term is zero; strip x-powers first")
    if any(c.denominator != 1 for c in g.coeffs):
        raise DomainError("candidate_primes expects an integer polynomial")
    return prime_factors(int(g[0]) * int(g.leading))
