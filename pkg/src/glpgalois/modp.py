"""Frobenius cycle types via distinct-degree factorization over F_p.

Only factor-degree multisets are ever needed, so the equal-degree stage of
factorization is skipped entirely: the degree-d block found by the gcd ladder
with x^(p^d) - x contributes deg/d copies of d.  This keeps the whole module
deterministic.  The inner F_p[x] arithmetic uses int64 numpy vectors; primes
are checked against the overflow bound.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from .errors import BadPrimeError, DomainError
from .polys import Poly, discriminant
from .primes import is_prime, ord_p, primes

_P_LIMIT = 1 << 25  # keeps p^2 * deg far inside int64


@dataclass(frozen=True)
class CycleType:
    degrees: tuple[int, ...]  # sorted multiset of irreducible-factor degrees
    prime: int

    @property
    def n(self) -> int:
        return sum(self.degrees)

    @property
    def is_even(self) -> bool:
        return (self.n - len(self.degrees)) % 2 == 0


@functools.lru_cache(maxsize=256)
def _cached_discriminant(f: Poly) -> Fraction:
    return discriminant(f)


def is_good_prime(f: Poly, p: int, disc: Optional[Fraction] = None) -> bool:
    """True iff p divides neither disc(f) nor the leading coefficient nor any
    coefficient denominator.  `disc` may be supplied when known analytically."""
    if f.degree < 1:
        raise DomainError("requires degree >= 1")
    if not is_prime(p):
        raise BadPrimeError(f"{p} is not prime")
    if any(ord_p(c, p) < 0 for c in f.coeffs if c != 0):
        return False
    if ord_p(f.leading, p) != 0:
        return False
    if disc is None:
        disc = _cached_discriminant(f)
    return ord_p(disc, p) == 0


def good_primes(f: Poly, disc: Optional[Fraction] = None) -> Iterator[int]:
    """The good primes of f, ascending."""
    if disc is None:
        disc = _cached_discriminant(f)
    for p in primes():
        if is_good_prime(f, p, disc=disc):
            yield p


def _monic_reduction(f: Poly, p: int) -> np.ndarray:
    coeffs = []
    for c in f.coeffs:
        if c.denominator % p == 0:
            raise BadPrimeError(f"coefficient denominator vanishes mod {p}")
        coeffs.append(c.numerator * pow(c.denominator, -1, p) % p)
    if coeffs[-1] == 0:
        raise BadPrimeError(f"leading coefficient vanishes mod {p}")
    inv = pow(coeffs[-1], -1, p)
    return np.array([c * inv % p for c in coeffs], dtype=np.int64)


def _trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    return a[: nz[-1] + 1] if len(nz) else a[:0]


def _mulmod(a: np.ndarray, b: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    if len(a) == 0 or len(b) == 0:
        return a[:0]
    c = np.convolve(a, b) % p
    n = len(f) - 1
    for i in range(len(c) - 1, n - 1, -1):
        q = c[i]
        if q:
            c[i - n : i + 1] = (c[i - n : i + 1] - q * f) % p
    return _trim(c[:n])

def _powmod(a: np.ndarray, e: int, f: np.ndarray, p: int) -> np.ndarray:
    result = np.array([1], dtype=np.int64)
    base = a
    while e:
        if e & 1:
            result = _mulmod(result, base, f, p)
        base = _mulmod(base, base, f, p)
        e >>= 1
    return result


def _polymod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # b monic
    a = a.copy()
    n = len(b) - 1
    for i in range(len(a) - 1, n - 1, -1):
        q = a[i]
        if q:
            a[i - n : i + 1] = (a[i - n : i + 1] - q * b) % p
    return _trim(a[:n])


def _make_monic(a: np.ndarray, p: int) -> np.ndarray:
    return a * pow(int(a[-1]), -1, p) % p


def _gcd(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    while len(b):
        a, b = b, _polymod(a, _make_monic(b, p), p)
    return _make_monic(a, p) if len(a) else a


def _ddf_degrees(fbar: np.ndarray, p: int) -> tuple[list[int], list[np.ndarray]]:
    """Degrees of the irreducible factors of a square-free monic fbar, plus
    the per-degree blocks for the reconstruction check."""
    degrees: list[int] = []
    blocks: list[np.ndarray] = []
    fcur = fbar
    x = np.array([0, 1], dtype=np.int64)
    h = x.copy()
    d = 0
    while len(fcur) - 1 > 0:
        d += 1
        if 2 * d > len(fcur) - 1:
            degrees.append(len(fcur) - 1)
            blocks.append(fcur)
            break
        h = _powmod(h, p, fcur, p)
        hx = np.zeros(max(len(h), 2), dtype=np.int64)
        hx[: len(h)] = h
        hx[1] = (hx[1] - 1) % p  # h - x
        diff = _trim(hx)
        g = _gcd(fcur, diff, p) if len(diff) else fcur
        if len(g) - 1 > 0:
            degrees.extend([d] * ((len(g) - 1) // d))
            blocks.append(g)
            fcur = _exact_div(fcur, g, p)
            h = _polymod(h, fcur, p) if len(fcur) - 1 > 0 else h
    return degrees, blocks


def _exact_div(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # a, b monic, b | a
    a = a.copy()
    n = len(b) - 1
    q = np.zeros(len(a) - n, dtype=np.int64)
    for i in range(len(a) - 1, n - 1, -1):
        c = a[i]
        if c:
            q[i - n] = c
            a[i - n : i + 1] = (a[i - n : i + 1] - c * b) % p
    assert not np.any(a[:n]), "division was not exact"
    return q


def factor_degrees(f: Poly, p: int, disc: Optional[Fraction] = None) -> CycleType:
    """Degree multiset of the irreducible factors of f mod a good prime p."""
    if not is_good_prime(f, p, disc=disc):
        raise BadPrimeError(f"{p} is not a good prime for this polynomial")
    fbar = _monic_reduction(f, p)
    if p >= _P_LIMIT:
        raise BadPrimeError(f"prime {p} exceeds the supported bound {_P_LIMIT}")
    deriv = _trim(np.arange(len(fbar), dtype=np.int64)[1:] * fbar[1:] % p)
    if len(_gcd(fbar, deriv, p)) != 1:
        raise BadPrimeError(f"f mod {p} is not square-free")
    degrees, blocks = _ddf_degrees(fbar, p)
    # Reconstruction: the product of the blocks is the monic reduction.
    prod = np.array([1], dtype=np.int64)
    for b in blocks:
        prod = np.convolve(prod, b) % p
    assert np.array_equal(prod, fbar), "factor blocks do not multiply back to f mod p"
    assert sum(degrees) == f.degree
    return CycleType(degrees=tuple(sorted(degrees)), prime=p)


def subset_sum_closure(degrees: tuple[int, ...]) -> frozenset[int]:
    total = sum(degrees)
    mask = 1
    for d in degrees:
        mask |= mask << d
    return frozenset(i for i in range(total + 1) if mask >> i & 1)


def degree_set_filter(
    f: Poly,
    primes_list: list[int],
    disc: Optional[Fraction] = None,
    stop_when_irreducible: bool = False,
) -> set[int]:
    """Intersect the subset-sum closures of the factor-degree multisets over
    the given good primes; a superset of the degrees of rational factors of f.
    {0, n} always survives; an output of exactly {0, n} proves irreducibility."""
    n = f.degree
    out = frozenset(range(n + 1))
    for p in primes_list:
        out &= subset_sum_closure(factor_degrees(f, p, disc=disc).degrees)
        if stop_when_irreducible and out == {0, n}:
            break
    return set(out)


CONTAINS_ODD = "contains-odd-permutation"
ALL_EVEN = "all-even-so-far"


def parity_evidence(samples: list[CycleType]) -> str:
    """An odd Frobenius cycle type proves the group is not inside A_n; all-even
    is only evidence, never proof."""
    if not samples:
        raise DomainError("need at least one sample")
    return CONTAINS_ODD if any(not ct.is_even for ct in samples) else ALL_EVEN
