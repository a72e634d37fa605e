"""Generalized Laguerre Polynomials and the A_n / S_n classifier.

L_n^(a)(x) = sum_j binom(n+a, n-j) (-x)^j / j! for rational a that is not a
negative integer.  The classifier works with the monic integral normalization
f(x) = mu^n n! L_n^(lam/mu)(-x/mu) = sum_j binom(n,j) c_j x^j with
c_j = prod_{k=j+1}^n (k*mu + lam), hunts for a criterion prime in the Jordan
window via the coefficient-valuation shortcut, and resolves A_n vs S_n by the
squareness of the discriminant product Delta = prod_{j=2}^n j^j (a+j)^(j-1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Optional, Union

from .certify import (
    ASSUMED,
    CONTAINS_AN,
    DEGREE_SET_FILTER,
    SINGLE_SLOPE,
    GaloisCertificate,
    certificate_to_dict,
    certify_large_galois,
    lemma_key_check,
)
from .errors import DomainError
from .modp import degree_set_filter, good_primes
from .newton import newton_index, newton_polygon, single_slope_irreducibility_evidence
from .polys import Poly
from .primes import is_prime, primes_in_ap_interval

GROUP_AN = "A_n"
GROUP_SN = "S_n"
GROUP_INCONCLUSIVE = "inconclusive"

_EVIDENCE_PRIME_BUDGET = 10


@dataclass(frozen=True)
class GlpParams:
    n: int
    lam: int
    mu: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("degree must be positive")
        if self.mu < 1:
            raise DomainError("mu must be >= 1")
        if math.gcd(self.lam, self.mu) != 1:
            raise DomainError("lam/mu must be in lowest terms")
        if self.mu == 1 and self.lam < 0:
            raise DomainError("alpha must not be a negative integer (x divides the polynomial)")

    @staticmethod
    def from_alpha(n: int, alpha: Union[int, Fraction, str]) -> "GlpParams":
        a = Fraction(alpha)
        return GlpParams(n=n, lam=a.numerator, mu=a.denominator)

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.lam, self.mu)


@dataclass(frozen=True)
class Classification:
    group: str
    discriminant: Fraction
    discriminant_is_square: bool
    certificate: GaloisCertificate
    criterion_prime: Optional[int]
    ell: Optional[int]
    params: GlpParams

    def __post_init__(self):
        if self.group in (GROUP_AN, GROUP_SN):
            assert self.certificate.verdict == CONTAINS_AN
            assert self.discriminant_is_square == (self.group == GROUP_AN)


def glp(params: GlpParams) -> Poly:
    """L_n^(alpha) with exact rational coefficients."""
    n, a = params.n, params.alpha
    coeffs = []
    for j in range(n + 1):
        binom = Fraction(1)
        for i in range(j + 1, n + 1):
            binom *= a + i
        binom /= math.factorial(n - j)
        coeffs.append((-1) ** j * binom / math.factorial(j))
    return Poly.from_coeffs(coeffs)


def normalized_coefficient_products(params: GlpParams) -> list[int]:
    """c_j = prod_{k=j+1}^n (k*mu + lam) for j = 0..n (c_n = 1)."""
    n, lam, mu = params.n, params.lam, params.mu
    c = [1] * (n + 1)
    for j in range(n - 1, -1, -1):
        c[j] = c[j + 1] * ((j + 1) * mu + lam)
    return c


def glp_normalized(params: GlpParams) -> Poly:
    """The monic integral form mu^n n! L_n^(lam/mu)(-x/mu)."""
    n = params.n
    c = normalized_coefficient_products(params)
    return Poly.from_coeffs([math.comb(n, j) * c[j] for j in range(n + 1)])


def schur_discriminant(n: int, alpha: Union[int, Fraction]) -> Fraction:
    """Delta = prod_{j=2}^n j^j (alpha+j)^(j-1); defined as 1 for n = 1."""
    a = Fraction(alpha)
    out = Fraction(1)
    for j in range(2, n + 1):
        out *= Fraction(j) ** j * (a + j) ** (j - 1)
    return out


def normalized_discriminant(params: GlpParams) -> Fraction:
    """Discriminant of glp_normalized: the x -> -x/mu rescaling multiplies the
    Schur product by mu^(n(n-1))."""
    n = params.n
    return Fraction(params.mu) ** (n * (n - 1)) * schur_discriminant(n, params.alpha)


def is_rational_square(q: Union[int, Fraction]) -> bool:
    q = Fraction(q)
    if q < 0:
        return False
    return (
        math.isqrt(q.numerator) ** 2 == q.numerator
        and math.isqrt(q.denominator) ** 2 == q.denominator
    )


def find_criterion_prime(params: GlpParams) -> Optional[tuple[int, int]]:
    """Largest prime p = mu*ell + lam in the search window that passes the
    coefficient-valuation shortcut; returns (p, ell) or None."""
    n, lam, mu = params.n, params.lam, params.mu
    if n < 5:
        return None
    c = normalized_coefficient_products(params)
    if mu == 1:
        # integer alpha >= 0: window ((n+alpha)/2, n-2)
        lo = (n + lam) // 2 + 1
        candidates = [p for p in range(lo, n - 2) if is_prime(p)]
    else:
        lo = -((-(n * mu + mu + lam)) // (mu + 1))  # ceil
        hi = n - 3
        if lo > hi:
            return None
        candidates = primes_in_ap_interval(lam, mu, lo, hi)
    for p in reversed(candidates):
        if p <= 2 or p >= n:
            continue
        if lemma_key_check(n, c, p):
            return p, (p - lam) // mu
    return None


def _irreducibility_evidence(f: Poly, params: GlpParams, assume: bool) -> Optional[str]:
    if single_slope_irreducibility_evidence(f):
        return SINGLE_SLOPE
    disc = normalized_discriminant(params)
    sample = list(islice(good_primes(f, disc=disc), _EVIDENCE_PRIME_BUDGET))
    surviving = degree_set_filter(f, sample, disc=disc, stop_when_irreducible=True)
    if surviving == {0, f.degree}:
        return DEGREE_SET_FILTER
    return ASSUMED if assume else None


def classify(params: GlpParams, assume_irreducible: bool = True) -> Classification:
    """Decide A_n vs S_n for L_n^(alpha) from a criterion-prime certificate and
    the squareness of the discriminant; honest `inconclusive` otherwise."""
    n = params.n
    f = glp_normalized(params)
    delta = schur_discriminant(n, params.alpha)
    square = is_rational_square(delta)
    basis = _irreducibility_evidence(f, params, assume_irreducible)

    crit = find_criterion_prime(params)
    if crit is not None and basis is not None:
        p, ell = crit
        np_p = newton_polygon(f, p)
        slope = Fraction(-1, p)
        assert slope in np_p.slopes, "criterion prime not confirmed by the polygon"
        cert = GaloisCertificate(
            verdict=CONTAINS_AN,
            n=n,
            shift_used=Fraction(0),
            newton_index=newton_index(f).index,
            irreducibility_basis=basis,
            witness_prime_q=p,
            valuation_prime_p=p,
            slope=slope,
        )
    else:
        cert = certify_large_galois(f, shifts=(0,), irreducibility=basis)

    if cert.verdict == CONTAINS_AN:
        group = GROUP_AN if square else GROUP_SN
    else:
        group = GROUP_INCONCLUSIVE
    return Classification(
        group=group,
        discriminant=delta,
        discriminant_is_square=square,
        certificate=cert,
        criterion_prime=crit[0] if crit else None,
        ell=crit[1] if crit else None,
        params=params,
    )


def classification_to_dict(c: Classification) -> dict:
    return {
        "n": c.params.n,
        "alpha": str(c.params.alpha),
        "group": c.group,
        "disc_is_square": c.discriminant_is_square,
        "criterion_prime": c.criterion_prime,
        "ell": c.ell,
        "certificate": certificate_to_dict(c.certificate),
        "irreducibility_basis": c.certificate.irreducibility_basis,
    }
