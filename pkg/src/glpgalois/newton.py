"""p-adic Newton polygons (lower convex hulls) and the Newton index.

The polygon of f = sum a_j x^j at a prime p is the lower convex hull of the
points (j, ord_p(a_j)); zero coefficients are simply omitted since a point at
height +infinity can never lie on a lower hull.  The Newton index is the lcm
of the slope denominators over the finite set of primes dividing a_0 * a_n of
the primitive part of f.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .polys import Poly, primitive_scale
from .primes import candidate_primes, is_prime, ord_p

Point = tuple[int, int]


@dataclass(frozen=True)
class Segment:
    slope: Fraction
    length: int
    start: Point
    end: Point


@dataclass(frozen=True)
class NewtonPolygon:
    prime: int
    points: tuple[Point, ...]
    vertices: tuple[Point, ...]
    segments: tuple[Segment, ...]

    def __post_init__(self):
        # Convexity and endpoint invariants hold on every construction.
        slopes = [s.slope for s in self.segments]
        assert all(a < b for a, b in zip(slopes, slopes[1:])), "slopes not increasing"
        assert self.vertices[0] == self.points[0]
        assert self.vertices[-1] == self.points[-1]
        assert sum(s.length for s in self.segments) == self.points[-1][0] - self.points[0][0]

    @property
    def slopes(self) -> list[Fraction]:
        return [s.slope for s in self.segments]


@dataclass(frozen=True)
class NewtonIndexReport:
    index: int
    witnesses: dict[int, list[Fraction]]  # prime -> slopes with denominator > 1


def strip_x_powers(f: Poly) -> tuple[int, Poly]:
    """Write f = x^k * h with h(0) != 0; returns (k, h)."""
    if f.is_zero():
        raise DomainError("zero polynomial")
    k = 0
    while f.coeffs[k] == 0:
        k += 1
    return k, Poly(f.coeffs[k:])


def _lower_hull(points: list[Point]) -> list[Point]:
    hull: list[Point] = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # keep the middle point only on a strict left turn
            if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) > 0:
                break
            hull.pop()
        hull.append(pt)
    return hull


def newton_polygon(f: Poly, p: int) -> NewtonPolygon:
    if f.is_zero() or f[0] == 0:
        raise DomainError("Newton polygon requires a_0 != 0; strip x-powers first")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    points = [(j, int(ord_p(c, p))) for j, c in enumerate(f.coeffs) if c != 0]
    vertices = _lower_hull(points)
    segments = tuple(
        Segment(
            slope=Fraction(b[1] - a[1], b[0] - a[0]),
            length=b[0] - a[0],
            start=a,
            end=b,
        )
        for a, b in zip(vertices, vertices[1:])
    )
    return NewtonPolygon(prime=p, points=tuple(points), vertices=tuple(vertices), segments=segments)


def newton_index(f: Poly) -> NewtonIndexReport:
    """lcm of the slope denominators over all contributing primes.

    Scaling f by a nonzero rational only translates each polygon vertically,
    so the index is computed on the primitive part after stripping x-powers.
    """
    if f.is_zero():
        raise DomainError("zero polynomial")
    _, h = strip_x_powers(f)
    g, _ = primitive_scale(h)
    index = 1
    witnesses: dict[int, list[Fraction]] = {}
    if g.degree >= 1:
        for p in sorted(candidate_primes(g)):
            ramified = [s for s in newton_polygon(g, p).slopes if s.denominator > 1]
            if ramified:
                witnesses[p] = ramified
                index = math.lcm(index, *(s.denominator for s in ramified))
    return NewtonIndexReport(index=index, witnesses=witnesses)


def single_slope_irreducibility_evidence(f: Poly) -> bool:
    """True iff some prime gives a one-segment polygon whose slope denominator
    equals deg f; a sufficient (Eisenstein-like) condition for irreducibility."""
    if f.is_zero() or f[0] == 0:
        raise DomainError("requires a_0 != 0")
    g, _ = primitive_scale(f)
    if g.degree < 1:
        return False
    for p in sorted(candidate_primes(g)):
        np = newton_polygon(g, p)
        if len(np.segments) == 1 and np.segments[0].slope.denominator == g.degree:
            return True
    return False


def polygon_to_dict(np: NewtonPolygon) -> dict:
    return {
        "prime": np.prime,
        "points": [list(pt) for pt in np.points],
        "vertices": [list(pt) for pt in np.vertices],
        "segments": [
            {
                "slope": str(s.slope),
                "length": s.length,
                "from": list(s.start),
                "to": list(s.end),
            }
            for s in np.segments
        ],
    }
