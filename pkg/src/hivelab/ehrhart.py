"""Stretching (LR/Ehrhart) polynomials by exact interpolation of stretched
hive counts, and the geometry they encode: normalized volume, boundary
volume, interior points via reciprocity, and the volume route to the kernel.

Interpolation uses the d+1 nodes s = 0..d (with the empty-product convention
P(0) = 1) where d = (n-1)(n-2)/2, then validates the interpolant against two
extra direct counts at s = d+1 and d+2, so a convention bug cannot silently
pass as a polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .core import Triple
from .errors import RankMismatch, ValidationFailure
from .hives import count_hives
from .kernels import KernelInput, j4


@dataclass(frozen=True)
class RationalPoly:
    """Univariate polynomial with exact rational coefficients, constant first."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def __call__(self, s) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * s + c
        return acc

    @property
    def degree(self) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k] != 0:
                return k
        return 0

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def trimmed(self) -> "RationalPoly":
        return RationalPoly(self.coeffs[: self.degree + 1])

    def __eq__(self, other):
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.trimmed().coeffs == other.trimmed().coeffs

    def __hash__(self):
        return hash(self.trimmed().coeffs)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items) -> "RationalPoly":
        return cls(tuple(Fraction(x) for x in items))


def lagrange_interpolate(points) -> RationalPoly:
    """Unique polynomial of degree < len(points) through the given (x, y)."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    m = len(pts)
    coeffs = [Fraction(0)] * m
    for i, (xi, yi) in enumerate(pts):
        # basis polynomial prod_{j != i} (X - x_j) / (x_i - x_j)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            denom *= xi - xj
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] -= c * xj
                new[k + 1] += c
            basis = new
        w = yi / denom
        for k, c in enumerate(basis):
            coeffs[k] += w * c
    return RationalPoly(tuple(coeffs))


def hive_dimension(n: int) -> int:
    return (n - 1) * (n - 2) // 2


def stretched_counts(t: Triple, s_max: int, *, node_limit=None, threads: int = 1) -> list[int]:
    """[N at s=1, ..., N at s=s_max] for the stretched triples (s*lambda, ...)."""
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    scales = list(range(1, s_max + 1))
    if threads > 1:
        import multiprocessing

        with multiprocessing.Pool(threads) as pool:
            return pool.starmap(_count_scaled, [(t, s, node_limit) for s in scales])
    return [_count_scaled(t, s, node_limit) for s in scales]


def _count_scaled(t: Triple, s: int, node_limit) -> int:
    return count_hives(t.scaled(s), node_limit=node_limit)


def stretching_polynomial(t: Triple, *, node_limit=None, threads: int = 1) -> RationalPoly:
    """The degree <= d polynomial through (0,1), (1,N_1), ..., (d,N_d),
    post-validated against direct counts at s = d+1 and d+2."""
    d = hive_dimension(t.n)
    counts = stretched_counts(t, d + 2, node_limit=node_limit, threads=threads)
    poly = lagrange_interpolate([(0, 1)] + [(s, counts[s - 1]) for s in range(1, d + 1)])
    for s in (d + 1, d + 2):
        expected = counts[s - 1]
        got = poly(s)
        if got != expected:
            raise ValidationFailure(
                f"interpolant gives {got} at s={s}, direct count is {expected}"
            )
    return poly


@dataclass(frozen=True)
class GeometryReport:
    degree: int
    normalized_volume: Fraction
    normalized_boundary: Fraction
    interior_points: int
    lattice_points: int
    blichfeldt_ok: bool
    polynomial: RationalPoly


def geometry_report(t: Triple, *, node_limit=None, threads: int = 1) -> GeometryReport:
    """Volume/area/interior-point data read off the stretching polynomial.

    degree d is the actual polytope dimension (degree of P); normalized
    volume is d! * lead(P); normalized boundary volume 2*(d-1)! * coeff_{d-1};
    interior points by Ehrhart-Macdonald reciprocity (-1)^d P(-1).
    """
    poly = stretching_polynomial(t, node_limit=node_limit, threads=threads).trimmed()
    d = poly.degree
    volume = factorial(d) * poly.coefficient(d)
    boundary = 2 * factorial(d - 1) * poly.coefficient(d - 1) if d >= 1 else Fraction(0)
    interior = (-1) ** d * poly(-1)
    assert interior.denominator == 1 and interior >= 0
    npoints = poly(1)
    assert npoints.denominator == 1
    return GeometryReport(
        degree=d,
        normalized_volume=volume,
        normalized_boundary=boundary,
        interior_points=int(interior),
        lattice_points=int(npoints),
        blichfeldt_ok=volume >= npoints - d,
        polynomial=poly,
    )


def jn_via_volume(t: Triple, *, node_limit=None, threads: int = 1) -> Fraction:
    """Leading (degree-d) coefficient of the stretching polynomial, i.e. the
    kernel J_n(ell(lambda), ell(mu); ell(nu)); 0 for non-generic triples."""
    poly = stretching_polynomial(t, node_limit=node_limit, threads=threads)
    return poly.coefficient(hive_dimension(t.n))


def shifted_kernel_poly(t: Triple) -> RationalPoly:
    """J_4 at rho-shifted stretched arguments as a cubic in the stretch factor.

    Interpolated from exact kernel values at s = 1..4 and validated at s = 5;
    s = 0 is excluded because the unstretched point (rho, rho; rho) lies in a
    different cone of polynomiality.  Shares its two top coefficients with
    the stretching polynomial on generic triples.
    """
    if t.n != 4:
        raise RankMismatch("shifted_kernel_poly is a rank-4 operation")
    values = [
        (s, j4(KernelInput.from_triple(t.scaled(s), shifted=True))) for s in range(1, 5)
    ]
    poly = lagrange_interpolate(values)
    check = j4(KernelInput.from_triple(t.scaled(5), shifted=True))
    if poly(5) != check:
        raise ValidationFailure(f"kernel values are not cubic in s: {poly(5)} != {check}")
    return poly
