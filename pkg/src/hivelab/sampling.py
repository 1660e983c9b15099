"""Monte-Carlo realization of the Horn problem: spectra of U a U* + V b V*
for Haar-random U, V, compared against the exact density on the trace
hyperplane.  The only floating-point module in the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from .core import vandermonde
from .errors import DegenerateOrbit, RankMismatch

_CHUNK = 1 << 14


def haar_unitaries(n: int, count: int, rng) -> np.ndarray:
    """Stack of Haar-distributed U(n) matrices via QR of complex Ginibre
    matrices with the phase correction that makes R's diagonal positive."""
    z = rng.standard_normal((count, n, n)) + 1j * rng.standard_normal((count, n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[:, None, :]


def sample_spectra(alpha, beta, count: int, seed: int) -> np.ndarray:
    """Sorted (descending) eigenvalues of A + B, each summand conjugated by an
    independent Haar unitary; shape (count, n).  Deterministic in the seed."""
    alpha = np.asarray([float(x) for x in alpha])
    beta = np.asarray([float(x) for x in beta])
    n = alpha.shape[0]
    if beta.shape[0] != n:
        raise RankMismatch("alpha and beta must have equal length")
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = np.random.default_rng(seed)
    out = np.empty((count, n))
    done = 0
    while done < count:
        c = min(_CHUNK, count - done)
        u = haar_unitaries(n, c, rng)
        v = haar_unitaries(n, c, rng)
        m = (u * alpha[None, None, :]) @ np.conj(np.swapaxes(u, -2, -1))
        m += (v * beta[None, None, :]) @ np.conj(np.swapaxes(v, -2, -1))
        out[done : done + c] = np.linalg.eigvalsh(m)[:, ::-1]
        done += c
    return out


@dataclass(frozen=True)
class DensityComparison:
    edges: tuple  # per-axis bin edges (floats)
    empirical: np.ndarray
    analytic: np.ndarray
    outside_mass: float
    l1_distance: float


def _support_box(alpha, beta):
    """Exact bounding intervals of the free coordinates of the Horn polytope."""
    n = len(alpha)
    total = sum(alpha) + sum(beta)
    if n == 2:
        a12 = alpha[0] - alpha[1]
        b12 = beta[0] - beta[1]
        lo = Fraction(total + abs(a12 - b12), 2)
        hi = Fraction(total + a12 + b12, 2)
        return [(lo, hi)]
    # n == 3: Weyl inequalities bound each coordinate
    g1_lo, g1_hi = Fraction(total, 3), Fraction(alpha[0] + beta[0])
    g2_lo = Fraction(max(alpha[1] + beta[2], alpha[2] + beta[1]))
    g2_hi = Fraction(min(alpha[0] + beta[1], alpha[1] + beta[0]))
    return [(g1_lo, g1_hi), (g2_lo, g2_hi)]


def _density_factor(alpha, beta):
    """Float evaluator of the ordered-spectrum density in the free coordinates
    (n! times the hyperplane density).  Floats are fine here: the values feed
    a quadrature whose output is renormalized, and the support boundary is a
    measure-zero set.  Cross-checked against the exact pdf_density in tests."""
    n = len(alpha)
    a = [float(x) for x in alpha]
    b = [float(x) for x in beta]
    total = sum(a) + sum(b)
    va = 1.0
    vb = 1.0
    for i in range(n):
        for j in range(i + 1, n):
            va *= a[i] - a[j]
            vb *= b[i] - b[j]
    # Sf(n-1)/n! * n! = Sf(n-1): 1 for n=2, 2 for n=3
    sf = 1.0 if n == 2 else 2.0

    if n == 2:

        def density(point):
            g1 = point[0]
            g2 = total - g1
            if g1 < g2:
                return 0.0
            a12, b12 = a[0] - a[1], b[0] - b[1]
            g12 = g1 - g2
            if not (abs(a12 - b12) < g12 < a12 + b12):
                return 0.0
            return sf * g12 / (va * vb)

    else:

        def density(point):
            g1, g2 = point
            g3 = total - g1 - g2
            if not (g1 >= g2 >= g3):
                return 0.0
            j = _j3_float(a, b, (g1, g2, g3))
            if j <= 0.0:
                return 0.0
            vg = (g1 - g2) * (g1 - g3) * (g2 - g3)
            return sf * vg * j / (va * vb)

    return density


def _j3_float(a, b, g):
    """Float version of the compact rank-3 kernel (quadrature use only)."""

    def psi(x, y):
        q1 = g[0] - x[0] - y[1]
        q2 = g[1] - x[2] - y[0]
        q3 = g[2] - x[1] - y[2]
        if q2 >= 0.0 and q1 <= 0.0:
            return q2 - q1
        if q3 >= 0.0 and q2 <= 0.0:
            return q3 - q2
        return q1 - q3

    lin = a[0] - a[2] + b[0] - b[2] + g[0] - g[2]
    return lin / 6.0 - abs(a[1] + b[1] - g[1]) / 2.0 - psi(a, b) / 3.0 - psi(b, a) / 3.0


_MAX_DEPTH = 7


def _adaptive_cell(f, lo, hi, rel_tol, depth=0, coarse=None):
    """Midpoint quadrature over a box (1-D or 2-D) with dyadic refinement."""
    mids = [(a + b) / 2 for a, b in zip(lo, hi)]
    if coarse is None:
        vol = 1.0
        for a, b in zip(lo, hi):
            vol *= b - a
        coarse = f(tuple(mids)) * vol
    if depth >= _MAX_DEPTH:
        return coarse
    fine = 0.0
    subs = []
    if len(lo) == 1:
        for a, b in [(lo[0], mids[0]), (mids[0], hi[0])]:
            val = f(((a + b) / 2,)) * (b - a)
            subs.append(((a,), (b,), val))
            fine += val
    else:
        for a1, b1 in [(lo[0], mids[0]), (mids[0], hi[0])]:
            for a2, b2 in [(lo[1], mids[1]), (mids[1], hi[1])]:
                val = f(((a1 + b1) / 2, (a2 + b2) / 2)) * (b1 - a1) * (b2 - a2)
                subs.append(((a1, a2), (b1, b2), val))
                fine += val
    if abs(fine - coarse) <= rel_tol * abs(fine) + 1e-7:
        return fine
    return sum(_adaptive_cell(f, a, b, rel_tol, depth + 1, v) for a, b, v in subs)


def compare_density(samples: np.ndarray, alpha, beta, bins) -> DensityComparison:
    """Histogram the sampled spectra on the Horn-polytope bounding box and
    compare against bin integrals of the exact density (n = 2 or 3).

    Analytic masses come from adaptive midpoint quadrature (relative 1e-4)
    and are renormalized to unit total, which the exact normalization
    identity guarantees; the L1 distance includes any empirical mass that
    falls outside the box.
    """
    alpha = tuple(Fraction(x) for x in alpha)
    beta = tuple(Fraction(x) for x in beta)
    n = len(alpha)
    if n not in (2, 3):
        raise RankMismatch("compare_density supports n in {2, 3}")
    if vandermonde(alpha) == 0 or vandermonde(beta) == 0:
        raise DegenerateOrbit("alpha or beta has a repeated eigenvalue")
    box = _support_box(alpha, beta)
    nb = (bins,) * (n - 1) if isinstance(bins, int) else tuple(bins)
    edges = [
        [lo + Fraction(k, b) * (hi - lo) for k in range(b + 1)]
        for (lo, hi), b in zip(box, nb)
    ]
    free = samples[:, : n - 1]
    float_edges = tuple(np.asarray([float(e) for e in ax]) for ax in edges)
    if n == 2:
        hist, _ = np.histogram(free[:, 0], bins=float_edges[0])
        hist = hist.astype(float)
    else:
        hist, _, _ = np.histogram2d(free[:, 0], free[:, 1], bins=float_edges)
    total = samples.shape[0]
    empirical = hist / total
    outside = 1.0 - empirical.sum()

    density = _density_factor(alpha, beta)
    analytic = np.zeros_like(empirical)
    fe = float_edges
    if n == 2:
        for i in range(nb[0]):
            analytic[i] = _adaptive_cell(density, (fe[0][i],), (fe[0][i + 1],), 1e-4)
    else:
        for i in range(nb[0]):
            for j in range(nb[1]):
                analytic[i, j] = _adaptive_cell(
                    density,
                    (fe[0][i], fe[1][j]),
                    (fe[0][i + 1], fe[1][j + 1]),
                    1e-4,
                )
    analytic /= analytic.sum()
    l1 = float(np.abs(empirical - analytic).sum() + abs(outside))
    return DensityComparison(
        edges=tuple(tuple(float(e) for e in ax) for ax in edges),
        empirical=empirical,
        analytic=analytic,
        outside_mass=float(outside),
        l1_distance=l1,
    )


def spectra_to_csv(samples: np.ndarray, path) -> None:
    np.savetxt(path, samples, delimiter=",", fmt="%.12g")
