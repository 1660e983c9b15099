"""Closed-form evaluation of the Horn-problem kernel J_n for n = 2, 3, 4,
the rank-3 min/max multiplicity formula, and the spectral density on the
trace hyperplane.

Everything is exact rational arithmetic.  The raw piecewise formulas are only
guaranteed on the Horn polytope, so out-of-support inputs are screened: for
integral inputs by hive-count support (saturation makes a positive count
equivalent to polytope membership), for rational inputs by the sign of the
formula itself, which is empirically non-positive outside.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm

import numpy as np

from .core import (
    Triple,
    balance_sigma,
    ell,
    is_weakly_decreasing,
    rho,
    rho_shift,
    superfactorial,
    vandermonde,
)
from .errors import DegenerateOrbit, Incompatible, RankMismatch, TraceMismatch
from .hives import count_hives_partitions, iter_bounded_partitions


@dataclass(frozen=True)
class KernelInput:
    """Ordered, trace-balanced partition triple fed to a kernel J_n.

    Parts may be rational (rho-shifted inputs of even rank are half-integral).
    The `shifted` flag only records provenance; evaluation ignores it.
    """

    n: int
    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]
    gamma: tuple[Fraction, ...]
    shifted: bool = False

    def __post_init__(self):
        conv = lambda p: tuple(Fraction(x) for x in p)
        object.__setattr__(self, "alpha", conv(self.alpha))
        object.__setattr__(self, "beta", conv(self.beta))
        object.__setattr__(self, "gamma", conv(self.gamma))
        for p in (self.alpha, self.beta, self.gamma):
            if len(p) != self.n:
                raise RankMismatch(f"expected {self.n} parts, got {p}")
            if not is_weakly_decreasing(p):
                raise ValueError(f"parts must be ordered decreasingly: {p}")
        if sum(self.gamma) != sum(self.alpha) + sum(self.beta):
            raise TraceMismatch("sum(gamma) != sum(alpha) + sum(beta)")

    @classmethod
    def from_triple(cls, t: Triple, shifted: bool = False) -> "KernelInput":
        """Kernel arguments of a weight triple in the trace-balanced gauge.

        Unshifted: alpha = ell(lambda) etc., gamma = ell(nu) + sigma.
        Shifted: the same for (lambda+rho, mu+rho; nu+rho); the balancing
        number becomes sigma + (n-1)/2, half-integral for even n.
        Requires a compatible triple (integral sigma).
        """
        sigma = balance_sigma(t)
        if sigma.denominator != 1:
            raise Incompatible(f"sigma = {sigma} is not an integer for {t}")
        if shifted:
            lam, mu, nu = (rho_shift(w, +1) for w in (t.lam, t.mu, t.nu))
            shift = sigma + Fraction(t.n - 1, 2)
        else:
            lam, mu, nu = t.lam, t.mu, t.nu
            shift = sigma
        gamma = tuple(Fraction(x) + shift for x in ell(nu))
        return cls(t.n, ell(lam), ell(mu), gamma, shifted=shifted)


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _all_integral(k: KernelInput) -> bool:
    return all(x.denominator == 1 for p in (k.alpha, k.beta, k.gamma) for x in p)


@lru_cache(maxsize=1 << 16)
def _integral_support(alpha, beta, gamma) -> bool:
    """Horn-polytope membership of an integral triple via hive counting
    (saturation: an integral point lies in the polytope iff its LR
    coefficient is positive)."""
    return count_hives_partitions(alpha, beta, gamma) > 0


def _screen(k: KernelInput, raw: Fraction) -> Fraction:
    if _all_integral(k):
        ints = lambda p: tuple(int(x) for x in p)
        if not _integral_support(ints(k.alpha), ints(k.beta), ints(k.gamma)):
            return Fraction(0)
        return raw
    return raw if raw > 0 else Fraction(0)


def _has_repeat(parts) -> bool:
    return any(parts[i] == parts[i + 1] for i in range(len(parts) - 1))


# ---------------------------------------------------------------------------
# rank 2


def j2(k: KernelInput, endpoint_mode: str = "open") -> Fraction:
    """Indicator of gamma_1 - gamma_2 in (|a12 - b12|, a12 + b12).

    endpoint_mode 'open' gives 0 on the endpoints (the rho-shifted reading);
    'half' gives 1/2 there (the unshifted reading).
    """
    if k.n != 2:
        raise RankMismatch("j2 needs n = 2")
    if endpoint_mode not in ("open", "half"):
        raise ValueError("endpoint_mode must be 'open' or 'half'")
    a12 = k.alpha[0] - k.alpha[1]
    b12 = k.beta[0] - k.beta[1]
    g12 = k.gamma[0] - k.gamma[1]
    lo, hi = abs(a12 - b12), a12 + b12
    if lo < g12 < hi:
        return Fraction(1)
    if g12 == lo or g12 == hi:
        return Fraction(1, 2) if endpoint_mode == "half" else Fraction(0)
    return Fraction(0)


# ---------------------------------------------------------------------------
# rank 3


def _psi(alpha, beta, gamma) -> Fraction:
    """Piecewise selector entering the compact rank-3 kernel.

    The three guard pairs can be tight simultaneously; all satisfied branches
    agree there (their values differ by combinations of q1+q2+q3 = 0), which
    is asserted rather than assumed.
    """
    q1 = gamma[0] - alpha[0] - beta[1]
    q2 = gamma[1] - alpha[2] - beta[0]
    q3 = gamma[2] - alpha[1] - beta[2]
    vals = []
    if q2 >= 0 and q1 <= 0:
        vals.append(q2 - q1)
    if q3 >= 0 and q2 <= 0:
        vals.append(q3 - q2)
    if q1 >= 0 and q3 <= 0:
        vals.append(q1 - q3)
    assert vals and all(v == vals[0] for v in vals), (alpha, beta, gamma)
    return vals[0]


def _j3_raw(alpha, beta, gamma) -> Fraction:
    lin = Fraction(alpha[0] - alpha[2] + beta[0] - beta[2] + gamma[0] - gamma[2], 1)
    return (
        lin / 6
        - Fraction(abs(alpha[1] + beta[1] - gamma[1]), 1) / 2
        - _psi(alpha, beta, gamma) / 3
        - _psi(beta, alpha, gamma) / 3
    )


def j3(k: KernelInput) -> Fraction:
    """Rank-3 kernel: piecewise-linear density factor, 0 outside the polytope."""
    if k.n != 3:
        raise RankMismatch("j3 needs n = 3")
    if _has_repeat(k.alpha) or _has_repeat(k.beta) or _has_repeat(k.gamma):
        return Fraction(0)  # antisymmetry
    return _screen(k, _j3_raw(k.alpha, k.beta, k.gamma))


def lr_su3_minmax(t: Triple) -> int:
    """SU(3) multiplicity as 1 + min(...) - max(...), clamped at 0."""
    if t.n != 3:
        raise RankMismatch("lr_su3_minmax needs n = 3")
    sigma = balance_sigma(t)
    if sigma.denominator != 1:
        raise Incompatible(f"sigma = {sigma} is not an integer for {t}")
    s = int(sigma)
    l1, l2 = t.lam.labels
    m1, m2 = t.mu.labels
    n1, n2 = t.nu.labels
    lo = 1 + min(l1 + l2, n2 + s, n2 - m2 + 2 * s)
    hi = max(l2, s, n2 - m2 + s, n2 - l2 - m2 + 2 * s, n2 - m1 - m2 + 2 * s, l1 + l2 - n1)
    return max(0, lo - hi)


# ---------------------------------------------------------------------------
# rank 4


_S4 = list(itertools.permutations(range(4)))


def _perm_sign(p) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


_S4_SIGNS = [_perm_sign(p) for p in _S4]


def _partials(parts):
    """Partial sums over the first 1, 2, 3 entries for all 24 permutations."""
    out = []
    for p in _S4:
        s1 = parts[p[0]]
        s2 = s1 + parts[p[1]]
        out.append((s1, s2, s2 + parts[p[2]]))
    return out


def _j4_terms_exact(alpha, beta, gamma):
    """S_4 x S_4 double sum (third permutation fixed, overall factor 4!);
    returns 48 * J_4 as an exact number."""
    pa = _partials(alpha)
    pb = _partials(beta)
    g1, g2, g3 = gamma[0], gamma[0] + gamma[1], gamma[0] + gamma[1] + gamma[2]
    total = 0
    for ia in range(24):
        sa = _S4_SIGNS[ia]
        a1, a2, a3 = pa[ia]
        for ib in range(24):
            b1, b2, b3 = pb[ib]
            A1 = a1 + b1 - g1
            e1 = _sgn(A1)
            if e1 == 0:
                continue
            A2 = a2 + b2 - g2
            A3 = a3 + b3 - g3
            X = _sgn(A2 - A1) * (
                abs(A3 - A1) ** 3
                - abs(A3 - A2 + A1) ** 3
                - abs(A3 - A2) ** 3
                + abs(A3) ** 3
            )
            Y = _sgn(A2) * (abs(A3) ** 3 - abs(A3 - A2) ** 3)
            Z = (abs(A2 - A1) - abs(A2)) * (abs(A3 - A2) * (A3 - A2) + abs(A3) * A3)
            total += sa * _S4_SIGNS[ib] * e1 * (X - 2 * Y - 3 * Z)
    return total


_NP_SAFE_BOUND = 20000  # keeps the int64 double sum far from overflow


def _j4_terms_numpy(alpha, beta, gamma):
    """Vectorized version of _j4_terms_exact for integer inputs."""
    pa = np.array(_partials(alpha), dtype=np.int64)
    pb = np.array(_partials(beta), dtype=np.int64)
    pg = np.cumsum(np.asarray(gamma[:3], dtype=np.int64))
    A = pa[:, None, :] + pb[None, :, :] - pg[None, None, :]
    A1, A2, A3 = A[..., 0], A[..., 1], A[..., 2]
    X = np.sign(A2 - A1) * (
        np.abs(A3 - A1) ** 3
        - np.abs(A3 - A2 + A1) ** 3
        - np.abs(A3 - A2) ** 3
        + np.abs(A3) ** 3
    )
    Y = np.sign(A2) * (np.abs(A3) ** 3 - np.abs(A3 - A2) ** 3)
    Z = (np.abs(A2 - A1) - np.abs(A2)) * (np.abs(A3 - A2) * (A3 - A2) + np.abs(A3) * A3)
    signs = np.array(_S4_SIGNS, dtype=np.int64)
    outer = signs[:, None] * signs[None, :]
    return int(np.sum(outer * np.sign(A1) * (X - 2 * Y - 3 * Z)))


def _j4_raw(alpha, beta, gamma) -> Fraction:
    # clear denominators; the double sum is homogeneous of degree 3 exactly
    scale = lcm(*[x.denominator for p in (alpha, beta, gamma) for x in p])
    a = tuple(int(x * scale) for x in alpha)
    b = tuple(int(x * scale) for x in beta)
    g = tuple(int(x * scale) for x in gamma)
    if max(abs(x) for p in (a, b, g) for x in p) * 3 <= _NP_SAFE_BOUND:
        total = _j4_terms_numpy(a, b, g)
    else:
        total = _j4_terms_exact(a, b, g)
    return Fraction(total, 48 * scale**3)


def j4(k: KernelInput) -> Fraction:
    """Rank-4 kernel: piecewise-cubic density factor, 0 outside the polytope."""
    if k.n != 4:
        raise RankMismatch("j4 needs n = 4")
    if _has_repeat(k.alpha) or _has_repeat(k.beta) or _has_repeat(k.gamma):
        return Fraction(0)
    return _screen(k, _j4_raw(k.alpha, k.beta, k.gamma))


def jn_closed(k: KernelInput, endpoint_mode: str = "open") -> Fraction:
    """Dispatch to the closed form of the matching rank (2, 3 or 4)."""
    if k.n == 2:
        return j2(k, endpoint_mode)
    if k.n == 3:
        return j3(k)
    if k.n == 4:
        return j4(k)
    raise RankMismatch(f"no closed form for n = {k.n}")


# ---------------------------------------------------------------------------
# density on the trace hyperplane and its lattice localization


def pdf_density(gamma_free, alpha, beta) -> Fraction:
    """Sf(n-1)/n! * Delta(gamma)/(Delta(alpha) Delta(beta)) * J_n.

    gamma_free holds gamma_1..gamma_{n-1}; the last entry is reconstructed on
    the hyperplane sum(gamma) = sum(alpha) + sum(beta).  Returns 0 when the
    reconstructed gamma is not ordered (the ordered-spectrum density vanishes
    off the sector).  Supported for n in {2, 3, 4}.
    """
    alpha = tuple(Fraction(x) for x in alpha)
    beta = tuple(Fraction(x) for x in beta)
    n = len(alpha)
    if n not in (2, 3, 4):
        raise RankMismatch("pdf_density supports n in {2, 3, 4}")
    if len(beta) != n or len(gamma_free) != n - 1:
        raise RankMismatch("argument lengths do not match the rank")
    va, vb = vandermonde(alpha), vandermonde(beta)
    if va == 0 or vb == 0:
        raise DegenerateOrbit("alpha or beta has a repeated eigenvalue")
    gamma_free = tuple(Fraction(x) for x in gamma_free)
    last = sum(alpha) + sum(beta) - sum(gamma_free)
    gamma = gamma_free + (last,)
    if not is_weakly_decreasing(gamma):
        return Fraction(0)
    k = KernelInput(n, alpha, beta, gamma)
    jn = jn_closed(k)
    if jn == 0:
        return Fraction(0)
    return Fraction(superfactorial(n - 1), factorial(n)) * vandermonde(gamma) / (va * vb) * jn


def localization_sum(alpha, beta) -> Fraction:
    """sum over integral ordered trace-balanced gamma of
    J_n * Delta(gamma)/(Delta(alpha) Delta(beta)); equals 1/Sf(n-1) for
    generic integral alpha, beta (the normalization integral localizes)."""
    alpha = tuple(int(x) for x in alpha)
    beta = tuple(int(x) for x in beta)
    n = len(alpha)
    if n not in (2, 3, 4):
        raise RankMismatch("localization_sum supports n in {2, 3, 4}")
    va, vb = vandermonde(alpha), vandermonde(beta)
    if va == 0 or vb == 0:
        raise DegenerateOrbit("alpha or beta has a repeated eigenvalue")
    total = sum(alpha) + sum(beta)
    acc = Fraction(0)
    for gamma in iter_bounded_partitions(total, n, alpha[0] + beta[0]):
        vg = vandermonde(gamma)
        if vg == 0:
            continue
        k = KernelInput(n, alpha, beta, gamma)
        jn = jn_closed(k, endpoint_mode="half")
        if jn:
            acc += jn * vg / (va * vb)
    return acc
