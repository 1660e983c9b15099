"""Exact core types for SU(n) highest weights and the elementary maps between
Dynkin labels and eigenvalue/Young-length partitions.

All arithmetic here is exact: integers or fractions.Fraction, never floats.
Partitions are plain tuples (length n, weakly decreasing, trailing entry 0 in
the SU(n) picture); weights carry their Dynkin labels.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import Incompatible, NegativeShift, NonDominant

Rational = Fraction


@dataclass(frozen=True)
class Weight:
    """SU(n) dominant highest weight given by its n-1 Dynkin labels."""

    n: int
    labels: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank n must be >= 2, got {self.n}")
        labels = tuple(int(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} Dynkin labels, got {len(labels)}")
        if any(x < 0 for x in labels):
            raise ValueError(f"Dynkin labels must be non-negative: {labels}")

    def scaled(self, s: int) -> "Weight":
        return Weight(self.n, tuple(s * x for x in self.labels))

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.labels) + ")"


def zero_weight(n: int) -> Weight:
    return Weight(n, (0,) * (n - 1))


def rho(n: int) -> Weight:
    """The Weyl vector: all Dynkin labels equal to 1."""
    return Weight(n, (1,) * (n - 1))


@dataclass(frozen=True)
class Triple:
    """A triple (lambda, mu; nu) of SU(n) weights: candidate branching nu in lambda (x) mu."""

    n: int
    lam: Weight
    mu: Weight
    nu: Weight

    def __post_init__(self):
        if not (self.lam.n == self.mu.n == self.nu.n == self.n):
            raise ValueError("all three weights must share the rank n")

    @classmethod
    def from_labels(cls, n, lam, mu, nu) -> "Triple":
        return cls(n, Weight(n, tuple(lam)), Weight(n, tuple(mu)), Weight(n, tuple(nu)))

    def scaled(self, s: int) -> "Triple":
        return Triple(self.n, self.lam.scaled(s), self.mu.scaled(s), self.nu.scaled(s))


def ell(w: Weight) -> tuple[int, ...]:
    """Young row lengths of a weight: ell_i = sum_{j>=i} label_j, with ell_n = 0."""
    out = [0] * w.n
    acc = 0
    for i in range(w.n - 2, -1, -1):
        acc += w.labels[i]
        out[i] = acc
    return tuple(out)


def rho_shift(w: Weight, sign: int) -> Weight:
    """Add (sign=+1) or subtract (sign=-1) the Weyl vector from every label."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    shifted = tuple(x + sign for x in w.labels)
    if sign == -1 and any(x < 0 for x in shifted):
        raise NonDominant(f"{w} - rho leaves the dominant chamber")
    return Weight(w.n, shifted)


def balance_sigma(t: Triple) -> Fraction:
    """The U(n) balancing number sigma = (1/n) sum_j j*(lambda_j + mu_j - nu_j).

    Integral exactly when the triple is compatible (center congruence).
    """
    n = t.n
    total = sum(
        (j + 1) * (t.lam.labels[j] + t.mu.labels[j] - t.nu.labels[j])
        for j in range(n - 1)
    )
    return Fraction(total, n)


def is_compatible(t: Triple) -> bool:
    """Center congruence: sum_j j*(lambda_j + mu_j - nu_j) = 0 mod n."""
    return balance_sigma(t).denominator == 1


def extend_to_un(t: Triple) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Extend an SU(n) triple to U(n) partitions (alpha, beta; gamma).

    alpha = ell(lambda), beta = ell(mu) (last part 0), and
    gamma = ell(nu) + sigma*(1,...,1), so that sum(gamma) = sum(alpha) + sum(beta).
    Raises Incompatible when sigma is non-integral and NegativeShift when
    sigma is a negative integer (the multiplicity is then 0).
    """
    sigma = balance_sigma(t)
    if sigma.denominator != 1:
        raise Incompatible(f"sigma = {sigma} is not an integer for {t}")
    s = int(sigma)
    if s < 0:
        raise NegativeShift(f"sigma = {s} < 0 for {t}")
    alpha = ell(t.lam)
    beta = ell(t.mu)
    gamma = tuple(x + s for x in ell(t.nu))
    return alpha, beta, gamma


def vandermonde(parts) -> Rational:
    """Product of pairwise differences prod_{i<j}(p_i - p_j); 0 iff a part repeats."""
    parts = tuple(parts)
    prod: Rational = Fraction(1)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            prod *= parts[i] - parts[j]
    return prod


def superfactorial(m: int) -> int:
    """Sf(m) = 1! 2! ... m!"""
    if m < 0:
        raise ValueError("superfactorial needs m >= 0")
    out = 1
    for p in range(2, m + 1):
        out *= factorial(p)
    return out


def weyl_dim(w: Weight) -> int:
    """Dimension of the irrep with highest weight w: Delta(ell(w + rho)) / Sf(n-1)."""
    shifted = ell(rho_shift(w, +1))
    num = 1
    for i in range(w.n):
        for j in range(i + 1, w.n):
            num *= shifted[i] - shifted[j]
    denom = superfactorial(w.n - 1)
    assert num % denom == 0
    return num // denom


def is_weakly_decreasing(parts) -> bool:
    parts = tuple(parts)
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))
