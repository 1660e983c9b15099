"""Hardcoded compactification character tables R_n / R-hat_n (n = 2..6) and
the finite LR-sum identities they induce on the kernel J_n.

The tables are data, cross-checked three ways: the unit-sum rule
sum_kappa r_kappa dim(kappa) = 1, quantization of every unshifted kernel
value by delta_n, and exact agreement of the LR sums with the closed-form
kernels on sweeps.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .core import Triple, Weight, balance_sigma, rho_shift, weyl_dim
from .errors import Incompatible, NonDominant, Unsupported
from .hives import count_hives, tensor_decompose

# least common denominators delta_n of the unshifted kernel on integral
# compatible triples
QUANTIZATION = {2: 1, 3: 1, 4: 6, 5: 360, 6: factorial(9)}


@dataclass(frozen=True)
class CharacterCombo:
    """Finite linear combination sum_kappa r_kappa chi_kappa with rational r."""

    n: int
    terms: dict[Weight, Fraction]

    def coefficient_dim_sum(self) -> Fraction:
        return sum((r * weyl_dim(k) for k, r in self.terms.items()), Fraction(0))

    def min_coefficient(self) -> Fraction:
        return min(self.terms.values())


def _combo(n, numerators, denominator) -> CharacterCombo:
    terms = {Weight(n, k): Fraction(num, denominator) for k, num in numerators.items()}
    return CharacterCombo(n, terms)


@lru_cache(maxsize=None)
def rn_table(n: int, variant: str = "R") -> CharacterCombo:
    """Published expansion of R_n (variant 'R', rho-shifted kernel) or
    R-hat_n (variant 'Rhat', unshifted kernel) on real characters."""
    if variant not in ("R", "Rhat"):
        raise ValueError("variant must be 'R' or 'Rhat'")
    if n not in (2, 3, 4, 5, 6):
        raise Unsupported(f"character tables cover n = 2..6, got {n}")
    if n == 2:
        if variant == "R":
            return _combo(2, {(0,): 1}, 1)
        return _combo(2, {(1,): 1}, 2)
    if n == 3:
        return _combo(3, {(0, 0): 1}, 1)
    if n == 4:
        if variant == "R":
            return _combo(4, {(0, 0, 0): 9, (1, 0, 1): 1}, 24)
        return _combo(4, {(0, 1, 0): 1}, 6)
    if n == 5:
        return _combo(5, {(0, 0, 0, 0): 45, (1, 0, 0, 1): 10, (0, 1, 1, 0): 1}, 360)
    if variant == "R":
        # conjugate pairs are stored as two separate terms with equal weight
        return _combo(
            6,
            {
                (0, 0, 0, 0, 0): 2629422,
                (0, 0, 1, 1, 1): 1670,
                (1, 1, 1, 0, 0): 1670,
                (0, 0, 2, 0, 0): 24167,
                (0, 1, 0, 0, 2): 13826,
                (2, 0, 0, 1, 0): 13826,
                (0, 1, 0, 1, 0): 216561,
                (1, 0, 0, 0, 1): 957461,
                (1, 0, 2, 0, 1): 1,
                (1, 1, 0, 1, 1): 125,
                (2, 0, 0, 0, 2): 985,
            },
            2**8 * factorial(9),
        )
    return _combo(
        6,
        {
            (0, 0, 1, 0, 0): 5422,
            (0, 1, 1, 1, 0): 1,
            (0, 2, 0, 0, 1): 13,
            (1, 0, 0, 2, 0): 13,
            (1, 0, 1, 0, 1): 186,
            (0, 0, 0, 1, 1): 982,
            (1, 1, 0, 0, 0): 982,
        },
        factorial(9),
    )


# ---------------------------------------------------------------------------
# Theorem-1 style LR sums


@dataclass(frozen=True)
class KernelTerm:
    kappa: Weight
    coefficient: Fraction
    lr_sum: int  # sum over nu' of N_{kappa pair}^{nu'} * N_{weight pair}^{nu'}


@lru_cache(maxsize=4096)
def _decompose_cached(lam: Weight, mu: Weight):
    return tuple(tensor_decompose(lam, mu))


def kernel_lr_terms(t: Triple, variant: str = "shifted", lr=None) -> list[KernelTerm]:
    """Per-character terms of the finite LR sum expressing J_n.

    shifted:   J_n(alpha', beta'; gamma') = sum_kappa r_kappa
               sum_{nu'} N_{lambda mu}^{nu'} N_{kappa nu}^{nu'};
    unshifted: J_n(alpha, beta; gamma) = sum_kappa rhat_kappa
               sum_{nu'} N_{lambda-rho mu-rho}^{nu'} N_{kappa nu-rho}^{nu'}.

    `lr` optionally overrides the lookup of N_{pair}^{nu'} (a callable on nu);
    the default counts hives per nu' with a shared cache.
    """
    if variant not in ("shifted", "unshifted"):
        raise ValueError("variant must be 'shifted' or 'unshifted'")
    n = t.n
    table = rn_table(n, "R" if variant == "shifted" else "Rhat")
    if balance_sigma(t).denominator != 1:
        raise Incompatible(f"triple {t} fails the center congruence")
    if variant == "shifted":
        pair = (t.lam, t.mu)
        anchor = t.nu
    else:
        pair = (rho_shift(t.lam, -1), rho_shift(t.mu, -1))
        anchor = rho_shift(t.nu, -1)
    if lr is None:
        lam0, mu0 = pair

        def lr(nu_prime: Weight) -> int:
            return count_hives(Triple(n, lam0, mu0, nu_prime))

    terms = []
    for kappa, coeff in sorted(table.terms.items(), key=lambda kv: kv[0].labels):
        inner = 0
        for entry in _decompose_cached(kappa, anchor):
            inner += entry.multiplicity * lr(entry.nu)
        terms.append(KernelTerm(kappa, coeff, inner))
    return terms


def theorem1_rhs(t: Triple, variant: str = "shifted", lr=None) -> Fraction:
    """Kernel value as the finite rational combination of LR coefficients.

    For the unshifted variant the result is 0 unless lambda, mu, nu are all
    strictly dominant (otherwise some partition has a repeated part and the
    kernel vanishes).
    """
    if variant == "unshifted":
        try:
            terms = kernel_lr_terms(t, variant, lr=lr)
        except NonDominant:
            return Fraction(0)
    else:
        terms = kernel_lr_terms(t, variant, lr=lr)
    return sum((term.coefficient * term.lr_sum for term in terms), Fraction(0))


# ---------------------------------------------------------------------------
# structural checks


@dataclass(frozen=True)
class Lemma3Report:
    n: int
    sum_r_dim: Fraction
    sum_rhat_dim: Fraction

    @property
    def ok(self) -> bool:
        return self.sum_r_dim == 1 and self.sum_rhat_dim == 1


def lemma3_check(n: int) -> Lemma3Report:
    """Unit-sum rule: sum_kappa r_kappa dim(kappa) = 1 for both tables."""
    return Lemma3Report(
        n,
        rn_table(n, "R").coefficient_dim_sum(),
        rn_table(n, "Rhat").coefficient_dim_sum(),
    )


def quantization_check(value: Fraction, n: int) -> bool:
    """True iff delta_n * value is an integer."""
    if n not in QUANTIZATION:
        raise Unsupported(f"no quantization constant for n = {n}")
    return (Fraction(value) * QUANTIZATION[n]).denominator == 1


@dataclass(frozen=True)
class Conjecture2Report:
    n: int
    min_r: Fraction
    min_rhat: Fraction

    @property
    def nonnegative(self) -> bool:
        return self.min_r >= 0 and self.min_rhat >= 0


def conjecture2_scan(n: int) -> Conjecture2Report:
    """Smallest coefficient in each stored table (conjecturally >= 0)."""
    return Conjecture2Report(
        n,
        rn_table(n, "R").min_coefficient(),
        rn_table(n, "Rhat").min_coefficient(),
    )
