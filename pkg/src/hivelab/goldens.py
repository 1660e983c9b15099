"""Registry of golden checks: every published value reproduced by this
package, with the computation that produces it.  The CLI golden runner and
the test suite both execute this list.

Tiers: 'fast' cases run in seconds; 'slow' cases cover the large stretched
counts and full tensor scans (minutes).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from . import characters, ehrhart, hives, kernels
from .core import Triple, Weight, ell, extend_to_un, is_compatible, superfactorial, weyl_dim

SU4_BIG = Triple.from_labels(4, (21, 13, 5), (7, 10, 12), (20, 11, 9))
SU4_SMALL = Triple.from_labels(4, (1, 2, 2), (2, 2, 1), (1, 4, 1))
SU5_HIVE = Triple.from_labels(5, (1, 3, 2, 3), (2, 1, 4, 2), (3, 1, 4, 3))
SU5_TH1 = Triple.from_labels(5, (2, 3, 3, 2), (3, 2, 3, 2), (5, 3, 2, 3))
SU6_EX = Triple.from_labels(6, (1, 3, 1, 2, 1), (2, 1, 3, 2, 1), (4, 1, 6, 2, 1))
SU3_FIG1 = (Weight(3, (9, 5)), Weight(3, (6, 5)))


@dataclass(frozen=True)
class Golden:
    name: str
    tier: str
    expected: object
    compute: Callable[[], object]


def _shifted(t):
    return kernels.KernelInput.from_triple(t, shifted=True)


def _unshifted(t):
    return kernels.KernelInput.from_triple(t, shifted=False)


GOLDENS: list[Golden] = [
    # core maps
    Golden("ell-fig1", "fast", (14, 5, 0), lambda: ell(Weight(3, (9, 5)))),
    Golden("superfactorial-3", "fast", 12, lambda: superfactorial(3)),
    Golden("superfactorial-4", "fast", 288, lambda: superfactorial(4)),
    Golden("weyl-dim-su5-0110", "fast", 75, lambda: weyl_dim(Weight(5, (0, 1, 1, 0)))),
    Golden("compatible-su6", "fast", True, lambda: is_compatible(SU6_EX)),
    Golden(
        "extend-su4",
        "fast",
        ((39, 18, 5, 0), (29, 22, 12, 0), (54, 34, 23, 14)),
        lambda: extend_to_un(SU4_BIG),
    ),
    # LR multiplicities
    Golden("lr-su4-367", "fast", 367, lambda: hives.count_hives(SU4_BIG)),
    Golden("lr-su6-38", "fast", 38, lambda: hives.count_hives(SU6_EX)),
    Golden("lr-su6-s2-511", "fast", 511, lambda: hives.count_hives(SU6_EX.scaled(2))),
    Golden("lr-su5-99", "fast", 99, lambda: hives.count_hives(SU5_HIVE)),
    Golden("lr-su5-s2-1463", "fast", 1463, lambda: hives.count_hives(SU5_HIVE.scaled(2))),
    Golden("lr-su5-th1-211", "fast", 211, lambda: hives.count_hives(SU5_TH1)),
    Golden("oracle-su4-367", "fast", 367, lambda: hives.lr_oracle(SU4_BIG)),
    Golden(
        "fig1-max-multiplicity",
        "fast",
        6,
        lambda: hives.tensor_polytope_report(*SU3_FIG1).max_multiplicity,
    ),
    Golden(
        "tensor-su4-report",
        "slow",
        (7092, 537186, 377),
        lambda: (
            lambda r: (r.distinct, r.total_multiplicity, r.max_multiplicity)
        )(hives.tensor_polytope_report(Weight(4, (21, 13, 5)), Weight(4, (7, 10, 12)))),
    ),
    # kernel closed forms
    Golden(
        "j4-unshifted-742/3",
        "fast",
        Fraction(742, 3),
        lambda: kernels.j4(_unshifted(SU4_BIG)),
    ),
    Golden(
        "j4-shifted-1449/4",
        "fast",
        Fraction(1449, 4),
        lambda: kernels.j4(_shifted(SU4_BIG)),
    ),
    Golden(
        "j4-shifted-97/24",
        "fast",
        Fraction(97, 24),
        lambda: kernels.j4(_shifted(SU4_SMALL)),
    ),
    Golden(
        "j4-unshifted-1/3",
        "fast",
        Fraction(1, 3),
        lambda: kernels.j4(_unshifted(SU4_SMALL)),
    ),
    Golden(
        "j2-endpoint-half",
        "fast",
        Fraction(1, 2),
        lambda: kernels.j2(kernels.KernelInput(2, (1, 0), (1, 0), (2, 0)), "half"),
    ),
    # character tables and LR sums
    Golden(
        "rn-table-4",
        "fast",
        {(0, 0, 0): Fraction(3, 8), (1, 0, 1): Fraction(1, 24)},
        lambda: {k.labels: r for k, r in characters.rn_table(4, "R").terms.items()},
    ),
    Golden(
        "rhat-table-4",
        "fast",
        {(0, 1, 0): Fraction(1, 6)},
        lambda: {k.labels: r for k, r in characters.rn_table(4, "Rhat").terms.items()},
    ),
    Golden(
        "lemma3-all",
        "fast",
        [True] * 5,
        lambda: [characters.lemma3_check(n).ok for n in range(2, 7)],
    ),
    Golden(
        "theorem1-su4-shifted",
        "fast",
        Fraction(97, 24),
        lambda: characters.theorem1_rhs(SU4_SMALL, "shifted"),
    ),
    Golden(
        "theorem1-su4-unshifted",
        "fast",
        Fraction(1, 3),
        lambda: characters.theorem1_rhs(SU4_SMALL, "unshifted"),
    ),
    Golden(
        "theorem1-su5-split",
        "fast",
        (9495, 42010, 11708, Fraction(63213, 360)),
        lambda: _su5_split(),
    ),
    Golden(
        "theorem1-su6-unshifted",
        "fast",
        Fraction(32, factorial(9)),
        lambda: characters.theorem1_rhs(SU6_EX, "unshifted"),
    ),
    Golden(
        "quantization-examples",
        "fast",
        (True, True, True),
        lambda: (
            characters.quantization_check(Fraction(742, 3), 4),
            characters.quantization_check(Fraction(1, 3), 4),
            characters.quantization_check(Fraction(53, 15), 5),
        ),
    ),
    # stretching polynomials and geometry
    Golden(
        "stretch-su4-counts",
        "fast",
        [367, 2422, 7650, 17535],
        lambda: ehrhart.stretched_counts(SU4_BIG, 4),
    ),
    Golden(
        "stretch-su4-poly",
        "fast",
        [Fraction(1), Fraction(388, 24), Fraction(2460, 24), Fraction(5936, 24)],
        lambda: list(ehrhart.stretching_polynomial(SU4_BIG).coeffs),
    ),
    Golden(
        "geometry-su4",
        "fast",
        (3, Fraction(1484), Fraction(410), 160, True),
        lambda: (
            lambda g: (
                g.degree,
                g.normalized_volume,
                g.normalized_boundary,
                g.interior_points,
                g.blichfeldt_ok,
            )
        )(ehrhart.geometry_report(SU4_BIG)),
    ),
    Golden(
        "shifted-kernel-poly-su4",
        "fast",
        [Fraction(5, 12), Fraction(12), Fraction(205, 2), Fraction(742, 3)],
        lambda: list(ehrhart.shifted_kernel_poly(SU4_BIG).coeffs),
    ),
    Golden(
        "stretch-su5-poly",
        "slow",
        [
            Fraction(1),
            Fraction(73, 12),
            Fraction(687, 40),
            Fraction(679, 24),
            Fraction(667, 24),
            Fraction(121, 8),
            Fraction(53, 15),
        ],
        lambda: list(ehrhart.stretching_polynomial(SU5_HIVE).coeffs),
    ),
    Golden(
        "geometry-su5",
        "slow",
        (Fraction(2544), Fraction(3630)),
        lambda: (
            lambda g: (g.normalized_volume, g.normalized_boundary)
        )(ehrhart.geometry_report(SU5_HIVE)),
    ),
    Golden(
        "jn-via-volume-su5",
        "slow",
        Fraction(53, 15),
        lambda: ehrhart.jn_via_volume(SU5_HIVE),
    ),
    Golden(
        "jn-via-volume-su6",
        "slow",
        Fraction(32, factorial(9)),
        lambda: ehrhart.jn_via_volume(SU6_EX),
    ),
    Golden(
        "degenerate-su4-catalogue",
        "fast",
        [
            [Fraction(1), Fraction(3, 2), Fraction(1, 2)],
            [Fraction(1), Fraction(2)],
            [Fraction(1), Fraction(2), Fraction(1)],
            [Fraction(1), Fraction(2)],
            [Fraction(1), Fraction(3), Fraction(2)],
        ],
        lambda: [
            list(ehrhart.stretching_polynomial(Triple.from_labels(4, lam, mu, nu)).trimmed().coeffs)
            for lam, mu, nu in [
                ((2, 2, 1), (2, 1, 3), (0, 1, 4)),
                ((2, 2, 1), (2, 1, 3), (2, 4, 0)),
                ((2, 2, 1), (2, 1, 3), (2, 0, 4)),
                ((3, 0, 3), (2, 3, 1), (3, 4, 0)),
                ((3, 0, 3), (2, 3, 1), (2, 3, 1)),
            ]
        ],
    ),
]


def _su5_split():
    terms = characters.kernel_lr_terms(SU5_TH1, "shifted")
    by_kappa = {t.kappa.labels: t for t in terms}
    t0 = by_kappa[(0, 0, 0, 0)]
    t1 = by_kappa[(1, 0, 0, 1)]
    t2 = by_kappa[(0, 1, 1, 0)]
    total = sum((t.coefficient * t.lr_sum for t in terms), Fraction(0))
    return (45 * t0.lr_sum, 10 * t1.lr_sum, 1 * t2.lr_sum, total)


@dataclass(frozen=True)
class GoldenResult:
    name: str
    expected: object
    actual: object
    ok: bool


def run_goldens(tier: str = "all") -> list[GoldenResult]:
    """Execute golden checks; tier is 'fast', 'slow' or 'all'."""
    out = []
    for g in GOLDENS:
        if tier != "all" and g.tier != tier:
            continue
        actual = g.compute()
        out.append(GoldenResult(g.name, g.expected, actual, actual == g.expected))
    return out
