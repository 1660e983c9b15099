"""hivelab: exact SU(n) Littlewood-Richardson and hive-polytope toolkit.

Hive lattice-point counting, closed-form Horn-problem kernels, character-table
identities, stretching (Ehrhart) polynomials and a Monte-Carlo spectrum
sampler, all over exact rational arithmetic (floats live only in the sampler).
"""

from .core import (
    Triple,
    Weight,
    balance_sigma,
    ell,
    extend_to_un,
    is_compatible,
    rho,
    rho_shift,
    superfactorial,
    vandermonde,
    weyl_dim,
    zero_weight,
)
from .errors import (
    DegenerateOrbit,
    HivelabError,
    Incompatible,
    NegativeShift,
    NonDominant,
    RankMismatch,
    ResourceLimit,
    TraceMismatch,
    Unsupported,
    ValidationFailure,
)
from .hives import (
    DecompositionEntry,
    Hive,
    TensorReport,
    count_hives,
    count_interior_hives,
    enumerate_hives,
    lr_oracle,
    tensor_decompose,
    tensor_polytope_report,
)

__version__ = "0.1.0"
