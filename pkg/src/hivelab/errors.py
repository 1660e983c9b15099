"""Error types shared across the package."""


class HivelabError(Exception):
    """Base class for all domain errors."""


class NonDominant(HivelabError, ValueError):
    """Subtracting the Weyl vector left the dominant chamber."""


class Incompatible(HivelabError, ValueError):
    """Center congruence sum_j j*(lambda_j + mu_j - nu_j) != 0 mod n."""


class NegativeShift(HivelabError, ValueError):
    """Compatible triple whose U(n) balancing integer is negative (multiplicity 0)."""


class RankMismatch(HivelabError, ValueError):
    """Operation called with the wrong rank n."""


class TraceMismatch(HivelabError, ValueError):
    """Partitions violate sum(gamma) = sum(alpha) + sum(beta)."""


class DegenerateOrbit(HivelabError, ValueError):
    """alpha or beta has a repeated eigenvalue, so the orbit density degenerates."""


class ResourceLimit(HivelabError, RuntimeError):
    """Backtracking node budget exceeded."""


class Unsupported(HivelabError, ValueError):
    """Requested rank is outside the implemented range."""


class ValidationFailure(HivelabError, RuntimeError):
    """An internal consistency check failed (signals a convention bug)."""
