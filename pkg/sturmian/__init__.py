from .exact import (
    GOLDEN_ANGLE,
    PHI,
    ContinuedFraction,
    QuadraticIrrational,
    cf_from_qi,
    compare,
    convergents,
    dist_nearest_int,
    frac_part,
    qi_from_cf,
    smallest_better,
)
from .words import Convention, SturmianSpec, factor, letter_at, partition, prefix
from .oracle import ParikhVector, abelian_decomposition, max_power_at, min_abelian_period
from .formulas import guaranteed_exponent, k_max, k_mn, power_exists_at, repetition_extension
from .lagrange import abelian_critical_exponent, are_equivalent, lagrange_exact, lagrange_numeric
from .logger import Logger
from .config import SturmianConfig
from . import exceptions

try:
    from ._version import version as __version__
except ImportError:
    __version__ = "0.0.0"

__all__ = [
    "GOLDEN_ANGLE",
    "PHI",
    "ContinuedFraction",
    "QuadraticIrrational",
    "cf_from_qi",
    "compare",
    "convergents",
    "dist_nearest_int",
    "frac_part",
    "qi_from_cf",
    "smallest_better",
    "Convention",
    "SturmianSpec",
    "factor",
    "letter_at",
    "partition",
    "prefix",
    "ParikhVector",
    "abelian_decomposition",
    "max_power_at",
    "min_abelian_period",
    "guaranteed_exponent",
    "k_max",
    "k_mn",
    "power_exists_at",
    "repetition_extension",
    "abelian_critical_exponent",
    "are_equivalent",
    "lagrange_exact",
    "lagrange_numeric",
    "Logger",
    "SturmianConfig",
    "exceptions",
    "__version__",
]
