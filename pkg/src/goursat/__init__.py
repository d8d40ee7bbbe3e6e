"""Exact invariants of Goursat distribution germs.

Small growth vectors, derived vectors, RVT codes and Puiseux
characteristics, with two independent routes to the latter: the direct
formula on derived vectors (:mod:`goursat.theorem`) and the E-operator
recursion on RVT codes (:mod:`goursat.mz`).
"""

__version__ = "0.1.0"

from .codes import (
    CodeProfile,
    RvtCode,
    Truncation,
    derived_to_rvt,
    rvt_to_derived,
    truncate_last_stage,
    validate_rvt,
)
from .curves import (
    BranchSupport,
    is_well_parametrized,
    puiseux_from_exponents,
    validate_puiseux,
    witness_exponents,
)
from .errors import *  # noqa: F401,F403
from .invariants import (
    DerivedVector,
    PuiseuxCharacteristic,
    SmallGrowthVector,
    derived_to_sgv,
    geometry_summary,
    sgv_to_derived,
)
from .mz import CodeDecomposition, EPair, e_operator, puiseux_from_rvt, split_code
from .theorem import DivisibilityProfile, divisibility_points, puiseux_from_derived
