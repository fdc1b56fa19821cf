"""Exact-arithmetic cumulant calculus on the word Hopf algebra.

The package implements words and bar-words with their subset-extraction
coproduct, the induced shuffle algebra of linear forms, the three
exponential/logarithm bijections with the pre-Lie Magnus pair and adjoint
actions, independent non-crossing-partition oracles, and the resulting
free, boolean, monotone and conditionally free cumulant transforms and
convolutions.
"""

from .words import Word, BarWord, UNIT, subword, complement_components
from .coalgebra import (
    TensorSum,
    coproduct,
    coproduct_word,
    half_coproduct_left,
    half_coproduct_right,
    reduced_coproduct,
    reduced_half_left,
    reduced_half_right,
)
from .functionals import (
    Scalar,
    MomentTable,
    CumulantTable,
    Functional,
    character,
    infinitesimal,
    unit,
    conv,
    half_left,
    half_right,
    prelie,
    inverse,
    is_character,
    is_infinitesimal,
    materialize,
)
from .series import (
    exp_conv,
    log_conv,
    exp_left,
    exp_right,
    log_left,
    log_right,
    magnus,
    magnus_inverse,
    sharp,
    bch,
    ad_lower,
    ad_upper,
    factorize_left,
    factorize_right,
)
from .partitions import (
    SetPartition,
    enumerate_nc,
    enumerate_boolean,
    enumerate_nc_irreducible,
    classify_blocks,
    nesting_forest,
    tree_factorial,
    free_moment_sum,
    boolean_moment_sum,
    monotone_moment_sum,
    cfree_moment_sum,
    adjoint_sum_lower,
    adjoint_sum_upper,
)
from .cumulants import (
    StatePair,
    unit_state,
    free_cumulants,
    boolean_cumulants,
    monotone_cumulants,
    moments_from_free,
    moments_from_boolean,
    moments_from_monotone,
    convert,
    cfree_cumulants,
    moments_from_cfree,
    convolve_free,
    convolve_boolean,
    convolve_monotone,
    convolve_cfree,
)
from .errors import ShuffleCalcError, DomainError, TruncationError

__version__ = "0.1.0"
