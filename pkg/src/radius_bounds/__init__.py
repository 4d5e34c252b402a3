"""Exact numerical radius of complex matrices and verified bound chains.

The hot rotated-eigenvalue kernel lives in a compiled extension with a pure
numpy fallback; ``backend_name()`` reports which one is active.
"""

from ._backend import HAVE_COMPILED, backend_name
from .bounds import (
    BoundValue,
    ChainVerdict,
    catalog_names,
    chain_26,
    classical_bounds,
    corollary_after_29,
    eq_24_comparison,
    eq_25,
    evaluate_catalog,
    kittaneh_02,
    kittaneh_07,
    lemma_08_check,
    lemma_17_bound,
    lower_refinement_final,
    min_over_v_29,
    positive_diff_norm_14,
    reverse_power_bound,
    squared_lower_01,
    squared_upper_04,
    theorem_8,
    triangle_refinement_6,
)
from .harness import (
    EXAMPLE_MATRIX,
    TrialConfig,
    find_noncomparability_witnesses,
    generate,
    run_suite,
)
from .linalg import (
    FunctionPair,
    HermitianPSD,
    abs_op,
    adjoint,
    apply_scalar_fn,
    herm_eig,
    op_norm,
    power_pair,
    psd_power,
)
from .radius import (
    CartesianPair,
    RadiusResult,
    cartesian,
    numerical_radius,
    power_check,
    radius_oracle,
)

__version__ = "0.1.0"
