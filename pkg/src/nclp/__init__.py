"""Induced Schatten-norm toolkit for density-weighted matrix maps.

Builds the weighted action U(Y) = G^((1-theta)/p) T(G^(-(1-theta)/p) Y
G^(-theta/p)) G^(theta/p) of a superoperator T against a faithful density G,
estimates its S^p -> S^p norm from below with certified witnesses, evaluates
the known upper bounds, scans a 2x2 family for norms above 1, and classifies
(p, theta) pairs as bounded / unbounded / unknown.
"""

from .cpmap import (
    CompatibilityReport,
    State,
    SuperOperator,
    adjoint,
    apply,
    choi_matrix,
    compatibility,
    is_completely_positive,
)
from .embed import (
    EmbeddedMap,
    RegionStatus,
    Source,
    Status,
    build_embedded,
    classify_region,
    exact_norm_p2,
    hjx_upper_bound,
)
from .matcore import (
    PositiveMatrix,
    dual_element,
    frac_power,
    kron,
    schatten_norm,
    singular_values,
)
from .normest import (
    EstimatorConfig,
    NormEstimate,
    dual_ascent,
    estimate_norm,
    schatten_gradient,
)
from .qubitfamily import (
    QubitWitness,
    Thresholds,
    alpha,
    alpha1,
    delta,
    family_max,
    family_value,
    find_counterexample,
    m_closed,
    optimal_ab,
    qubit_map,
    qubit_state,
    theta_thresholds,
)
from .tensor import (
    DivergenceTable,
    choi_shuffle_permutation,
    divergence_table,
    kron_state,
    kron_superop,
    tensor_norm_lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "CompatibilityReport",
    "DivergenceTable",
    "EmbeddedMap",
    "EstimatorConfig",
    "NormEstimate",
    "PositiveMatrix",
    "QubitWitness",
    "RegionStatus",
    "Source",
    "State",
    "Status",
    "SuperOperator",
    "Thresholds",
    "adjoint",
    "alpha",
    "alpha1",
    "apply",
    "build_embedded",
    "choi_matrix",
    "choi_shuffle_permutation",
    "classify_region",
    "compatibility",
    "delta",
    "divergence_table",
    "dual_ascent",
    "dual_element",
    "estimate_norm",
    "exact_norm_p2",
    "family_max",
    "family_value",
    "find_counterexample",
    "frac_power",
    "hjx_upper_bound",
    "is_completely_positive",
    "kron",
    "kron_state",
    "kron_superop",
    "m_closed",
    "optimal_ab",
    "qubit_map",
    "qubit_state",
    "schatten_gradient",
    "schatten_norm",
    "singular_values",
    "tensor_norm_lower_bound",
    "theta_thresholds",
]
