"""Exact hyperdeterminants and SLOCC classification of small multipartite pure states."""

__version__ = "0.1.0"

from .scalars import GaussianRational, abs_squared, format_scalar, parse_scalar
from .tensor import (
    FormatError,
    LocalOperation,
    Tensor,
    TensorFormat,
    apply_local,
    flatten,
    gradient,
    ket,
    multilinear_eval,
    pairing,
    segre_product,
)
from .linalg import Matrix, bipartite_class, determinant, local_ranks, minor, rank
from .hyperdet import (
    BinaryForm,
    binary_discriminant,
    concurrence_sq,
    det_2x2,
    det_2x2x2,
    det_2x2x2x2,
    det_3x2x2,
    hyperdet,
    schlafli_lift,
    tangle_sq,
)
from .singularity import (
    hessian_det,
    hessian_matrix,
    is_critical_point,
    node1_membership_3x2x2,
    node_membership_3qubit,
    separability_pattern,
    xo_section_member,
)
from .classify import EntanglementClass, classify, classify_report, entanglement_class, representative
from .orbit_order import can_degrade, degradation_targets, order_diagram
from .stateio import parse_state, serialize_state
from .rng import random_state

__all__ = [
    "GaussianRational", "abs_squared", "format_scalar", "parse_scalar",
    "FormatError", "LocalOperation", "Tensor", "TensorFormat", "apply_local", "flatten",
    "gradient", "ket", "multilinear_eval", "pairing", "segre_product",
    "Matrix", "bipartite_class", "determinant", "local_ranks", "minor", "rank",
    "BinaryForm", "binary_discriminant", "concurrence_sq", "det_2x2", "det_2x2x2",
    "det_2x2x2x2", "det_3x2x2", "hyperdet", "schlafli_lift", "tangle_sq",
    "hessian_det", "hessian_matrix", "is_critical_point", "node1_membership_3x2x2",
    "node_membership_3qubit", "separability_pattern", "xo_section_member",
    "EntanglementClass", "classify", "classify_report", "entanglement_class", "representative",
    "can_degrade", "degradation_targets", "order_diagram",
    "parse_state", "serialize_state", "random_state",
]
