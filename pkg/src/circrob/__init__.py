"""circrob: circular Robinson dissimilarity spaces.

Construct a compatible circular order of an n-point dissimilarity space in
O(n log n), verify compatibility of a given order in O(n^2) for the strict
and non-strict quasi-circular and circular Robinson notions, enumerate all
compatible orders, and cross-check everything against brute-force oracles on
small instances.
"""

from .core import (
    Arc,
    CircularOrder,
    DissimilarityMatrix,
    FarthestData,
    MatrixFormatError,
    arc_between,
    canonicalize,
    chain_holds,
    farthest_data,
    farthest_set,
    load_matrix,
)
from .generators import (
    GenerationError,
    GeneratorSpec,
    circle_instance,
    counterexample_fixture,
    perturb,
    two_cluster_instance,
)
from .oracle import (
    OracleClassification,
    circular_robinson_by_arcs,
    enumerate_circular_orders,
    oracle_classify,
    pre_circular_by_quadruples,
    quasi_circular_by_quadruples,
)
from .predicates import Quadruple, cr, qcr, scr, sqcr
from .recognition import (
    NearFarPartition,
    OrderSet,
    TieWarning,
    bipartition_criterion,
    compatible_orders,
    find_compatible_order,
    j_set,
    near_far_partition,
    orders_agree,
)
from .verification import (
    ClassificationReport,
    CrossingWitness,
    UnimodalityReport,
    crossing_violation,
    is_linear_robinson,
    is_strictly_unimodal,
    is_unimodal,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "CircularOrder",
    "ClassificationReport",
    "CrossingWitness",
    "DissimilarityMatrix",
    "FarthestData",
    "GenerationError",
    "GeneratorSpec",
    "MatrixFormatError",
    "NearFarPartition",
    "OracleClassification",
    "OrderSet",
    "Quadruple",
    "TieWarning",
    "UnimodalityReport",
    "arc_between",
    "bipartition_criterion",
    "canonicalize",
    "chain_holds",
    "circle_instance",
    "circular_robinson_by_arcs",
    "compatible_orders",
    "counterexample_fixture",
    "cr",
    "crossing_violation",
    "enumerate_circular_orders",
    "farthest_data",
    "farthest_set",
    "find_compatible_order",
    "is_linear_robinson",
    "is_strictly_unimodal",
    "is_unimodal",
    "j_set",
    "load_matrix",
    "near_far_partition",
    "oracle_classify",
    "orders_agree",
    "perturb",
    "pre_circular_by_quadruples",
    "qcr",
    "quasi_circular_by_quadruples",
    "scr",
    "sqcr",
    "two_cluster_instance",
    "verify",
]
