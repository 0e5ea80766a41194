"""Exact tools for crossing numbers of polygonal paths and convex splitting.

Everything runs over exact rational arithmetic: orientation predicates,
crossing-number oracles, greedy convex decomposition of paths and sampled
curves, abstract sign-sequence machinery with the flip property, and the
extraction of super order-type homogeneous subsequences.
"""

from .crossing import (ConvexDecomposition, CrossingReport, CrossingWitness,
                       EdgeContainedError, PolyPath, crossings_with,
                       decompose, is_convex, max_crossings,
                       witness_crossings)
from .curves import (CurveDecomposition, CurveSpec, EpsSample, SamplingError,
                     builtin, decompose_curve, epsilon_sample)
from .exactgeom import (DimensionMismatchError, GeneralPositionError,
                        GeneralPositionReport, Hyperplane,
                        IncrementalGeneralPosition, Point, PointSeq,
                        affinely_independent, as_point, as_rational,
                        det_rational, is_general_position, orientation,
                        point_seq, project, side_of, span_hyperplane)
from .kseq import (KNOWN_BOUNDS, AbstractFlipReport, GreedyPartition,
                   KSequence, c_bound, from_json_dict, from_points,
                   from_table, greedy_partition, reduce, to_json_dict,
                   verify_flip)
from .ordertype import (FlipReport, HomogeneityReport, SignSeq,
                        count_sign_changes, is_flip,
                        is_order_type_homogeneous, sign_sequence, tuple_sign)
from .ramsey import (ExtractionStage, ExtractionTrace,
                     SuperGeneralPositionError, SuperHomogeneityReport,
                     extraction_floor, is_super_ot_homogeneous,
                     longest_ot_homogeneous, super_extract)

__version__ = "0.1.0"

__all__ = [
    "AbstractFlipReport",
    "ConvexDecomposition",
    "CrossingReport",
    "CrossingWitness",
    "CurveDecomposition",
    "CurveSpec",
    "DimensionMismatchError",
    "EdgeContainedError",
    "EpsSample",
    "ExtractionStage",
    "ExtractionTrace",
    "FlipReport",
    "GeneralPositionError",
    "GeneralPositionReport",
    "GreedyPartition",
    "HomogeneityReport",
    "Hyperplane",
    "IncrementalGeneralPosition",
    "KNOWN_BOUNDS",
    "KSequence",
    "Point",
    "PointSeq",
    "PolyPath",
    "SamplingError",
    "SignSeq",
    "SuperGeneralPositionError",
    "SuperHomogeneityReport",
    "affinely_independent",
    "as_point",
    "as_rational",
    "builtin",
    "c_bound",
    "count_sign_changes",
    "crossings_with",
    "decompose",
    "decompose_curve",
    "det_rational",
    "epsilon_sample",
    "extraction_floor",
    "from_json_dict",
    "from_points",
    "from_table",
    "greedy_partition",
    "is_convex",
    "is_flip",
    "is_general_position",
    "is_order_type_homogeneous",
    "is_super_ot_homogeneous",
    "longest_ot_homogeneous",
    "max_crossings",
    "orientation",
    "point_seq",
    "project",
    "reduce",
    "side_of",
    "sign_sequence",
    "span_hyperplane",
    "super_extract",
    "to_json_dict",
    "tuple_sign",
    "verify_flip",
    "witness_crossings",
]
