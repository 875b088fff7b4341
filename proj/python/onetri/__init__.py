"""Exact distinct-triangle census, Euclidean realizability and one-triangle search."""

from ._core import (
    ApproxCensusReport,
    CensusReport,
    DefectResult,
    DegenerateTriangle,
    DimensionMismatch,
    Error,
    NonDifferentiable,
    NotRealizable,
    ParseError,
    PreconditionError,
    RealizabilityReport,
    ResidualTooLarge,
    SearchConfig,
    TriangleKind,
    TriangleSignature,
    __version__,
    census,
    construct,
    defect_gradient,
    distance_matrix,
    embedding_dimension,
    enumerate_labelings,
    epsilon_census,
    minimize_defect,
    realize_coordinates,
    snap_and_census,
    squared_circumradius,
    triangle_defect,
    triangle_signature,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
