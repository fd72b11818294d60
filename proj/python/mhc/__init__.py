"""Multi-view hierarchical clustering by cosine distance integration."""

from ._mhc import (
    Dataset,
    Hierarchy,
    IoError,
    LinkStats,
    ValidationError,
    __version__,
    accuracy,
    cut,
    distance_matrix,
    f_measure,
    fit,
    generate_synthetic,
    nmi,
    refine_to_k,
)

__all__ = [
    "Dataset",
    "Hierarchy",
    "IoError",
    "LinkStats",
    "ValidationError",
    "__version__",
    "accuracy",
    "cut",
    "distance_matrix",
    "f_measure",
    "fit",
    "generate_synthetic",
    "nmi",
    "refine_to_k",
]
