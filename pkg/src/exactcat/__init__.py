"""Exact-arithmetic toolkit for additive categories with kernels and cokernels.

Computes kernels, cokernels, pullbacks, pushouts and strictness in three
concrete instances, decides membership in the maximal exact structure via
semi-stability, and verifies the exact-category axioms by seeded,
exact-arithmetic property suites.
"""

from . import instances  # noqa: F401  (registers the shipped instances)
from .core import (
    BiproductData,
    CokernelData,
    ConstraintError,
    DomainMismatchError,
    ExactCatError,
    FactorizationError,
    KernelData,
    MediatorError,
    Mor,
    MorphismProfile,
    Obj,
    PullbackSquare,
    PushoutSquare,
    StrictFactorization,
    get_instance,
)
from .integral import IntMatrix, SnfDecomposition
from .rational import RatMatrix

__version__ = "0.1.0"

__all__ = [
    "BiproductData",
    "CokernelData",
    "ConstraintError",
    "DomainMismatchError",
    "ExactCatError",
    "FactorizationError",
    "IntMatrix",
    "KernelData",
    "MediatorError",
    "Mor",
    "MorphismProfile",
    "Obj",
    "PullbackSquare",
    "PushoutSquare",
    "RatMatrix",
    "SnfDecomposition",
    "StrictFactorization",
    "get_instance",
    "__version__",
]
