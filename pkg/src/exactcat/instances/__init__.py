"""Concrete additive categories with kernels and cokernels."""

from .finvect import FINVECTQ, finvectq
from .lattice import LATTICEZ, latticez
from .monopairs import MONOPAIRSQ, monopairsq
from .sampling import (
    SamplerConfig,
    sample_exact_pair,
    sample_iso,
    sample_morphism,
    sample_object,
)

__all__ = [
    "FINVECTQ",
    "LATTICEZ",
    "MONOPAIRSQ",
    "finvectq",
    "latticez",
    "monopairsq",
    "SamplerConfig",
    "sample_object",
    "sample_morphism",
    "sample_iso",
    "sample_exact_pair",
]
