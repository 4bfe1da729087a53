"""Semi-stability decisions, maximal-exact-structure membership, and suites."""

from .verdicts import (
    ExactPair,
    NotACokernelError,
    NotAKernelError,
    PairError,
    ProbeConfig,
    RuleContradictionError,
    Verdict,
)
from .semistable import (
    decide_semistable_cokernel,
    decide_semistable_kernel,
    in_maximal_exact,
    is_kernel_cokernel_pair,
    is_split_exact,
    probe_semistable_cokernel,
    probe_semistable_kernel,
    recheck_witness,
)
from .suites import (
    SUITES,
    DiagramTrace,
    Report,
    axiom_suite,
    kelly_suite,
    run_suite,
    structure_probe,
    theorem_diagram_suite,
    transport_suite,
    universal_property_suite,
)

__all__ = [
    "ExactPair",
    "NotACokernelError",
    "NotAKernelError",
    "PairError",
    "ProbeConfig",
    "RuleContradictionError",
    "Verdict",
    "decide_semistable_cokernel",
    "decide_semistable_kernel",
    "in_maximal_exact",
    "is_kernel_cokernel_pair",
    "is_split_exact",
    "probe_semistable_cokernel",
    "probe_semistable_kernel",
    "recheck_witness",
    "SUITES",
    "DiagramTrace",
    "Report",
    "axiom_suite",
    "kelly_suite",
    "run_suite",
    "structure_probe",
    "theorem_diagram_suite",
    "transport_suite",
    "universal_property_suite",
]
