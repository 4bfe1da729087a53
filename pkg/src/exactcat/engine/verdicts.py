"""Verdicts, exact pairs, and probe configuration.

A semi-stability claim is universally quantified over all pullbacks (or
pushouts), so the engine answers with three values: ``yes`` backed by a rule
or splitting, ``no`` backed by a concrete re-checkable witness square, or
``unknown`` stamped with the exhausted probe budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..core import DomainMismatchError, ExactCatError, Mor
from ..instances.sampling import SamplerConfig
from ..seeding import DEFAULT_SEED


class NotAKernelError(ExactCatError):
    """The morphism is not a kernel, so kernel semi-stability is undefined."""


class NotACokernelError(ExactCatError):
    """The morphism is not a cokernel, so cokernel semi-stability is undefined."""


class PairError(ExactCatError):
    """The two morphisms do not form a composable pair with zero composite."""


class RuleContradictionError(ExactCatError):
    """A probe found a counterexample against a rule-based Yes verdict."""

    def __init__(self, message: str, witness: Optional[dict] = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class ExactPair:
    """Composable ``(f, g)`` with ``g . f = 0``; candidate kernel-cokernel pair."""

    f: Mor
    g: Mor

    def __post_init__(self):
        if self.f.cod != self.g.dom:
            raise DomainMismatchError("pair is not composable: cod(f) must equal dom(g)")
        from ..category import compose

        if not compose(self.f, self.g).is_zero():
            raise PairError("composite g . f is nonzero")


@dataclass(frozen=True)
class ProbeConfig:
    seed: int = DEFAULT_SEED
    samples: int = 100
    max_dim: int = 3
    max_entry: int = 3

    def __post_init__(self):
        if self.samples < 0:
            raise ValueError("samples must be nonnegative")
        if self.max_dim < 1 or self.max_entry < 1:
            raise ValueError("probe bounds must be at least 1")

    def sampler(self) -> SamplerConfig:
        return SamplerConfig(seed=self.seed, max_dim=self.max_dim, max_entry=self.max_entry)

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "max_dim": self.max_dim,
            "max_entry": self.max_entry,
        }


@dataclass(frozen=True)
class Verdict:
    outcome: str  # "yes" | "no" | "unknown"
    justification: Optional[str] = None
    witness: Optional[dict] = field(default=None, compare=False)
    budget: Optional[int] = None

    @classmethod
    def yes(cls, justification: str) -> "Verdict":
        return cls(outcome="yes", justification=justification)

    @classmethod
    def no(cls, witness: dict) -> "Verdict":
        return cls(outcome="no", witness=witness)

    @classmethod
    def unknown(cls, budget: int) -> "Verdict":
        return cls(outcome="unknown", budget=budget)

    @property
    def is_yes(self) -> bool:
        return self.outcome == "yes"

    @property
    def is_no(self) -> bool:
        return self.outcome == "no"

    @property
    def is_unknown(self) -> bool:
        return self.outcome == "unknown"

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "justification": self.justification,
            "witness": self.witness,
            "budget": self.budget,
        }
