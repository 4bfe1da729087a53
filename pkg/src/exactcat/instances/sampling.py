"""Seeded, instance-stateless samplers.

Every draw is a pure function of ``(seed, label path)`` via
:func:`exactcat.seeding.child_rng`, so suites can evaluate samples in any
order (or in parallel) and still produce identical reports.  A fixed fraction
of morphism draws is biased toward structured shapes (zero, identity,
injections, projections, diagonals) to hit edge cases.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..core import Instance, Mor, Obj, get_instance
from ..seeding import DEFAULT_SEED

STRUCTURED_FRACTION = 0.2


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = DEFAULT_SEED
    max_dim: int = 3
    max_entry: int = 3

    def __post_init__(self):
        if self.max_dim < 1 or self.max_entry < 1:
            raise ValueError("sampler bounds must be at least 1")


def random_entries(rng: random.Random, rows: int, cols: int, max_entry: int) -> list:
    return [[rng.randint(-max_entry, max_entry) for _ in range(cols)] for _ in range(rows)]


def structured_entries(rng: random.Random, rows: int, cols: int, max_entry: int) -> list:
    """A structured payload: zero, padded identity, or a random diagonal."""
    shape = rng.choice(["zero", "identity", "diagonal"])
    table = [[0] * cols for _ in range(rows)]
    if shape == "zero":
        return table
    for i in range(min(rows, cols)):
        table[i][i] = 1 if shape == "identity" else rng.randint(-max_entry, max_entry)
    return table


def unimodular_entries(rng: random.Random, n: int, max_entry: int, ops: int = 6) -> list:
    """A small random unimodular matrix, built from elementary operations."""
    table = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n == 0:
        return table
    for _ in range(ops):
        kind = rng.choice(["shear", "swap", "negate"])
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == "shear" and i != j:
            q = rng.randint(-max_entry, max_entry)
            for k in range(n):
                table[i][k] += q * table[j][k]
        elif kind == "swap":
            table[i], table[j] = table[j], table[i]
        elif kind == "negate":
            table[i] = [-x for x in table[i]]
    return table


def sample_object(instance, cfg: SamplerConfig, index) -> Obj:
    return get_instance(instance).sample_object(cfg, index)


def sample_morphism(instance, dom: Obj, cod: Obj, cfg: SamplerConfig, index) -> Mor:
    return get_instance(instance).sample_morphism(dom, cod, cfg, index)


def sample_iso(instance, x: Obj, cfg: SamplerConfig, index) -> Mor:
    return get_instance(instance).sample_iso(x, cfg, index)


def sample_exact_pair(instance, cfg: SamplerConfig, index):
    """A genuine kernel-cokernel pair.

    Sample a morphism ``g0``, take ``f`` to be its kernel inclusion, then
    replace ``g0`` by the cokernel projection of ``f``; the result passes the
    pair recognizer by construction.
    """
    from ..category import cokernel, kernel
    from ..engine.verdicts import ExactPair

    inst: Instance = get_instance(instance)
    y = inst.sample_object(cfg, ("pair-mid", index))
    w = inst.sample_object(cfg, ("pair-out", index))
    g0 = inst.sample_morphism(y, w, cfg, ("pair-seed", index))
    f = kernel(g0).inclusion
    g = cokernel(f).projection
    return ExactPair(f=f, g=g)
