"""Finitely generated free integer lattices.

Objects are ranks, morphisms integer matrices.  Kernels are integer kernels
(automatically saturated); the cokernel of ``f: Z^m -> Z^n`` is the
torsion-free quotient of ``Z^n`` by the saturation of the image, presented as
a surjection onto a free lattice via the Smith form.  The instance is
quasi-abelian but not abelian: ``(2): Z -> Z`` is mono and epi yet not an
isomorphism.

Semi-stability rules: every kernel-cokernel pair here splits, because
cokernel projections are surjections onto free lattices and therefore admit
integral sections; thus kernels are coretractions and cokernels are
retractions, both semi-stable under pushout respectively pullback.
"""

from __future__ import annotations

from typing import Optional

from .. import integral
from ..core import (
    CokernelData,
    ConstraintError,
    Instance,
    InstanceRule,
    KernelData,
    Mor,
    Obj,
    register_instance,
)
from ..integral import IntMatrix
from ..seeding import child_rng
from . import sampling


class LatticeZ(Instance):
    name = "LatticeZ"
    ring = "Z"

    def object(self, rank: int) -> Obj:
        obj = Obj(self.name, rank)
        self.validate_object(obj)
        return obj

    def zero_object(self) -> Obj:
        return Obj(self.name, 0)

    def validate_object(self, x: Obj) -> None:
        if x.category != self.name or x.sub is not None:
            raise ConstraintError("LatticeZ objects carry only a rank")

    def direct_sum(self, x: Obj, y: Obj) -> Obj:
        return Obj(self.name, x.dim + y.dim)

    def kernel(self, f: Mor) -> KernelData:
        basis = integral.kernel_basis(f.matrix)
        # Canonicalize the (pure) kernel lattice by its column Hermite form.
        if basis.cols:
            h, _ = integral.hnf(basis)
            basis = h.take_columns(range(basis.cols))
        obj = Obj(self.name, basis.cols)
        return KernelData(obj=obj, inclusion=Mor(obj, f.dom, basis), of=f)

    def cokernel(self, f: Mor) -> CokernelData:
        _, proj = integral.saturation_projection(f.matrix)
        obj = Obj(self.name, proj.rows)
        return CokernelData(obj=obj, projection=Mor(f.cod, obj, proj), of=f)

    def payload_solve(self, a: IntMatrix, b: IntMatrix) -> Optional[IntMatrix]:
        solved = integral.solve_right(a, b)
        return None if solved is None else solved[0]

    def payload_kernel(self, a: IntMatrix) -> IntMatrix:
        return integral.kernel_basis(a)

    def semistable_kernel_rule(self, f: Mor) -> Optional[InstanceRule]:
        return InstanceRule("instance-rule")

    def semistable_cokernel_rule(self, g: Mor) -> Optional[InstanceRule]:
        return InstanceRule("instance-rule")

    def sample_object(self, cfg: sampling.SamplerConfig, index) -> Obj:
        rng = child_rng(cfg.seed, self.name, "obj", index)
        return Obj(self.name, rng.randint(0, cfg.max_dim))

    def sample_morphism(self, dom: Obj, cod: Obj, cfg: sampling.SamplerConfig, index) -> Mor:
        rng = child_rng(cfg.seed, self.name, "mor", index)
        if rng.random() < sampling.STRUCTURED_FRACTION:
            data = sampling.structured_entries(rng, cod.dim, dom.dim, cfg.max_entry)
        else:
            data = sampling.random_entries(rng, cod.dim, dom.dim, cfg.max_entry)
        return self.morphism(dom, cod, data)

    def sample_iso(self, x: Obj, cfg: sampling.SamplerConfig, index) -> Mor:
        rng = child_rng(cfg.seed, self.name, "iso", index)
        return self.morphism(x, x, sampling.unimodular_entries(rng, x.dim, cfg.max_entry))

    def canonical_probe_morphisms(self, cfg: sampling.SamplerConfig) -> list:
        one = Obj(self.name, 1)
        return [self.morphism(one, one, [[k]]) for k in range(2, cfg.max_entry + 1)]


LATTICEZ = register_instance(LatticeZ())


def latticez() -> LatticeZ:
    """The free integer-lattice instance (quasi-abelian, non-abelian)."""
    return LATTICEZ
