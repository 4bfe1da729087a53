"""Finite-dimensional rational vector spaces.

The abelian control instance: objects are dimensions, morphisms rational
matrices, every morphism is strict, and every kernel-cokernel pair lands in
the maximal exact structure.  Kernels and cokernels are semi-stable because
pullbacks of epimorphisms (and pushouts of monomorphisms) stay epi (mono) in
an abelian category.
"""

from __future__ import annotations

from typing import Optional

from .. import rational
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
from ..rational import RatMatrix
from ..seeding import child_rng
from . import sampling


class FinVectQ(Instance):
    name = "FinVectQ"
    ring = "Q"

    def object(self, dim: int) -> Obj:
        obj = Obj(self.name, dim)
        self.validate_object(obj)
        return obj

    def zero_object(self) -> Obj:
        return Obj(self.name, 0)

    def validate_object(self, x: Obj) -> None:
        if x.category != self.name or x.sub is not None:
            raise ConstraintError("FinVectQ objects carry only a dimension")

    def direct_sum(self, x: Obj, y: Obj) -> Obj:
        return Obj(self.name, x.dim + y.dim)

    def kernel(self, f: Mor) -> KernelData:
        basis = rational.kernel_basis(f.matrix)
        obj = Obj(self.name, basis.cols)
        return KernelData(obj=obj, inclusion=Mor(obj, f.dom, basis), of=f)

    def cokernel(self, f: Mor) -> CokernelData:
        _, proj = rational.column_space_complement(f.matrix)
        obj = Obj(self.name, proj.rows)
        return CokernelData(obj=obj, projection=Mor(f.cod, obj, proj), of=f)

    def payload_solve(self, a: RatMatrix, b: RatMatrix) -> Optional[RatMatrix]:
        solved = rational.solve_right(a, b)
        return None if solved is None else solved[0]

    def payload_kernel(self, a: RatMatrix) -> RatMatrix:
        return rational.kernel_basis(a)

    def semistable_kernel_rule(self, f: Mor) -> Optional[InstanceRule]:
        return InstanceRule("abelian")

    def semistable_cokernel_rule(self, g: Mor) -> Optional[InstanceRule]:
        return InstanceRule("abelian")

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


FINVECTQ = register_instance(FinVectQ())


def finvectq() -> FinVectQ:
    """The rational vector-space instance (abelian control case)."""
    return FINVECTQ
