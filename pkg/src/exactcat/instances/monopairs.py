"""Pairs of a rational vector space with a distinguished subspace.

Objects are ``(U <= Q^n)`` with ``U`` stored as a canonical column basis
(transposed reduced row echelon form); morphisms are ambient linear maps
required to carry the domain's subspace into the codomain's.  Kernels take
the ambient kernel with the induced subspace; the cokernel of ``f`` is the
ambient quotient by the image, distinguished subspace the image of the
codomain's.  The instance is quasi-abelian but not abelian: the ambient
identity ``(0 <= Q) -> (Q <= Q)`` is mono and epi without being invertible.

The "every kernel/cokernel is semi-stable" rules are shipped as a documented
hypothesis (the instance is a torsion-free-style class inside an abelian
category, hence expected quasi-abelian); the engine can downgrade them to
probe-only.
"""

from __future__ import annotations

from typing import Optional, Sequence

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

Equation = tuple  # (P, Q, R) meaning P * X * Q == R for the unknown payload X


class MonoPairsQ(Instance):
    name = "MonoPairsQ"
    ring = "Q"

    def object(self, dim: int, sub=None) -> Obj:
        if sub is None:
            sub = RatMatrix.zero(dim, 0)
        elif not isinstance(sub, RatMatrix):
            sub = RatMatrix.from_rows(sub, cols=None if sub else 0)
        if sub.rows != dim:
            raise ConstraintError("sub basis must have one row per ambient dimension")
        return Obj(self.name, dim, rational.canonical_subspace_basis(sub))

    def zero_object(self) -> Obj:
        return Obj(self.name, 0, RatMatrix.zero(0, 0))

    def validate_object(self, x: Obj) -> None:
        if x.category != self.name or not isinstance(x.sub, RatMatrix):
            raise ConstraintError("MonoPairsQ objects need a subspace basis")
        if x.sub.rows != x.dim or x.sub.cols > x.dim:
            raise ConstraintError("sub basis shape does not match the ambient dimension")
        if rational.canonical_subspace_basis(x.sub) != x.sub:
            raise ConstraintError("sub basis is not in canonical form")

    def validate_morphism(self, f: Mor) -> None:
        image_of_sub = f.matrix * f.dom.sub
        if not rational.subspace_contains(f.cod.sub, image_of_sub):
            raise ConstraintError(
                "matrix does not map the domain subspace into the codomain subspace"
            )

    def direct_sum(self, x: Obj, y: Obj) -> Obj:
        return Obj(self.name, x.dim + y.dim, rational.block_diag(x.sub, y.sub))

    def kernel(self, f: Mor) -> KernelData:
        ambient = rational.kernel_basis(f.matrix)
        d = ambient.cols
        # Coordinates x with ambient * x inside the domain's subspace.
        paired = rational.kernel_basis(ambient.hstack(-f.dom.sub))
        sub = rational.canonical_subspace_basis(paired.take_rows(range(d)))
        obj = Obj(self.name, d, sub)
        return KernelData(obj=obj, inclusion=self.morphism(obj, f.dom, ambient), of=f)

    def cokernel(self, f: Mor) -> CokernelData:
        _, proj = rational.column_space_complement(f.matrix)
        sub = rational.canonical_subspace_basis(proj * f.cod.sub)
        obj = Obj(self.name, proj.rows, sub)
        return CokernelData(obj=obj, projection=self.morphism(f.cod, obj, proj), of=f)

    def payload_solve(self, a: RatMatrix, b: RatMatrix) -> Optional[RatMatrix]:
        solved = rational.solve_right(a, b)
        return None if solved is None else solved[0]

    def payload_kernel(self, a: RatMatrix) -> RatMatrix:
        return rational.kernel_basis(a)

    # -- constrained morphism search ---------------------------------------
    def legal_morphism_space(
        self, dom: Obj, cod: Obj, eqs: Sequence[Equation] = ()
    ) -> tuple[Optional[RatMatrix], RatMatrix]:
        """Affine space of legal payloads ``dom -> cod`` meeting extra equations.

        Returns ``(X0, N)``: a particular payload and a basis of the
        homogeneous solutions in vec coordinates, or ``(None, N)`` when the
        equations are inconsistent.  The subspace-preservation constraint is
        always included.
        """
        size = cod.dim * dom.dim
        _, cod_complement = rational.column_space_complement(cod.sub)
        system = []
        rhs = []
        if cod_complement.rows and dom.sub.cols:
            system.append(rational.kron(dom.sub.transpose(), cod_complement))
            rhs.append(RatMatrix.zero(system[-1].rows, 1))
        for p, q, r in eqs:
            system.append(rational.kron(q.transpose(), p))
            rhs.append(rational.vec(r))
        if not system:
            return RatMatrix.zero(cod.dim, dom.dim), RatMatrix.identity(size)
        a = system[0]
        b = rhs[0]
        for block, block_rhs in zip(system[1:], rhs[1:]):
            a = a.vstack(block)
            b = b.vstack(block_rhs)
        solved = rational.solve_right(a, b)
        if solved is None:
            return None, rational.kernel_basis(a)
        x0, n = solved
        return rational.unvec(x0, cod.dim, dom.dim), n

    def section(self, g: Mor) -> Optional[Mor]:
        eye = RatMatrix.identity(g.cod.dim)
        x0, _ = self.legal_morphism_space(g.cod, g.dom, [(g.matrix, eye, eye)])
        return None if x0 is None else Mor(g.cod, g.dom, x0)

    def retraction(self, f: Mor) -> Optional[Mor]:
        eye = RatMatrix.identity(f.dom.dim)
        x0, _ = self.legal_morphism_space(f.cod, f.dom, [(eye, f.matrix, eye)])
        return None if x0 is None else Mor(f.cod, f.dom, x0)

    def semistable_kernel_rule(self, f: Mor) -> Optional[InstanceRule]:
        return InstanceRule("instance-rule", hypothesis=True)

    def semistable_cokernel_rule(self, g: Mor) -> Optional[InstanceRule]:
        return InstanceRule("instance-rule", hypothesis=True)

    # -- sampling -----------------------------------------------------------
    def sample_object(self, cfg: sampling.SamplerConfig, index) -> Obj:
        rng = child_rng(cfg.seed, self.name, "obj", index)
        n = rng.randint(0, cfg.max_dim)
        k = rng.randint(0, n)
        raw = RatMatrix(n, k, sampling.random_entries(rng, n, k, cfg.max_entry))
        return Obj(self.name, n, rational.canonical_subspace_basis(raw))

    def sample_morphism(self, dom: Obj, cod: Obj, cfg: sampling.SamplerConfig, index) -> Mor:
        rng = child_rng(cfg.seed, self.name, "mor", index)
        if rng.random() < sampling.STRUCTURED_FRACTION:
            if rng.random() < 0.5:
                return self.zero_morphism(dom, cod)
            if dom.dim == cod.dim and rational.subspace_contains(cod.sub, dom.sub):
                return self.identity(dom) if dom == cod else Mor(dom, cod, RatMatrix.identity(dom.dim))
        # Draw from the solution space of the subspace-preservation constraints.
        _, basis = self.legal_morphism_space(dom, cod)
        coeffs = RatMatrix(
            basis.cols, 1, ([rng.randint(-cfg.max_entry, cfg.max_entry)] for _ in range(basis.cols))
        )
        return Mor(dom, cod, rational.unvec(basis * coeffs, cod.dim, dom.dim))

    def sample_iso(self, x: Obj, cfg: sampling.SamplerConfig, index) -> Mor:
        rng = child_rng(cfg.seed, self.name, "iso", index)
        k = x.sub.cols
        full = x.sub.hstack(rational.complement_columns(x.sub))
        upper = RatMatrix.from_rows(
            sampling.unimodular_entries(rng, k, cfg.max_entry), cols=k
        )
        lower = RatMatrix.from_rows(
            sampling.unimodular_entries(rng, x.dim - k, cfg.max_entry), cols=x.dim - k
        )
        mixing = RatMatrix(k, x.dim - k, sampling.random_entries(rng, k, x.dim - k, cfg.max_entry))
        block = upper.hstack(mixing).vstack(RatMatrix.zero(x.dim - k, k).hstack(lower))
        payload = full * block * rational.invert(full)
        return self.morphism(x, x, payload)

    def canonical_probe_morphisms(self, cfg: sampling.SamplerConfig) -> list:
        line = self.object(1, [[1]])
        bare = self.object(1)
        out = [self.morphism(bare, line, [[1]])]
        if cfg.max_dim >= 2:
            plane_line = self.object(2, [[1], [0]])
            plane_bare = self.object(2)
            plane_full = self.object(2, [[1, 0], [0, 1]])
            out.append(self.morphism(plane_bare, plane_line, RatMatrix.identity(2)))
            out.append(self.morphism(plane_line, plane_full, RatMatrix.identity(2)))
        return out


MONOPAIRSQ = register_instance(MonoPairsQ())


def monopairsq() -> MonoPairsQ:
    """The subspace-pair instance (quasi-abelian hypothesis, non-abelian)."""
    return MONOPAIRSQ
