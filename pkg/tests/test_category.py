"""Generic construction tests: frozen examples plus sampled law checks."""

import pytest

from exactcat import category as cat
from exactcat.core import DomainMismatchError, FactorizationError, MediatorError
from exactcat.instances import (
    SamplerConfig,
    finvectq,
    latticez,
    monopairsq,
    sample_morphism,
    sample_object,
)
from exactcat.rational import RatMatrix

FV = finvectq()
LZ = latticez()
MP = monopairsq()
ALL = (FV, LZ, MP)
CFG = SamplerConfig(seed=7, max_dim=3, max_entry=3)


def fv_mor(rows, dom, cod):
    return FV.morphism(FV.object(dom), FV.object(cod), rows)


class TestCompose:
    def test_identity_neutral(self):
        f = fv_mor([[1, 1]], 2, 1)
        assert cat.compose(cat.identity(f.dom), f) == f
        assert cat.compose(f, cat.identity(f.cod)) == f

    def test_matrix_product(self):
        f = fv_mor([[1, 1]], 2, 1)
        g = fv_mor([[2]], 1, 1)
        assert cat.compose(f, g).matrix == RatMatrix.from_rows([[2, 2]])

    def test_integer_product(self):
        one = LZ.object(1)
        assert cat.compose(
            LZ.morphism(one, one, [[2]]), LZ.morphism(one, one, [[3]])
        ).matrix.entries() == ((6,),)

    def test_domain_mismatch(self):
        f = fv_mor([[1, 1]], 2, 1)
        with pytest.raises(DomainMismatchError):
            cat.compose(f, f)


class TestBiproduct:
    @pytest.mark.parametrize("inst", ALL, ids=lambda i: i.name)
    def test_laws_on_samples(self, inst):
        for i in range(12):
            x = sample_object(inst, CFG, ("bp-x", i))
            y = sample_object(inst, CFG, ("bp-y", i))
            bp = cat.biproduct(x, y)
            assert cat.compose(bp.inj_left, bp.proj_left) == cat.identity(x)
            assert cat.compose(bp.inj_right, bp.proj_right) == cat.identity(y)
            assert cat.compose(bp.inj_left, bp.proj_right).is_zero()
            assert cat.compose(bp.inj_right, bp.proj_left).is_zero()
            total = cat.add(
                cat.compose(bp.proj_left, bp.inj_left),
                cat.compose(bp.proj_right, bp.inj_right),
            )
            assert total == cat.identity(bp.obj)

    def test_monopairs_example(self):
        bare = MP.object(1)
        line = MP.object(1, [[1]])
        bp = cat.biproduct(bare, line)
        assert bp.obj.dim == 2
        assert bp.obj.sub == RatMatrix.from_rows([[0], [1]])


class TestKernelCokernel:
    def test_finvect_kernel(self):
        kd = cat.kernel(fv_mor([[1, 1]], 2, 1))
        assert kd.obj.dim == 1
        assert kd.inclusion.matrix == RatMatrix.from_rows([[-1], [1]])

    def test_identity_kernel_is_zero(self):
        kd = cat.kernel(cat.identity(FV.object(2)))
        assert kd.obj.dim == 0

    def test_lattice_injective(self):
        one = LZ.object(1)
        assert cat.kernel(LZ.morphism(one, one, [[2]])).obj.dim == 0

    def test_finvect_cokernel(self):
        cd = cat.cokernel(fv_mor([[1], [2]], 1, 2))
        assert cd.obj.dim == 1
        assert cat.compose(cd.of, cd.projection).is_zero()

    def test_surjective_cokernel_zero(self):
        cd = cat.cokernel(fv_mor([[1, 0], [0, 1]], 2, 2))
        assert cd.obj.dim == 0

    def test_lattice_torsion_quotient(self):
        one = LZ.object(1)
        assert cat.cokernel(LZ.morphism(one, one, [[2]])).obj.dim == 0

    def test_lattice_kernel_primitive(self):
        f = LZ.morphism(LZ.object(2), LZ.object(1), [[2, -3]])
        kd = cat.kernel(f)
        assert kd.obj.dim == 1
        assert kd.inclusion.matrix.entries() == ((3,), (2,))


class TestFactorizations:
    def test_factor_kernel_identity(self):
        kd = cat.kernel(fv_mor([[1, 1]], 2, 1))
        u = cat.factor_through_kernel(kd, kd.inclusion)
        assert u == cat.identity(kd.obj)

    def test_factor_kernel_example(self):
        kd = cat.kernel(fv_mor([[1, 1]], 2, 1))
        h = fv_mor([[2], [-2]], 1, 2)
        u = cat.factor_through_kernel(kd, h)
        assert cat.compose(u, kd.inclusion) == h
        assert u.matrix.entries() == ((-2,),)

    def test_factor_kernel_rejects_nonzero_composite(self):
        kd = cat.kernel(fv_mor([[1, 1]], 2, 1))
        h = fv_mor([[1], [0]], 1, 2)
        with pytest.raises(FactorizationError):
            cat.factor_through_kernel(kd, h)

    def test_factor_cokernel_identity(self):
        cd = cat.cokernel(fv_mor([[1], [2]], 1, 2))
        u = cat.factor_through_cokernel(cd, cd.projection)
        assert u == cat.identity(cd.obj)

    def test_factor_cokernel_example(self):
        cd = cat.cokernel(fv_mor([[1], [2]], 1, 2))
        h = fv_mor([[4, -2]], 2, 1)
        u = cat.factor_through_cokernel(cd, h)
        assert cat.compose(cd.projection, u) == h

    def test_factor_cokernel_rejects_nonzero_composite(self):
        cd = cat.cokernel(fv_mor([[1], [2]], 1, 2))
        with pytest.raises(FactorizationError):
            cat.factor_through_cokernel(cd, fv_mor([[1, 0]], 2, 1))


class TestPullbackPushout:
    def test_pullback_along_iso(self):
        # cospan with g invertible: p_T is an isomorphism onto dom(t)
        g = fv_mor([[2]], 1, 1)
        t = fv_mor([[1, 1]], 2, 1)
        sq = cat.pullback(g, t)
        assert cat.is_iso(sq.p_T)
        assert sq.obj.dim == t.dom.dim

    def test_finvect_pullback_example(self):
        g = fv_mor([[1, 1]], 2, 1)
        sq = cat.pullback(g, cat.identity(FV.object(1)))
        assert sq.obj.dim == 2
        assert cat.compose(sq.p_Y, g) == cat.compose(sq.p_T, sq.t)

    def test_lattice_pullback_example(self):
        one = LZ.object(1)
        sq = cat.pullback(LZ.morphism(one, one, [[2]]), LZ.morphism(one, one, [[3]]))
        assert sq.obj.dim == 1
        assert sq.p_Y.matrix.entries() == ((3,),)
        assert sq.p_T.matrix.entries() == ((2,),)

    def test_pushout_along_iso(self):
        # span with f invertible: s_T is an isomorphism from cod(t)
        f = cat.identity(FV.object(1))
        t = fv_mor([[1], [0]], 1, 2)
        sq = cat.pushout(f, t)
        assert cat.is_iso(sq.s_T)
        assert sq.obj.dim == t.cod.dim

    def test_lattice_pushout_example(self):
        f = LZ.morphism(LZ.object(1), LZ.object(2), [[1], [0]])
        t = LZ.morphism(LZ.object(1), LZ.object(1), [[2]])
        sq = cat.pushout(f, t)
        assert sq.obj.dim == 2
        # s_T is a pure mono: its cokernel object has rank 1
        assert cat.classify(sq.s_T).is_kernel

    def test_mediator_identity_cone(self):
        g = fv_mor([[1, 1]], 2, 1)
        sq = cat.pullback(g, cat.identity(FV.object(1)))
        m = cat.pullback_mediate(sq, sq.p_Y, sq.p_T)
        assert m == cat.identity(sq.obj)

    def test_mediator_zero_cone(self):
        g = fv_mor([[1, 1]], 2, 1)
        sq = cat.pullback(g, cat.identity(FV.object(1)))
        one = FV.object(1)
        m = cat.pullback_mediate(
            sq, FV.zero_morphism(one, sq.g.dom), FV.zero_morphism(one, sq.t.dom)
        )
        assert m.is_zero()

    def test_mediator_rejects_noncommuting_cone(self):
        g = fv_mor([[1, 0]], 2, 1)
        sq = cat.pullback(g, cat.identity(FV.object(1)))
        one = FV.object(1)
        with pytest.raises(MediatorError):
            cat.pullback_mediate(
                sq, fv_mor([[1], [0]], 1, 2), fv_mor([[5]], 1, 1)
            )

    def test_pushout_mediator_identity_cocone(self):
        f = fv_mor([[1], [0]], 1, 2)
        sq = cat.pushout(f, cat.identity(FV.object(1)))
        m = cat.pushout_mediate(sq, sq.s_Y, sq.s_T)
        assert m == cat.identity(sq.obj)

    @pytest.mark.parametrize("inst", ALL, ids=lambda i: i.name)
    def test_mediators_reproduce_arbitrary_cones(self, inst):
        # A random map v into the pullback yields a commuting cone whose
        # mediator must be v itself (uniqueness); dually for pushouts.
        for i in range(10):
            y = sample_object(inst, CFG, ("med-y", i))
            z = sample_object(inst, CFG, ("med-z", i))
            t_obj = sample_object(inst, CFG, ("med-t", i))
            g = sample_morphism(inst, y, z, CFG, ("med-g", i))
            t = sample_morphism(inst, t_obj, z, CFG, ("med-tm", i))
            sq = cat.pullback(g, t)
            l_obj = sample_object(inst, CFG, ("med-l", i))
            v = sample_morphism(inst, l_obj, sq.obj, CFG, ("med-v", i))
            m = cat.pullback_mediate(sq, cat.compose(v, sq.p_Y), cat.compose(v, sq.p_T))
            assert m == v
            x = sample_object(inst, CFG, ("med-x", i))
            f = sample_morphism(inst, x, y, CFG, ("med-f", i))
            u = sample_morphism(inst, x, t_obj, CFG, ("med-u", i))
            po = cat.pushout(f, u)
            w = sample_morphism(inst, po.obj, l_obj, CFG, ("med-w", i))
            m2 = cat.pushout_mediate(po, cat.compose(po.s_Y, w), cat.compose(po.s_T, w))
            assert m2 == w


class TestStrictness:
    def test_identity_strict(self):
        sf = cat.induced_strict_map(cat.identity(FV.object(2)))
        assert cat.is_iso(sf.induced)

    def test_lattice_two_not_strict(self):
        one = LZ.object(1)
        sf = cat.induced_strict_map(LZ.morphism(one, one, [[2]]))
        assert sf.induced.matrix.entries() == ((2,),)
        assert not cat.is_iso(sf.induced)

    def test_finvect_always_strict(self):
        sf = cat.induced_strict_map(fv_mor([[1, 1]], 2, 1))
        assert cat.is_iso(sf.induced)

    @pytest.mark.parametrize("inst", ALL, ids=lambda i: i.name)
    def test_factorization_recomposes(self, inst):
        for i in range(15):
            x = sample_object(inst, CFG, ("st-x", i))
            y = sample_object(inst, CFG, ("st-y", i))
            f = sample_morphism(inst, x, y, CFG, ("st-f", i))
            sf = cat.induced_strict_map(f)
            back = cat.compose(cat.compose(sf.coim_projection, sf.induced), sf.image_inclusion)
            assert back == f


class TestClassify:
    def test_identity_all_true(self):
        prof = cat.classify(cat.identity(FV.object(2)))
        assert all(prof.as_dict().values())

    def test_lattice_two(self):
        one = LZ.object(1)
        prof = cat.classify(LZ.morphism(one, one, [[2]]))
        assert prof.as_dict() == {
            "mono": True,
            "epi": True,
            "iso": False,
            "is_kernel": False,
            "is_cokernel": False,
            "strict": False,
        }

    def test_monopairs_witness(self):
        h = MP.morphism(MP.object(1), MP.object(1, [[1]]), [[1]])
        prof = cat.classify(h)
        assert prof.mono and prof.epi and not prof.iso and not prof.strict

    @pytest.mark.parametrize("inst", ALL, ids=lambda i: i.name)
    def test_consistency_invariants(self, inst):
        for i in range(25):
            x = sample_object(inst, CFG, ("cl-x", i))
            y = sample_object(inst, CFG, ("cl-y", i))
            f = sample_morphism(inst, x, y, CFG, ("cl-f", i))
            p = cat.classify(f)
            if p.iso:
                assert p.mono and p.epi and p.is_kernel and p.is_cokernel and p.strict
            if p.is_kernel:
                assert p.mono
            if p.is_cokernel:
                assert p.epi
            if p.strict and p.mono:
                assert p.is_kernel
            if p.strict and p.epi:
                assert p.is_cokernel


class TestTransports:
    def test_kernel_transport_iso_case(self):
        g = fv_mor([[2]], 1, 1)
        sq, j = cat.kernel_transport(g, fv_mor([[3]], 1, 1))
        assert j.dom.dim == 0
        assert cat.kernel(sq.p_T).obj.dim == 0

    def test_kernel_transport_zero_t(self):
        g = fv_mor([[1, 1]], 2, 1)
        t = FV.zero_morphism(FV.object(1), FV.object(1))
        sq, j = cat.kernel_transport(g, t)
        assert sq.obj.dim == 2  # ker g + Q
        assert cat.compose(j, sq.p_Y) == cat.kernel(g).inclusion
        assert cat.compose(j, sq.p_T).is_zero()
        assert cat.is_kernel_of(j, sq.p_T)

    def test_lattice_kernel_transport(self):
        one = LZ.object(1)
        g = LZ.morphism(one, one, [[2]])
        sq, j = cat.kernel_transport(g, LZ.morphism(one, one, [[3]]))
        assert j.dom.dim == 0
        assert cat.kernel(sq.p_T).obj.dim == 0

    def test_cokernel_transport_iso_case(self):
        f = fv_mor([[2]], 1, 1)
        sq, c = cat.cokernel_transport(f, fv_mor([[3]], 1, 1))
        assert c.cod.dim == 0
        assert cat.is_iso(sq.s_T)

    def test_cokernel_transport_zero_t(self):
        f = fv_mor([[1], [2]], 1, 2)
        t = FV.zero_morphism(FV.object(1), FV.object(1))
        sq, c = cat.cokernel_transport(f, t)
        assert cat.compose(sq.s_Y, c) == cat.cokernel(f).projection
        assert cat.compose(sq.s_T, c).is_zero()
        assert cat.is_cokernel_of(c, sq.s_T)

    def test_lattice_cokernel_transport(self):
        f = LZ.morphism(LZ.object(1), LZ.object(2), [[1], [0]])
        t = LZ.morphism(LZ.object(1), LZ.object(1), [[2]])
        sq, c = cat.cokernel_transport(f, t)
        assert cat.compose(sq.s_T, c).is_zero()
        assert cat.is_cokernel_of(c, sq.s_T)

    @pytest.mark.parametrize("inst", ALL, ids=lambda i: i.name)
    def test_transports_on_samples(self, inst):
        for i in range(10):
            y = sample_object(inst, CFG, ("tr-y", i))
            z = sample_object(inst, CFG, ("tr-z", i))
            t_obj = sample_object(inst, CFG, ("tr-t", i))
            g = sample_morphism(inst, y, z, CFG, ("tr-g", i))
            t = sample_morphism(inst, t_obj, z, CFG, ("tr-tm", i))
            sq, j = cat.kernel_transport(g, t)
            assert cat.compose(j, sq.p_Y) == cat.kernel(g).inclusion
            assert cat.compose(j, sq.p_T).is_zero()
            assert cat.is_kernel_of(j, sq.p_T)
            x = sample_object(inst, CFG, ("tr-x", i))
            f = sample_morphism(inst, x, y, CFG, ("tr-f", i))
            u = sample_morphism(inst, x, t_obj, CFG, ("tr-u", i))
            po, c = cat.cokernel_transport(f, u)
            assert cat.compose(po.s_Y, c) == cat.cokernel(f).projection
            assert cat.compose(po.s_T, c).is_zero()
            assert cat.is_cokernel_of(c, po.s_T)


class TestPasting:
    @pytest.mark.parametrize("inst", ALL, ids=lambda i: i.name)
    def test_left_square_pullback_iff_outer_is(self, inst):
        # Build the right square as a pullback, then paste a second pullback
        # on the left: the outer rectangle must verify as a pullback, and the
        # mediator comparison must certify the left square from the outer one.
        for i in range(8):
            y2 = sample_object(inst, CFG, ("pa-y2", i))
            z2 = sample_object(inst, CFG, ("pa-z2", i))
            z1 = sample_object(inst, CFG, ("pa-z1", i))
            gp = sample_morphism(inst, y2, z2, CFG, ("pa-g", i))
            c = sample_morphism(inst, z1, z2, CFG, ("pa-c", i))
            right = cat.pullback(gp, c)
            x2 = sample_object(inst, CFG, ("pa-x2", i))
            fp = sample_morphism(inst, x2, y2, CFG, ("pa-f", i))
            left = cat.pullback(fp, right.p_Y)
            # outer rectangle legs: left.obj -> x2 -> z? compose along the top
            outer_g = cat.compose(fp, gp)
            assert cat.is_pullback_square(
                outer_g, c, left.p_Y, cat.compose(left.p_T, right.p_T)
            )

    @pytest.mark.parametrize("inst", ALL, ids=lambda i: i.name)
    def test_outer_pullback_forces_left(self, inst):
        for i in range(8):
            y2 = sample_object(inst, CFG, ("pb-y2", i))
            z2 = sample_object(inst, CFG, ("pb-z2", i))
            z1 = sample_object(inst, CFG, ("pb-z1", i))
            gp = sample_morphism(inst, y2, z2, CFG, ("pb-g", i))
            c = sample_morphism(inst, z1, z2, CFG, ("pb-c", i))
            right = cat.pullback(gp, c)
            x2 = sample_object(inst, CFG, ("pb-x2", i))
            fp = sample_morphism(inst, x2, y2, CFG, ("pb-f", i))
            outer = cat.pullback(cat.compose(fp, gp), c)
            # the outer square factors through the right square
            mid = cat.pullback_mediate(
                right, cat.compose(outer.p_Y, fp), outer.p_T
            )
            assert cat.is_pullback_square(fp, right.p_Y, outer.p_Y, mid)


class TestDuality:
    def test_pushout_is_transposed_pullback_in_finvect(self):
        for i in range(10):
            x = sample_object(FV, CFG, ("du-x", i))
            y = sample_object(FV, CFG, ("du-y", i))
            t_obj = sample_object(FV, CFG, ("du-t", i))
            f = sample_morphism(FV, x, y, CFG, ("du-f", i))
            t = sample_morphism(FV, x, t_obj, CFG, ("du-tm", i))
            po = cat.pushout(f, t)
            fop = FV.morphism(y, x, f.matrix.transpose())
            top = FV.morphism(t_obj, x, t.matrix.transpose())
            pb = cat.pullback(fop, top)
            assert pb.obj.dim == po.obj.dim
            assert cat.is_pushout_square(
                f,
                t,
                FV.morphism(y, pb.obj, pb.p_Y.matrix.transpose()),
                FV.morphism(t_obj, pb.obj, pb.p_T.matrix.transpose()),
            )
