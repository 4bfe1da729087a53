"""Generic constructions over any registered instance.

These operations use only the primitives every instance provides (biproduct,
kernel, cokernel, exact solving), so they are valid in any additive category
with kernels and cokernels: composition, pullbacks and pushouts with their
mediators, the coimage-image factorization, morphism classification, and the
kernel/cokernel transports along pullback and pushout squares.
"""

from __future__ import annotations

from typing import Optional

from .core import (
    BiproductData,
    CokernelData,
    DomainMismatchError,
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


def compose(f: Mor, g: Mor) -> Mor:
    """Composite ``g . f`` (apply ``f`` first)."""
    if f.cod != g.dom:
        raise DomainMismatchError(f"cannot compose: cod {f.cod} != dom {g.dom}")
    return Mor(f.dom, g.cod, g.matrix * f.matrix)


def identity(x: Obj) -> Mor:
    return get_instance(x).identity(x)


def zero_morphism(dom: Obj, cod: Obj) -> Mor:
    return get_instance(dom).zero_morphism(dom, cod)


def add(f: Mor, g: Mor) -> Mor:
    if f.dom != g.dom or f.cod != g.cod:
        raise DomainMismatchError("morphism addition needs equal endpoints")
    return Mor(f.dom, f.cod, f.matrix + g.matrix)


def sub(f: Mor, g: Mor) -> Mor:
    if f.dom != g.dom or f.cod != g.cod:
        raise DomainMismatchError("morphism subtraction needs equal endpoints")
    return Mor(f.dom, f.cod, f.matrix - g.matrix)


def negate(f: Mor) -> Mor:
    return Mor(f.dom, f.cod, -f.matrix)


def biproduct(x: Obj, y: Obj) -> BiproductData:
    if x.category != y.category:
        raise DomainMismatchError("biproduct needs objects of the same instance")
    return get_instance(x).biproduct(x, y)


def kernel(f: Mor) -> KernelData:
    return get_instance(f).kernel(f)


def cokernel(f: Mor) -> CokernelData:
    return get_instance(f).cokernel(f)


def is_zero_object(x: Obj) -> bool:
    return get_instance(x).is_zero_object(x)


def factor_left(m: Mor, h: Mor) -> Mor:
    """The unique ``u`` with ``m . u = h`` (``m`` must be a monomorphism)."""
    if m.cod != h.cod:
        raise DomainMismatchError("factor_left: codomain mismatch")
    x = get_instance(m).payload_solve(m.matrix, h.matrix)
    if x is None:
        raise FactorizationError("no factorization through the given monomorphism")
    return get_instance(m).morphism(h.dom, m.dom, x)


def factor_right(e: Mor, h: Mor) -> Mor:
    """The unique ``u`` with ``u . e = h`` (``e`` must be an epimorphism)."""
    if e.dom != h.dom:
        raise DomainMismatchError("factor_right: domain mismatch")
    xt = get_instance(e).payload_solve(e.matrix.transpose(), h.matrix.transpose())
    if xt is None:
        raise FactorizationError("no factorization through the given epimorphism")
    return get_instance(e).morphism(e.cod, h.cod, xt.transpose())


def factor_through_kernel(kd: KernelData, h: Mor) -> Mor:
    """Factor ``h`` through the kernel inclusion: unique ``u`` with ``i . u = h``.

    Requires ``kd.of . h = 0``.
    """
    if h.cod != kd.of.dom:
        raise DomainMismatchError("factor_through_kernel: h must land in the kerneled domain")
    if not compose(h, kd.of).is_zero():
        raise FactorizationError("composite with the kerneled morphism is nonzero")
    return factor_left(kd.inclusion, h)


def factor_through_cokernel(cd: CokernelData, h: Mor) -> Mor:
    """Factor ``h`` through the cokernel projection: unique ``u`` with ``u . q = h``.

    Requires ``h . cd.of = 0``.
    """
    if h.dom != cd.of.cod:
        raise DomainMismatchError("factor_through_cokernel: h must start at the cokerneled codomain")
    if not compose(cd.of, h).is_zero():
        raise FactorizationError("composite with the cokerneled morphism is nonzero")
    return factor_right(cd.projection, h)


def pullback(g: Mor, t: Mor) -> PullbackSquare:
    """Pullback of the cospan ``(g, t)``.

    Built as the kernel of ``d = g . proj_Y - t . proj_T`` on the biproduct of
    the two domains.  The sign convention fixes ``d`` with ``g`` positive.
    """
    if g.cod != t.cod:
        raise DomainMismatchError("pullback needs a cospan: cod(g) must equal cod(t)")
    bp = biproduct(g.dom, t.dom)
    d = sub(compose(bp.proj_left, g), compose(bp.proj_right, t))
    kd = kernel(d)
    iota = kd.inclusion
    return PullbackSquare(
        g=g,
        t=t,
        obj=kd.obj,
        p_Y=compose(iota, bp.proj_left),
        p_T=compose(iota, bp.proj_right),
        biprod=bp,
        kernel=kd,
    )


def pushout(f: Mor, t: Mor) -> PushoutSquare:
    """Pushout of the span ``(f, t)``, dually a cokernel on the biproduct."""
    if f.dom != t.dom:
        raise DomainMismatchError("pushout needs a span: dom(f) must equal dom(t)")
    bp = biproduct(f.cod, t.cod)
    d = sub(compose(f, bp.inj_left), compose(t, bp.inj_right))
    cd = cokernel(d)
    q = cd.projection
    return PushoutSquare(
        f=f,
        t=t,
        obj=cd.obj,
        s_Y=compose(bp.inj_left, q),
        s_T=compose(bp.inj_right, q),
        biprod=bp,
        cokernel=cd,
    )


def pullback_mediate(sq: PullbackSquare, l_Y: Mor, l_T: Mor) -> Mor:
    """Mediator of a commuting test cone into the pullback."""
    if l_Y.dom != l_T.dom:
        raise DomainMismatchError("cone legs must share a domain")
    if compose(l_Y, sq.g) != compose(l_T, sq.t):
        raise MediatorError("test cone does not commute with the cospan")
    cone = add(compose(l_Y, sq.biprod.inj_left), compose(l_T, sq.biprod.inj_right))
    return factor_through_kernel(sq.kernel, cone)


def pushout_mediate(sq: PushoutSquare, l_Y: Mor, l_T: Mor) -> Mor:
    """Mediator out of the pushout for a commuting test cocone."""
    if l_Y.cod != l_T.cod:
        raise DomainMismatchError("cocone legs must share a codomain")
    if compose(sq.f, l_Y) != compose(sq.t, l_T):
        raise MediatorError("test cocone does not commute with the span")
    cocone = add(compose(sq.biprod.proj_left, l_Y), compose(sq.biprod.proj_right, l_T))
    return factor_through_cokernel(sq.cokernel, cocone)


def induced_strict_map(f: Mor) -> StrictFactorization:
    """Canonical factorization of ``f`` through its coimage and image.

    Returns the induced map from the cokernel of the kernel to the kernel of
    the cokernel together with the projection and inclusion legs, satisfying
    ``image_inclusion . induced . coim_projection == f`` exactly.
    """
    kd = kernel(f)
    coim = cokernel(kd.inclusion)
    through_coim = factor_through_cokernel(coim, f)
    cd = cokernel(f)
    im = kernel(cd.projection)
    induced = factor_through_kernel(im, through_coim)
    return StrictFactorization(
        of=f,
        induced=induced,
        coim_projection=coim.projection,
        image_inclusion=im.inclusion,
    )


def inverse(f: Mor) -> Optional[Mor]:
    return get_instance(f).inverse(f)


def is_iso(f: Mor) -> bool:
    return inverse(f) is not None


def classify(f: Mor) -> MorphismProfile:
    """Six-way profile of a morphism.

    mono/epi are zero-kernel/zero-cokernel tests; the kernel and cokernel
    recognizers are the canonical-comparison tests (factor through the kernel
    of the cokernel, respectively out of the cokernel of the kernel, and
    check the comparison is an isomorphism); strictness asks the same of the
    induced coimage-to-image map.
    """
    kd = kernel(f)
    cd = cokernel(f)
    mono = is_zero_object(kd.obj)
    epi = is_zero_object(cd.obj)
    iso = is_iso(f)
    im = kernel(cd.projection)
    to_image = factor_through_kernel(im, f)
    coim = cokernel(kd.inclusion)
    from_coimage = factor_through_cokernel(coim, f)
    induced = factor_through_kernel(im, from_coimage)
    return MorphismProfile(
        mono=mono,
        epi=epi,
        iso=iso,
        is_kernel=is_iso(to_image),
        is_cokernel=is_iso(from_coimage),
        strict=is_iso(induced),
    )


def kernel_transport(g: Mor, t: Mor) -> tuple[PullbackSquare, Mor]:
    """Transport the kernel of ``g`` across the pullback with ``t``.

    Returns the pullback square and the morphism ``j`` from the kernel of
    ``g`` into the pullback object with ``p_Y . j = i_g`` and ``p_T . j = 0``;
    ``j`` is a kernel of ``p_T``.
    """
    sq = pullback(g, t)
    kd = kernel(g)
    j = pullback_mediate(sq, kd.inclusion, zero_morphism(kd.obj, t.dom))
    return sq, j


def cokernel_transport(f: Mor, t: Mor) -> tuple[PushoutSquare, Mor]:
    """Dual transport: ``c`` from the pushout object onto the cokernel of ``f``
    with ``c . s_Y = q_f`` and ``c . s_T = 0``; ``c`` is a cokernel of ``s_T``.
    """
    sq = pushout(f, t)
    cd = cokernel(f)
    c = pushout_mediate(sq, cd.projection, zero_morphism(t.cod, cd.obj))
    return sq, c


def same_subobject(m1: Mor, m2: Mor) -> bool:
    """Whether two monomorphisms into the same object have equal images."""
    if m1.cod != m2.cod:
        return False
    inst = get_instance(m1)
    u = inst.payload_solve(m1.matrix, m2.matrix)
    v = inst.payload_solve(m2.matrix, m1.matrix)
    if u is None or v is None:
        return False
    return (
        u * v == inst.payload_identity(m1.dom.dim)
        and v * u == inst.payload_identity(m2.dom.dim)
    )


def same_quotient(e1: Mor, e2: Mor) -> bool:
    """Whether two epimorphisms out of the same object present equal quotients."""
    if e1.dom != e2.dom:
        return False
    inst = get_instance(e1)
    u = inst.payload_solve(e1.matrix.transpose(), e2.matrix.transpose())
    v = inst.payload_solve(e2.matrix.transpose(), e1.matrix.transpose())
    if u is None or v is None:
        return False
    return (
        u.transpose() * v.transpose() == inst.payload_identity(e2.cod.dim)
        and v.transpose() * u.transpose() == inst.payload_identity(e1.cod.dim)
    )


def is_kernel_of(j: Mor, h: Mor) -> bool:
    """Whether ``j`` is a kernel of ``h``."""
    if j.cod != h.dom:
        return False
    if not compose(j, h).is_zero():
        return False
    return same_subobject(j, kernel(h).inclusion)


def is_cokernel_of(c: Mor, h: Mor) -> bool:
    """Whether ``c`` is a cokernel of ``h``."""
    if c.dom != h.cod:
        return False
    if not compose(h, c).is_zero():
        return False
    return same_quotient(c, cokernel(h).projection)


def is_pullback_square(g: Mor, t: Mor, p_Y: Mor, p_T: Mor) -> bool:
    """Whether the given corner is a pullback of ``(g, t)``.

    Checked by comparison with the canonical pullback: the mediator of the
    corner's cone must be an isomorphism.
    """
    if p_Y.dom != p_T.dom:
        return False
    if compose(p_Y, g) != compose(p_T, t):
        return False
    canonical = pullback(g, t)
    try:
        m = pullback_mediate(canonical, p_Y, p_T)
    except FactorizationError:
        return False
    return is_iso(m)


def is_pushout_square(f: Mor, t: Mor, s_Y: Mor, s_T: Mor) -> bool:
    """Dual comparison test for pushout squares."""
    if s_Y.cod != s_T.cod:
        return False
    if compose(f, s_Y) != compose(t, s_T):
        return False
    canonical = pushout(f, t)
    try:
        m = pushout_mediate(canonical, s_Y, s_T)
    except FactorizationError:
        return False
    return is_iso(m)
