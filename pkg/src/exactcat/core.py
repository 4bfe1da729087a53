"""Core types for additive categories with kernels and cokernels.

Objects and morphisms are immutable descriptors tagged with the instance
(concrete category) they belong to.  An :class:`Instance` supplies the
handful of primitives every concrete category must provide: biproducts,
kernels, cokernels and an exact linear solver over its coefficient ring.
Everything else (pullbacks, pushouts, mediators, classification) is derived
generically in :mod:`exactcat.category`.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .integral import IntMatrix
from .rational import RatMatrix

Payload = Union[RatMatrix, IntMatrix]


class ExactCatError(Exception):
    """Base class for all domain errors."""


class DomainMismatchError(ExactCatError):
    """Raised when morphisms are composed or compared across wrong endpoints."""


class ConstraintError(ExactCatError):
    """Raised when an object or morphism violates its instance's invariants."""


class FactorizationError(ExactCatError):
    """Raised when a required universal factorization does not exist."""


class MediatorError(FactorizationError):
    """Raised when a test (co)cone does not commute, so no mediator exists."""


@dataclass(frozen=True)
class Obj:
    """Instance-tagged object descriptor.

    ``dim`` is the vector-space dimension, lattice rank, or ambient dimension
    depending on the instance; ``sub`` is the canonical column basis of the
    distinguished subspace for instances that carry one.
    """

    category: str
    dim: int
    sub: Optional[RatMatrix] = None

    def __post_init__(self):
        if self.dim < 0:
            raise ConstraintError("object dimension must be nonnegative")


@dataclass(frozen=True)
class Mor:
    """Morphism with explicit endpoints and an exact matrix payload.

    The payload has shape ``cod.dim x dom.dim`` (matrices act on column
    vectors).
    """

    dom: Obj
    cod: Obj
    matrix: Payload

    def __post_init__(self):
        if self.dom.category != self.cod.category:
            raise DomainMismatchError("morphism endpoints belong to different instances")
        if self.matrix.rows != self.cod.dim or self.matrix.cols != self.dom.dim:
            raise ConstraintError(
                f"payload shape {self.matrix.rows}x{self.matrix.cols} does not match "
                f"cod x dom = {self.cod.dim}x{self.dom.dim}"
            )

    @property
    def category(self) -> str:
        return self.dom.category

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def is_endo(self) -> bool:
        return self.dom == self.cod


@dataclass(frozen=True)
class BiproductData:
    obj: Obj
    inj_left: Mor
    inj_right: Mor
    proj_left: Mor
    proj_right: Mor


@dataclass(frozen=True)
class KernelData:
    """A kernel: ``inclusion`` maps the kernel object into ``of.dom``."""

    obj: Obj
    inclusion: Mor
    of: Mor


@dataclass(frozen=True)
class CokernelData:
    """A cokernel: ``projection`` maps ``of.cod`` onto the cokernel object."""

    obj: Obj
    projection: Mor
    of: Mor


@dataclass(frozen=True)
class PullbackSquare:
    """Pullback of the cospan ``g: Y -> Z``, ``t: T -> Z``.

    Carries the biproduct and kernel used to build it so that mediators can
    be computed without reconstruction.
    """

    g: Mor
    t: Mor
    obj: Obj
    p_Y: Mor
    p_T: Mor
    biprod: BiproductData
    kernel: KernelData


@dataclass(frozen=True)
class PushoutSquare:
    """Pushout of the span ``f: X -> Y``, ``t: X -> T``."""

    f: Mor
    t: Mor
    obj: Obj
    s_Y: Mor
    s_T: Mor
    biprod: BiproductData
    cokernel: CokernelData


@dataclass(frozen=True)
class MorphismProfile:
    mono: bool
    epi: bool
    iso: bool
    is_kernel: bool
    is_cokernel: bool
    strict: bool

    def as_dict(self) -> dict:
        return {
            "mono": self.mono,
            "epi": self.epi,
            "iso": self.iso,
            "is_kernel": self.is_kernel,
            "is_cokernel": self.is_cokernel,
            "strict": self.strict,
        }


@dataclass(frozen=True)
class StrictFactorization:
    """The canonical factorization through coimage and image.

    ``image_inclusion . induced . coim_projection == of`` holds exactly; the
    morphism is strict precisely when ``induced`` is an isomorphism.
    """

    of: Mor
    induced: Mor
    coim_projection: Mor
    image_inclusion: Mor


class InstanceRule(NamedTuple):
    """A rule-based semi-stability justification an instance vouches for."""

    tag: str
    hypothesis: bool = False


class Instance(ABC):
    """A concrete additive category with kernels and cokernels.

    Implementations must be stateless: all methods are pure functions of
    their arguments, so instances are safe to share across workers.
    """

    name: str = ""
    ring: str = "Q"  # "Q" or "Z"

    # -- payload helpers -------------------------------------------------
    def payload_zero(self, rows: int, cols: int) -> Payload:
        return (RatMatrix if self.ring == "Q" else IntMatrix).zero(rows, cols)

    def payload_identity(self, n: int) -> Payload:
        return (RatMatrix if self.ring == "Q" else IntMatrix).identity(n)

    def coerce_payload(self, data, rows: int, cols: int) -> Payload:
        if isinstance(data, (RatMatrix, IntMatrix)):
            if self.ring == "Q" and isinstance(data, IntMatrix):
                data = data.to_rational()
            if (data.rows, data.cols) != (rows, cols):
                raise ConstraintError(f"expected a {rows}x{cols} matrix")
            return data
        cls = RatMatrix if self.ring == "Q" else IntMatrix
        try:
            return cls(rows, cols, data)
        except (TypeError, ValueError) as exc:
            raise ConstraintError(str(exc)) from None

    # -- objects and morphisms -------------------------------------------
    @abstractmethod
    def zero_object(self) -> Obj: ...

    def is_zero_object(self, x: Obj) -> bool:
        return x.dim == 0

    @abstractmethod
    def validate_object(self, x: Obj) -> None: ...

    def validate_morphism(self, f: Mor) -> None:
        """Hook for constraints beyond shape; default accepts everything."""

    def morphism(self, dom: Obj, cod: Obj, payload) -> Mor:
        f = Mor(dom, cod, self.coerce_payload(payload, cod.dim, dom.dim))
        self.validate_morphism(f)
        return f

    def identity(self, x: Obj) -> Mor:
        return Mor(x, x, self.payload_identity(x.dim))

    def zero_morphism(self, dom: Obj, cod: Obj) -> Mor:
        return Mor(dom, cod, self.payload_zero(cod.dim, dom.dim))

    # -- structural primitives -------------------------------------------
    @abstractmethod
    def direct_sum(self, x: Obj, y: Obj) -> Obj: ...

    def biproduct(self, x: Obj, y: Obj) -> BiproductData:
        obj = self.direct_sum(x, y)
        ix = self.payload_identity(x.dim)
        iy = self.payload_identity(y.dim)
        zxy = self.payload_zero(x.dim, y.dim)
        zyx = self.payload_zero(y.dim, x.dim)
        return BiproductData(
            obj=obj,
            inj_left=Mor(x, obj, ix.vstack(zyx)),
            inj_right=Mor(y, obj, zxy.vstack(iy)),
            proj_left=Mor(obj, x, ix.hstack(zxy)),
            proj_right=Mor(obj, y, zyx.hstack(iy)),
        )

    @abstractmethod
    def kernel(self, f: Mor) -> KernelData: ...

    @abstractmethod
    def cokernel(self, f: Mor) -> CokernelData: ...

    @abstractmethod
    def payload_solve(self, a: Payload, b: Payload) -> Optional[Payload]:
        """A particular exact solution ``X`` of ``a * X = b``, or ``None``."""

    @abstractmethod
    def payload_kernel(self, a: Payload) -> Payload:
        """Column basis of ``{x : a * x = 0}`` over the instance's ring."""

    # -- splittings and inverses ------------------------------------------
    def section(self, g: Mor) -> Optional[Mor]:
        """Some ``s`` with ``g . s = id``, or ``None``."""
        x = self.payload_solve(g.matrix, self.payload_identity(g.cod.dim))
        if x is None:
            return None
        try:
            return self.morphism(g.cod, g.dom, x)
        except ConstraintError:
            return None

    def retraction(self, f: Mor) -> Optional[Mor]:
        """Some ``r`` with ``r . f = id``, or ``None``."""
        xt = self.payload_solve(f.matrix.transpose(), self.payload_identity(f.dom.dim))
        if xt is None:
            return None
        try:
            return self.morphism(f.cod, f.dom, xt.transpose())
        except ConstraintError:
            return None

    def inverse(self, f: Mor) -> Optional[Mor]:
        """Two-sided inverse, or ``None`` when ``f`` is not an isomorphism."""
        if f.dom.dim != f.cod.dim:
            return None
        if self.payload_kernel(f.matrix).cols != 0:
            return None
        x = self.payload_solve(f.matrix, self.payload_identity(f.cod.dim))
        if x is None:
            return None
        if x * f.matrix != self.payload_identity(f.dom.dim):
            return None
        try:
            return self.morphism(f.cod, f.dom, x)
        except ConstraintError:
            return None

    # -- semi-stability rules ----------------------------------------------
    def semistable_kernel_rule(self, f: Mor) -> Optional[InstanceRule]:
        return None

    def semistable_cokernel_rule(self, g: Mor) -> Optional[InstanceRule]:
        return None

    # -- sampling -----------------------------------------------------------
    @abstractmethod
    def sample_object(self, cfg, index) -> Obj: ...

    @abstractmethod
    def sample_morphism(self, dom: Obj, cod: Obj, cfg, index) -> Mor: ...

    @abstractmethod
    def sample_iso(self, x: Obj, cfg, index) -> Mor: ...

    def canonical_probe_morphisms(self, cfg) -> list:
        """Small structured morphisms swept before random sampling."""
        return []


_REGISTRY: dict[str, Instance] = {}


def register_instance(instance: Instance) -> Instance:
    _REGISTRY[instance.name] = instance
    return instance


def unregister_instance(name: str) -> None:
    _REGISTRY.pop(name, None)


def get_instance(tagged) -> Instance:
    """Resolve the instance for a name, object, or morphism."""
    if isinstance(tagged, Instance):
        return tagged
    if isinstance(tagged, Obj):
        name = tagged.category
    elif isinstance(tagged, Mor):
        name = tagged.dom.category
    else:
        name = tagged
    try:
        return _REGISTRY[name]
    except KeyError:
        raise ConstraintError(f"unknown category instance {name!r}") from None


def instance_names() -> list[str]:
    return sorted(_REGISTRY)
