"""Semi-stability decisions and maximal-exact-structure membership.

A cokernel is semi-stable when every pullback of it is again a cokernel;
dually for kernels along pushouts.  The decision procedure layers:

1. isomorphisms (always semi-stable),
2. splittings (retractions are semi-stable cokernels, coretractions
   semi-stable kernels),
3. instance rules with a recorded mathematical justification,
4. seeded probing, which can only ever return a witnessed ``no`` or a
   budget-stamped ``unknown``.

A ``no`` verdict is self-certifying: its witness square re-checks by a single
classification with no sampling involved.
"""

from __future__ import annotations

from typing import Optional

from .. import serialize
from ..category import biproduct, classify, compose, is_iso, pullback, pushout
from ..category import add as mor_add
from ..core import ExactCatError, Instance, Mor, Obj, get_instance
from ..instances.sampling import sample_morphism, sample_object
from ..integral import IntMatrix
from ..rational import RatMatrix
from .verdicts import (
    ExactPair,
    NotACokernelError,
    NotAKernelError,
    ProbeConfig,
    RuleContradictionError,
    Verdict,
)


def is_kernel_cokernel_pair(pair: ExactPair) -> bool:
    """Whether ``f`` is a kernel of ``g`` and ``g`` a cokernel of ``f``.

    Both directions are canonical-comparison tests: the induced map from
    ``dom(f)`` to ``ker(g)`` and the induced map from ``cok(f)`` to ``cod(g)``
    must be isomorphisms.
    """
    from ..category import factor_through_cokernel, factor_through_kernel, kernel, cokernel

    try:
        to_kernel = factor_through_kernel(kernel(pair.g), pair.f)
        from_cokernel = factor_through_cokernel(cokernel(pair.f), pair.g)
    except ExactCatError:
        return False
    return is_iso(to_kernel) and is_iso(from_cokernel)


def decide_semistable_cokernel(
    g: Mor, cfg: Optional[ProbeConfig] = None, hypothesis_rules: bool = True
) -> Verdict:
    """Three-valued semi-stability verdict for a cokernel.

    ``hypothesis_rules=False`` ignores instance rules flagged as hypotheses,
    falling back to probing (or ``unknown`` when no probe budget is given).
    """
    profile = classify(g)
    if not profile.is_cokernel:
        raise NotACokernelError("morphism is not a cokernel")
    if profile.iso:
        return Verdict.yes("iso")
    inst = get_instance(g)
    if inst.section(g) is not None:
        return Verdict.yes("retraction")
    rule = inst.semistable_cokernel_rule(g)
    if rule is not None and (hypothesis_rules or not rule.hypothesis):
        return Verdict.yes(rule.tag)
    if cfg is None:
        return Verdict.unknown(0)
    return probe_semistable_cokernel(g, cfg)


def decide_semistable_kernel(
    f: Mor, cfg: Optional[ProbeConfig] = None, hypothesis_rules: bool = True
) -> Verdict:
    """Dual verdict for a kernel, probing along pushouts."""
    profile = classify(f)
    if not profile.is_kernel:
        raise NotAKernelError("morphism is not a kernel")
    if profile.iso:
        return Verdict.yes("iso")
    inst = get_instance(f)
    if inst.retraction(f) is not None:
        return Verdict.yes("coretraction")
    rule = inst.semistable_kernel_rule(f)
    if rule is not None and (hypothesis_rules or not rule.hypothesis):
        return Verdict.yes(rule.tag)
    if cfg is None:
        return Verdict.unknown(0)
    return probe_semistable_kernel(f, cfg)


def _cokernel_witness(g: Mor, t: Mor) -> dict:
    sq = pullback(g, t)
    return {
        "direction": "cokernel",
        "t": serialize.mor_to_json(t),
        "square": serialize.pullback_to_json(sq),
        "profile": classify(sq.p_T).as_dict(),
    }


def _kernel_witness(f: Mor, t: Mor) -> dict:
    sq = pushout(f, t)
    return {
        "direction": "kernel",
        "t": serialize.mor_to_json(t),
        "square": serialize.pushout_to_json(sq),
        "profile": classify(sq.s_T).as_dict(),
    }


def probe_semistable_cokernel(g: Mor, cfg: ProbeConfig) -> Verdict:
    """Sample test morphisms into ``cod(g)``, pull back, and classify.

    Returns ``no`` with a shrunken witness at the first pullback leg that is
    not a cokernel, else ``unknown`` stamped with the consumed budget.  A
    counterexample against an instance rule raises ``RuleContradictionError``.
    """
    if not classify(g).is_cokernel:
        raise NotACokernelError("morphism is not a cokernel")
    inst = get_instance(g)
    scfg = cfg.sampler()
    for i in range(cfg.samples):
        t_dom = sample_object(inst, scfg, ("probe-cok-obj", i))
        t = sample_morphism(inst, t_dom, g.cod, scfg, ("probe-cok-mor", i))
        sq = pullback(g, t)
        if not classify(sq.p_T).is_cokernel:
            t = _shrink_witness(g, t, side="cokernel")
            witness = _cokernel_witness(g, t)
            if inst.semistable_cokernel_rule(g) is not None:
                raise RuleContradictionError(
                    "probe found a counterexample against the instance rule", witness
                )
            return Verdict.no(witness)
    return Verdict.unknown(cfg.samples)


def probe_semistable_kernel(f: Mor, cfg: ProbeConfig) -> Verdict:
    """Dual probe: sample test morphisms out of ``dom(f)`` and push out."""
    if not classify(f).is_kernel:
        raise NotAKernelError("morphism is not a kernel")
    inst = get_instance(f)
    scfg = cfg.sampler()
    for i in range(cfg.samples):
        t_cod = sample_object(inst, scfg, ("probe-ker-obj", i))
        t = sample_morphism(inst, f.dom, t_cod, scfg, ("probe-ker-mor", i))
        sq = pushout(f, t)
        if not classify(sq.s_T).is_kernel:
            t = _shrink_witness(f, t, side="kernel")
            witness = _kernel_witness(f, t)
            if inst.semistable_kernel_rule(f) is not None:
                raise RuleContradictionError(
                    "probe found a counterexample against the instance rule", witness
                )
            return Verdict.no(witness)
    return Verdict.unknown(cfg.samples)


def _still_fails(fixed: Mor, t: Mor, side: str) -> bool:
    try:
        if side == "cokernel":
            return not classify(pullback(fixed, t).p_T).is_cokernel
        return not classify(pushout(fixed, t).s_T).is_kernel
    except ExactCatError:
        return False


def _shrink_witness(fixed: Mor, t: Mor, side: str, budget: int = 200) -> Mor:
    """Greedy witness minimization: drop free coordinates, then shrink entries."""
    inst = get_instance(t)
    while budget > 0:
        improved = False
        for candidate in _shrink_candidates(inst, t, side):
            budget -= 1
            if _still_fails(fixed, candidate, side):
                t = candidate
                improved = True
                break
            if budget <= 0:
                break
        if not improved:
            break
    return t


def _shrink_candidates(inst: Instance, t: Mor, side: str):
    # The free endpoint of t (its domain for pullback probes, codomain for
    # pushout probes) can lose coordinates when the instance carries no
    # subspace data.
    matrix = t.matrix
    if side == "cokernel" and t.dom.sub is None:
        for j in range(t.dom.dim):
            keep = [c for c in range(t.dom.dim) if c != j]
            yield Mor(Obj(t.dom.category, len(keep)), t.cod, matrix.take_columns(keep))
    if side == "kernel" and t.cod.sub is None:
        for i in range(t.cod.dim):
            keep = [r for r in range(t.cod.dim) if r != i]
            yield Mor(t.dom, Obj(t.cod.category, len(keep)), matrix.take_rows(keep))
    entries = matrix.entries()
    for i in range(matrix.rows):
        for j in range(matrix.cols):
            x = entries[i][j]
            if x == 0:
                continue
            for replacement in _smaller_entries(x):
                table = [list(row) for row in entries]
                table[i][j] = replacement
                cls = RatMatrix if isinstance(matrix, RatMatrix) else IntMatrix
                yield Mor(t.dom, t.cod, cls(matrix.rows, matrix.cols, table))


def _smaller_entries(x):
    yield 0
    if isinstance(x, int):
        if abs(x) > 1:
            yield x // 2 if x > 0 else -((-x) // 2)
    else:
        if abs(x.numerator) > 1:
            num = x.numerator // 2 if x.numerator > 0 else -((-x.numerator) // 2)
            yield type(x)(num, x.denominator)


def in_maximal_exact(
    pair: ExactPair, cfg: Optional[ProbeConfig] = None, hypothesis_rules: bool = True
) -> Verdict:
    """Membership in the maximal exact structure.

    Yes iff the pair is a kernel-cokernel pair whose kernel is semi-stable
    and whose cokernel is semi-stable; No carries the failing reason and
    witness; Unknown propagates from undecided semi-stability.
    """
    if not is_kernel_cokernel_pair(pair):
        return Verdict.no(
            {"reason": "not-kernel-cokernel-pair", "pair": serialize.pair_to_json(pair)}
        )
    try:
        vk = decide_semistable_kernel(pair.f, cfg, hypothesis_rules)
    except NotAKernelError:
        return Verdict.no(
            {"reason": "not-a-kernel", "pair": serialize.pair_to_json(pair)}
        )
    if vk.is_no:
        return Verdict.no({"reason": "kernel-not-semistable", **(vk.witness or {})})
    try:
        vc = decide_semistable_cokernel(pair.g, cfg, hypothesis_rules)
    except NotACokernelError:
        return Verdict.no(
            {"reason": "not-a-cokernel", "pair": serialize.pair_to_json(pair)}
        )
    if vc.is_no:
        return Verdict.no({"reason": "cokernel-not-semistable", **(vc.witness or {})})
    if vk.is_unknown or vc.is_unknown:
        return Verdict.unknown(max(vk.budget or 0, vc.budget or 0))
    return Verdict.yes(f"kernel:{vk.justification},cokernel:{vc.justification}")


def is_split_exact(pair: ExactPair) -> bool:
    """Whether the pair is isomorphic to a biproduct injection/projection pair.

    Checked by exhibiting an exact section of ``g`` and verifying the induced
    map from the biproduct is an isomorphism.
    """
    if not is_kernel_cokernel_pair(pair):
        return False
    inst = get_instance(pair.g)
    s = inst.section(pair.g)
    if s is None:
        return False
    bp = biproduct(pair.f.dom, pair.g.cod)
    induced = mor_add(compose(bp.proj_left, pair.f), compose(bp.proj_right, s))
    return is_iso(induced)


def recheck_witness(witness: dict) -> bool:
    """Re-certify a ``no`` witness with a single classification, no sampling."""
    square = witness["square"]
    if witness["direction"] == "cokernel":
        g = serialize.parse_mor(square["g"], "square.g")
        t = serialize.parse_mor(square["t"], "square.t")
        return not classify(pullback(g, t).p_T).is_cokernel
    f = serialize.parse_mor(square["f"], "square.f")
    t = serialize.parse_mor(square["t"], "square.t")
    return not classify(pushout(f, t).s_T).is_kernel
