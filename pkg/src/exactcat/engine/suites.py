"""Seeded property suites with deterministic, serializable reports.

Each suite draws its samples from ``(seed, case index)`` so reports are pure
functions of ``(suite, instance, config)``; workers only change wall time,
never bytes.  Unknown verdicts are tallied separately and never counted as
violations.  A probe counterexample against a rule-based Yes aborts the
suite with a distinguished rule-contradiction report.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .. import serialize
from ..category import (
    add,
    biproduct,
    classify,
    cokernel,
    compose,
    factor_left,
    identity,
    induced_strict_map,
    inverse,
    is_pullback_square,
    is_pushout_square,
    kernel,
    negate,
    pullback,
    pullback_mediate,
    pushout,
    pushout_mediate,
    zero_morphism,
)
from ..core import ExactCatError, Mor, get_instance
from ..instances.sampling import sample_exact_pair, sample_iso, sample_morphism, sample_object
from .semistable import decide_semistable_cokernel, decide_semistable_kernel, in_maximal_exact
from .verdicts import ExactPair, ProbeConfig, RuleContradictionError, Verdict


@dataclass
class DiagramTrace:
    """Named morphisms of a failed diagram reconstruction."""

    check: str
    morphisms: dict
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "morphisms": {k: serialize.mor_to_json(v) for k, v in self.morphisms.items()},
            "note": self.note,
        }


@dataclass(frozen=True)
class Report:
    suite: str
    instance: str
    config: ProbeConfig
    hypothesis_rules: bool
    cases: int
    violations: tuple
    unknown: int
    counts: dict
    findings: Optional[dict] = None
    aborted: Optional[str] = None

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "instance": self.instance,
            "config": {**self.config.as_dict(), "hypothesis_rules": self.hypothesis_rules},
            "cases": self.cases,
            "violations": list(self.violations),
            "witnesses": [v["diagram"] for v in self.violations if v.get("diagram")],
            "unknown": self.unknown,
            "counts": self.counts,
            "findings": self.findings,
            "aborted": self.aborted,
        }


@dataclass
class CaseOutcome:
    yes: int = 0
    no: int = 0
    unknown: int = 0
    violations: list = field(default_factory=list)

    def verdict(self, check: str, case: int, v: Verdict, diagram=None, reason=None):
        if v.is_yes:
            self.yes += 1
        elif v.is_unknown:
            self.unknown += 1
        else:
            self.no += 1
            self.violations.append(
                {
                    "check": check,
                    "case": case,
                    "reason": reason or (v.witness or {}).get("reason", "no"),
                    "diagram": diagram if diagram is not None else v.witness,
                }
            )

    def require(self, check: str, case: int, ok: bool, reason: str, diagram=None):
        if ok:
            self.yes += 1
        else:
            self.no += 1
            self.violations.append(
                {"check": check, "case": case, "reason": reason, "diagram": diagram}
            )


def _run_cases(n: int, case_fn: Callable[[int], CaseOutcome], workers: int = 0) -> list:
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(case_fn, range(n)))
    return [case_fn(i) for i in range(n)]


def _guarded(kind: str) -> Callable:
    """Wrap a case body so engine errors become violations, not crashes."""

    def decorate(body):
        def run(i: int) -> CaseOutcome:
            out = CaseOutcome()
            try:
                body(i, out)
            except RuleContradictionError:
                raise
            except ExactCatError as exc:
                out.no += 1
                out.violations.append(
                    {"check": kind, "case": i, "reason": f"error: {exc}", "diagram": None}
                )
            return out

        return run

    return decorate


def _assemble(
    suite: str,
    instance,
    cfg: ProbeConfig,
    hypothesis_rules: bool,
    outcomes: list,
    findings: Optional[dict] = None,
    aborted: Optional[str] = None,
) -> Report:
    violations = []
    yes = no = unknown = 0
    for out in outcomes:
        yes += out.yes
        no += out.no
        unknown += out.unknown
        violations.extend(out.violations)
    return Report(
        suite=suite,
        instance=get_instance(instance).name,
        config=cfg,
        hypothesis_rules=hypothesis_rules,
        cases=len(outcomes),
        violations=tuple(violations),
        unknown=unknown,
        counts={"yes": yes, "no": no, "unknown": unknown},
        findings=findings,
        aborted=aborted,
    )


def _contradiction_report(suite, instance, cfg, hypothesis_rules, exc) -> Report:
    violation = {
        "check": "rule-contradiction",
        "case": -1,
        "reason": str(exc),
        "diagram": exc.witness,
    }
    return Report(
        suite=suite,
        instance=get_instance(instance).name,
        config=cfg,
        hypothesis_rules=hypothesis_rules,
        cases=0,
        violations=(violation,),
        unknown=0,
        counts={"yes": 0, "no": 1, "unknown": 0},
        findings=None,
        aborted="rule-contradiction",
    )


def _admissible_mono(f: Mor, cfg, hypothesis_rules) -> Verdict:
    return in_maximal_exact(ExactPair(f, cokernel(f).projection), cfg, hypothesis_rules)


def _admissible_epi(g: Mor, cfg, hypothesis_rules) -> Verdict:
    return in_maximal_exact(ExactPair(kernel(g).inclusion, g), cfg, hypothesis_rules)


# ---------------------------------------------------------------------------
# universal properties of kernels, cokernels, biproducts, and mediators
# ---------------------------------------------------------------------------

def universal_property_suite(instance, cfg: ProbeConfig, hypothesis_rules=True, workers=0) -> Report:
    inst = get_instance(instance)
    scfg = cfg.sampler()

    @_guarded("universal")
    def case(i: int, out: CaseOutcome):
        x = sample_object(inst, scfg, ("up-x", i))
        y = sample_object(inst, scfg, ("up-y", i))
        f = sample_morphism(inst, x, y, scfg, ("up-f", i))
        diagram = {"f": serialize.mor_to_json(f)}

        kd = kernel(f)
        out.require("kernel-kills", i, compose(kd.inclusion, f).is_zero(),
                    "kernel inclusion does not compose to zero", diagram)
        out.require("kernel-mono", i, inst.payload_kernel(kd.inclusion.matrix).cols == 0,
                    "kernel inclusion is not injective", diagram)
        l_obj = sample_object(inst, scfg, ("up-l", i))
        v = sample_morphism(inst, l_obj, kd.obj, scfg, ("up-v", i))
        h = compose(v, kd.inclusion)
        u = factor_left(kd.inclusion, h)
        out.require("kernel-factor", i, u == v and compose(u, kd.inclusion) == h,
                    "kernel factorization is not unique or does not commute", diagram)

        cd = cokernel(f)
        out.require("cokernel-kills", i, compose(f, cd.projection).is_zero(),
                    "cokernel projection does not kill the morphism", diagram)
        out.require("cokernel-epi", i,
                    inst.payload_kernel(cd.projection.matrix.transpose()).cols == 0,
                    "cokernel projection is not surjective", diagram)
        m_obj = sample_object(inst, scfg, ("up-m", i))
        w = sample_morphism(inst, cd.obj, m_obj, scfg, ("up-w", i))
        h2 = compose(cd.projection, w)
        u2 = inst.payload_solve(cd.projection.matrix.transpose(), h2.matrix.transpose())
        out.require("cokernel-factor", i,
                    u2 is not None and u2.transpose() == w.matrix,
                    "cokernel factorization is not unique or does not commute", diagram)

        bp = biproduct(x, y)
        laws = (
            compose(bp.inj_left, bp.proj_left) == identity(x)
            and compose(bp.inj_right, bp.proj_right) == identity(y)
            and compose(bp.inj_left, bp.proj_right).is_zero()
            and compose(bp.inj_right, bp.proj_left).is_zero()
            and add(compose(bp.proj_left, bp.inj_left), compose(bp.proj_right, bp.inj_right))
            == identity(bp.obj)
        )
        out.require("biproduct-laws", i, laws, "biproduct identities fail", None)

        # mediators must reproduce arbitrary maps into/out of the squares
        z = sample_object(inst, scfg, ("up-z", i))
        g = sample_morphism(inst, y, z, scfg, ("up-g", i))
        t = sample_morphism(inst, x, z, scfg, ("up-t", i))
        sq = pullback(g, t)
        probe = sample_morphism(inst, l_obj, sq.obj, scfg, ("up-cone", i))
        m = pullback_mediate(sq, compose(probe, sq.p_Y), compose(probe, sq.p_T))
        out.require("pullback-mediator", i, m == probe,
                    "pullback mediator is not unique", diagram())
        t2 = sample_morphism(inst, x, z, scfg, ("up-t2", i))
        po = pushout(f, t2)
        probe2 = sample_morphism(inst, po.obj, m_obj, scfg, ("up-cocone", i))
        m2 = pushout_mediate(po, compose(po.s_Y, probe2), compose(po.s_T, probe2))
        out.require("pushout-mediator", i, m2 == probe2,
                    "pushout mediator is not unique", diagram())

    try:
        outcomes = _run_cases(cfg.samples, case, workers)
    except RuleContradictionError as exc:
        return _contradiction_report("universal", instance, cfg, hypothesis_rules, exc)
    return _assemble("universal", instance, cfg, hypothesis_rules, outcomes)


# ---------------------------------------------------------------------------
# kernel/cokernel transport along pullback and pushout squares
# ---------------------------------------------------------------------------

def transport_suite(instance, cfg: ProbeConfig, hypothesis_rules=True, workers=0) -> Report:
    from ..category import cokernel_transport, is_cokernel_of, is_kernel_of, kernel_transport

    inst = get_instance(instance)
    scfg = cfg.sampler()

    @_guarded("transport")
    def case(i: int, out: CaseOutcome):
        y = sample_object(inst, scfg, ("lt-y", i))
        z = sample_object(inst, scfg, ("lt-z", i))
        t_obj = sample_object(inst, scfg, ("lt-t", i))
        g = sample_morphism(inst, y, z, scfg, ("lt-g", i))
        t = sample_morphism(inst, t_obj, z, scfg, ("lt-tm", i))
        sq, j = kernel_transport(g, t)
        ok = (
            compose(j, sq.p_Y) == kernel(g).inclusion
            and compose(j, sq.p_T).is_zero()
            and is_kernel_of(j, sq.p_T)
        )
        out.require("kernel-transport", i, ok, "transported map is not a kernel of p_T",
                    {"g": serialize.mor_to_json(g), "t": serialize.mor_to_json(t)})

        x = sample_object(inst, scfg, ("lt-x", i))
        f = sample_morphism(inst, x, y, scfg, ("lt-f", i))
        u = sample_morphism(inst, x, t_obj, scfg, ("lt-u", i))
        po, c = cokernel_transport(f, u)
        ok = (
            compose(po.s_Y, c) == cokernel(f).projection
            and compose(po.s_T, c).is_zero()
            and is_cokernel_of(c, po.s_T)
        )
        out.require("cokernel-transport", i, ok, "transported map is not a cokernel of s_T",
                    {"f": serialize.mor_to_json(f), "t": serialize.mor_to_json(u)})

    try:
        outcomes = _run_cases(cfg.samples, case, workers)
    except RuleContradictionError as exc:
        return _contradiction_report("transport", instance, cfg, hypothesis_rules, exc)
    return _assemble("transport", instance, cfg, hypothesis_rules, outcomes)


# ---------------------------------------------------------------------------
# exact-structure axioms
# ---------------------------------------------------------------------------

AXIOM_KINDS = ("E0", "E0op", "E1", "E1op", "E2", "E2op", "iso-closure")


def axiom_suite(instance, cfg: ProbeConfig, hypothesis_rules=True, workers=0) -> Report:
    inst = get_instance(instance)
    scfg = cfg.sampler()

    def pair_json(pair):
        return serialize.pair_to_json(pair)

    @_guarded("axiom")
    def case(i: int, out: CaseOutcome):
        kind = AXIOM_KINDS[i % len(AXIOM_KINDS)]
        if kind == "E0":
            x = sample_object(inst, scfg, ("ax-e0", i))
            pair = ExactPair(identity(x), zero_morphism(x, inst.zero_object()))
            out.verdict("E0", i, in_maximal_exact(pair, cfg, hypothesis_rules), pair_json(pair))
        elif kind == "E0op":
            x = sample_object(inst, scfg, ("ax-e0op", i))
            pair = ExactPair(zero_morphism(inst.zero_object(), x), identity(x))
            out.verdict("E0op", i, in_maximal_exact(pair, cfg, hypothesis_rules), pair_json(pair))
        elif kind == "E1":
            first = sample_exact_pair(inst, scfg, ("ax-e1-a", i))
            other = sample_exact_pair(inst, scfg, ("ax-e1-b", i))
            t = sample_morphism(inst, other.f.dom, first.f.cod, scfg, ("ax-e1-t", i))
            second_mono = pushout(other.f, t).s_T
            v2 = _admissible_mono(second_mono, cfg, hypothesis_rules)
            if v2.is_no:
                out.verdict("E1-precondition", i, v2)
            elif v2.is_unknown:
                out.unknown += 1
            else:
                composite = compose(first.f, second_mono)
                out.verdict("E1", i, _admissible_mono(composite, cfg, hypothesis_rules),
                            {"composite": serialize.mor_to_json(composite)})
        elif kind == "E1op":
            first = sample_exact_pair(inst, scfg, ("ax-e1op-a", i))
            w = sample_object(inst, scfg, ("ax-e1op-w", i))
            u = sample_morphism(inst, w, first.g.cod, scfg, ("ax-e1op-u", i))
            second_epi = cokernel(u).projection
            v2 = _admissible_epi(second_epi, cfg, hypothesis_rules)
            if v2.is_no:
                out.verdict("E1op-precondition", i, v2)
            elif v2.is_unknown:
                out.unknown += 1
            else:
                composite = compose(first.g, second_epi)
                out.verdict("E1op", i, _admissible_epi(composite, cfg, hypothesis_rules),
                            {"composite": serialize.mor_to_json(composite)})
        elif kind == "E2":
            pair = sample_exact_pair(inst, scfg, ("ax-e2", i))
            t_obj = sample_object(inst, scfg, ("ax-e2-t", i))
            t = sample_morphism(inst, pair.f.dom, t_obj, scfg, ("ax-e2-tm", i))
            sq = pushout(pair.f, t)
            out.verdict("E2", i, _admissible_mono(sq.s_T, cfg, hypothesis_rules),
                        serialize.pushout_to_json(sq))
        elif kind == "E2op":
            pair = sample_exact_pair(inst, scfg, ("ax-e2op", i))
            t_obj = sample_object(inst, scfg, ("ax-e2op-t", i))
            t = sample_morphism(inst, t_obj, pair.g.cod, scfg, ("ax-e2op-tm", i))
            sq = pullback(pair.g, t)
            out.verdict("E2op", i, _admissible_epi(sq.p_T, cfg, hypothesis_rules),
                        serialize.pullback_to_json(sq))
        else:  # iso-closure
            pair = sample_exact_pair(inst, scfg, ("ax-iso", i))
            ix = sample_iso(inst, pair.f.dom, scfg, ("ax-iso-x", i))
            iy = sample_iso(inst, pair.f.cod, scfg, ("ax-iso-y", i))
            iz = sample_iso(inst, pair.g.cod, scfg, ("ax-iso-z", i))
            f2 = compose(compose(inverse(ix), pair.f), iy)
            g2 = compose(compose(inverse(iy), pair.g), iz)
            conjugated = ExactPair(f2, g2)
            out.verdict("iso-closure", i, in_maximal_exact(conjugated, cfg, hypothesis_rules),
                        pair_json(conjugated))

    try:
        outcomes = _run_cases(cfg.samples, case, workers)
    except RuleContradictionError as exc:
        return _contradiction_report("axioms", instance, cfg, hypothesis_rules, exc)
    return _assemble("axioms", instance, cfg, hypothesis_rules, outcomes)


# ---------------------------------------------------------------------------
# composition/cancellation consistency of semi-stability verdicts
# ---------------------------------------------------------------------------

def kelly_suite(instance, cfg: ProbeConfig, hypothesis_rules=True, workers=0) -> Report:
    inst = get_instance(instance)
    scfg = cfg.sampler()

    @_guarded("kelly")
    def case(i: int, out: CaseOutcome):
        # cokernel chain: compose two genuine cokernel projections
        mid = sample_object(inst, scfg, ("ke-mid", i))
        w1 = sample_object(inst, scfg, ("ke-w1", i))
        u1 = sample_morphism(inst, w1, mid, scfg, ("ke-u1", i))
        f = cokernel(u1).projection
        w2 = sample_object(inst, scfg, ("ke-w2", i))
        u2 = sample_morphism(inst, w2, f.cod, scfg, ("ke-u2", i))
        g = cokernel(u2).projection
        h = compose(f, g)
        vf = decide_semistable_cokernel(f, cfg, hypothesis_rules)
        vg = decide_semistable_cokernel(g, cfg, hypothesis_rules)
        h_is_cokernel = classify(h).is_cokernel
        diagram = {"f": serialize.mor_to_json(f), "g": serialize.mor_to_json(g)}
        if vf.is_yes and vg.is_yes:
            if not h_is_cokernel:
                out.require("kelly-a", i, False,
                            "composite of semi-stable cokernels is not a cokernel", diagram)
            else:
                vh = decide_semistable_cokernel(h, cfg, hypothesis_rules)
                out.require("kelly-a", i, not vh.is_no,
                            "composite of semi-stable cokernels is not semi-stable", diagram)
        if h_is_cokernel:
            vh = decide_semistable_cokernel(h, cfg, hypothesis_rules)
            if vh.is_yes:
                out.require("kelly-c", i, not vg.is_no,
                            "semi-stable composite with non-semi-stable second factor", diagram)

        # kernel chain: compose two genuine kernel inclusions
        src = sample_object(inst, scfg, ("ke-src", i))
        o1 = sample_object(inst, scfg, ("ke-o1", i))
        u3 = sample_morphism(inst, src, o1, scfg, ("ke-u3", i))
        k1 = kernel(u3).inclusion
        o2 = sample_object(inst, scfg, ("ke-o2", i))
        u4 = sample_morphism(inst, k1.dom, o2, scfg, ("ke-u4", i))
        k2 = kernel(u4).inclusion
        m = compose(k2, k1)
        v1 = decide_semistable_kernel(k1, cfg, hypothesis_rules)
        v2 = decide_semistable_kernel(k2, cfg, hypothesis_rules)
        m_is_kernel = classify(m).is_kernel
        diagram = {"k1": serialize.mor_to_json(k1), "k2": serialize.mor_to_json(k2)}
        if v1.is_yes and v2.is_yes:
            if not m_is_kernel:
                out.require("kelly-b", i, False,
                            "composite of semi-stable kernels is not a kernel", diagram)
            else:
                vm = decide_semistable_kernel(m, cfg, hypothesis_rules)
                out.require("kelly-b", i, not vm.is_no,
                            "composite of semi-stable kernels is not semi-stable", diagram)
        if m_is_kernel:
            vm = decide_semistable_kernel(m, cfg, hypothesis_rules)
            if vm.is_yes:
                out.require("kelly-d", i, not v2.is_no,
                            "semi-stable composite with non-semi-stable first factor", diagram)

    try:
        outcomes = _run_cases(cfg.samples, case, workers)
    except RuleContradictionError as exc:
        return _contradiction_report("kelly", instance, cfg, hypothesis_rules, exc)
    return _assemble("kelly", instance, cfg, hypothesis_rules, outcomes)


# ---------------------------------------------------------------------------
# reconstruction of the closure-under-composition proof diagrams
# ---------------------------------------------------------------------------

def theorem_diagram_suite(instance, cfg: ProbeConfig, hypothesis_rules=True, workers=0) -> Report:
    inst = get_instance(instance)
    scfg = cfg.sampler()

    @_guarded("theorem")
    def case(i: int, out: CaseOutcome):
        first = sample_exact_pair(inst, scfg, ("th-p1", i))
        f, g = first.f, first.g
        z = g.cod
        w = sample_object(inst, scfg, ("th-w", i))
        g0 = sample_morphism(inst, z, w, scfg, ("th-g0", i))
        f2 = kernel(g0).inclusion          # admissible mono into Z
        g2 = cokernel(f2).projection       # its cokernel out of Z
        h = compose(g, g2)
        kd = kernel(h)
        k = kd.inclusion
        alpha = factor_left(f2, compose(k, g))

        trace = DiagramTrace(
            check="claim-a",
            morphisms={"f": f, "g": g, "f'": f2, "g'": g2, "k": k, "alpha": alpha},
        )
        out.require("claim-a", i, is_pullback_square(g, f2, k, alpha),
                    "square (1) fails the pullback comparison", trace.to_json_dict())

        # Claim B on a sampled pullback of the first pair
        r_obj = sample_object(inst, scfg, ("th-r", i))
        r = sample_morphism(inst, r_obj, z, scfg, ("th-rm", i))
        sq = pullback(g, r)
        bp = biproduct(r_obj, g.dom)
        column = add(compose(negate(sq.p_T), bp.inj_left), compose(sq.p_Y, bp.inj_right))
        row = add(compose(bp.proj_left, r), compose(bp.proj_right, g))
        pair_b = ExactPair(column, row)
        out.verdict("claim-b", i, in_maximal_exact(pair_b, cfg, hypothesis_rules),
                    serialize.pair_to_json(pair_b))

        # Claim C: the block square on the biproducts is a pushout
        bp_left = biproduct(f2.dom, g.dom)   # X' + Y
        bp_right = biproduct(z, g.dom)       # Z + Y
        block = add(
            compose(compose(bp_left.proj_left, f2), bp_right.inj_left),
            compose(bp_left.proj_right, bp_right.inj_right),
        )
        out.require("claim-c", i,
                    is_pushout_square(f2, bp_left.inj_left, bp_right.inj_left, block),
                    "square (3) fails the pushout comparison",
                    DiagramTrace("claim-c", {"f'": f2, "r": block}).to_json_dict())

        # exact equation r . p == sigma . k
        p = add(compose(negate(alpha), bp_left.inj_left), compose(k, bp_left.inj_right))
        sigma = add(compose(negate(g), bp_right.inj_left), bp_right.inj_right)
        out.require("equation", i, compose(p, block) == compose(k, sigma),
                    "r . p differs from sigma . k",
                    DiagramTrace("equation", {"p": p, "sigma": sigma, "k": k}).to_json_dict())

        # transported pair from a sampled pullback stays in the structure
        t_obj = sample_object(inst, scfg, ("th-t", i))
        t = sample_morphism(inst, t_obj, z, scfg, ("th-tm", i))
        sq2 = pullback(g, t)
        transported_kernel = pullback_mediate(sq2, f, zero_morphism(f.dom, t_obj))
        pair_t = ExactPair(transported_kernel, sq2.p_T)
        out.verdict("transport-membership", i, in_maximal_exact(pair_t, cfg, hypothesis_rules),
                    serialize.pair_to_json(pair_t))

    try:
        outcomes = _run_cases(cfg.samples, case, workers)
    except RuleContradictionError as exc:
        return _contradiction_report("theorem", instance, cfg, hypothesis_rules, exc)
    return _assemble("theorem", instance, cfg, hypothesis_rules, outcomes)


# ---------------------------------------------------------------------------
# abelian / semi-abelian / quasi-abelian probes
# ---------------------------------------------------------------------------

def structure_probe(instance, cfg: ProbeConfig, hypothesis_rules=True, workers=0) -> Report:
    inst = get_instance(instance)
    scfg = cfg.sampler()
    sweep = inst.canonical_probe_morphisms(scfg)

    def morphism_for(i: int) -> Mor:
        if i < len(sweep):
            return sweep[i]
        j = i - len(sweep)
        x = sample_object(inst, scfg, ("sp-x", j))
        y = sample_object(inst, scfg, ("sp-y", j))
        return sample_morphism(inst, x, y, scfg, ("sp-f", j))

    witnesses: list = []

    @_guarded("structure")
    def case(i: int, out: CaseOutcome):
        f = morphism_for(i)
        profile = classify(f)
        if profile.mono and profile.epi and not profile.iso:
            witnesses.append((i, serialize.mor_to_json(f)))
        induced = induced_strict_map(f).induced
        induced_profile = classify(induced)
        out.require("semi-abelian", i, induced_profile.mono and induced_profile.epi,
                    "induced coimage-to-image map is not mono and epi",
                    {"f": serialize.mor_to_json(f)})
        if i >= len(sweep):
            pair = sample_exact_pair(inst, scfg, ("sp-pair", i - len(sweep)))
            out.verdict("quasi-abelian", i, in_maximal_exact(pair, cfg, hypothesis_rules),
                        serialize.pair_to_json(pair))

    try:
        outcomes = _run_cases(len(sweep) + cfg.samples, case, workers)
    except RuleContradictionError as exc:
        return _contradiction_report("structure", instance, cfg, hypothesis_rules, exc)
    witnesses.sort(key=lambda pair: pair[0])
    first_witness = witnesses[0][1] if witnesses else None
    findings = {
        "abelian": first_witness is None,
        "abelian_witness": first_witness,
        "non_iso_mono_epi_count": len(witnesses),
    }
    return _assemble("structure", instance, cfg, hypothesis_rules, outcomes, findings=findings)


SUITES = {
    "universal": universal_property_suite,
    "transport": transport_suite,
    "axioms": axiom_suite,
    "kelly": kelly_suite,
    "theorem": theorem_diagram_suite,
    "structure": structure_probe,
}


def run_suite(name: str, instance, cfg: ProbeConfig, hypothesis_rules=True, workers=0) -> Report:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return suite(instance, cfg, hypothesis_rules=hypothesis_rules, workers=workers)
