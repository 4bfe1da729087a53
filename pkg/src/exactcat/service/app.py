"""FastAPI application wrapping the core package.

All operations are pure and stateless, so the service scales horizontally
and identical requests (including suite seeds) produce identical responses.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

import typing

from .. import __version__, category, serialize
from ..core import ExactCatError
from ..engine import run_suite
from ..engine.semistable import (
    decide_semistable_cokernel,
    decide_semistable_kernel,
    in_maximal_exact,
    is_split_exact,
)
from ..engine.verdicts import RuleContradictionError
from ..serialize import SchemaError
from . import models


def create_app() -> FastAPI:
    app = FastAPI(
        title="exactcat",
        version=__version__,
        description=(
            "Kernels, cokernels, pullbacks, pushouts, strictness, semi-stability "
            "verdicts, and maximal-exact-structure suites in exact arithmetic."
        ),
    )

    @app.exception_handler(SchemaError)
    async def schema_error(request: Request, exc: SchemaError):
        return JSONResponse(status_code=400, content={"error": exc.message, "field": exc.field})

    @app.exception_handler(RuleContradictionError)
    async def rule_contradiction(request: Request, exc: RuleContradictionError):
        return JSONResponse(
            status_code=409,
            content={"error": str(exc), "field": None, "witness": exc.witness},
        )

    @app.exception_handler(ExactCatError)
    async def domain_error(request: Request, exc: ExactCatError):
        return JSONResponse(status_code=400, content={"error": str(exc), "field": None})

    @app.get("/v1/health", response_model=models.HealthResponse)
    def health():
        return models.HealthResponse(
            status="ok",
            version=__version__,
            categories=sorted(typing.get_args(models.Category)),
        )

    @app.post("/v1/morphism/kernel", response_model=models.KernelResponse)
    def kernel(req: models.MorphismRequest):
        kd = category.kernel(serialize.parse_mor(req.morphism.doc(), "morphism"))
        return models.KernelResponse(
            object=serialize.obj_to_json(kd.obj),
            inclusion=serialize.mor_to_json(kd.inclusion),
        )

    @app.post("/v1/morphism/cokernel", response_model=models.CokernelResponse)
    def cokernel(req: models.MorphismRequest):
        cd = category.cokernel(serialize.parse_mor(req.morphism.doc(), "morphism"))
        return models.CokernelResponse(
            object=serialize.obj_to_json(cd.obj),
            projection=serialize.mor_to_json(cd.projection),
        )

    @app.post("/v1/morphism/classify", response_model=models.ProfileResponse)
    def classify(req: models.MorphismRequest):
        profile = category.classify(serialize.parse_mor(req.morphism.doc(), "morphism"))
        return models.ProfileResponse(**profile.as_dict())

    @app.post("/v1/morphism/strict", response_model=models.StrictResponse)
    def strict(req: models.MorphismRequest):
        sf = category.induced_strict_map(serialize.parse_mor(req.morphism.doc(), "morphism"))
        return models.StrictResponse(
            strict=category.is_iso(sf.induced),
            induced=serialize.mor_to_json(sf.induced),
            coim_projection=serialize.mor_to_json(sf.coim_projection),
            image_inclusion=serialize.mor_to_json(sf.image_inclusion),
        )

    @app.post("/v1/square/pullback", response_model=models.PullbackResponse)
    def pullback(req: models.CospanRequest):
        sq = category.pullback(
            serialize.parse_mor(req.g.doc(), "g"), serialize.parse_mor(req.t.doc(), "t")
        )
        return models.PullbackResponse(**serialize.pullback_to_json(sq))

    @app.post("/v1/square/pushout", response_model=models.PushoutResponse)
    def pushout(req: models.SpanRequest):
        sq = category.pushout(
            serialize.parse_mor(req.f.doc(), "f"), serialize.parse_mor(req.t.doc(), "t")
        )
        return models.PushoutResponse(**serialize.pushout_to_json(sq))

    @app.post("/v1/semistable/kernel", response_model=models.VerdictResponse)
    def semistable_kernel(req: models.MorphismConfigRequest):
        f = serialize.parse_mor(req.morphism.doc(), "morphism")
        verdict = decide_semistable_kernel(
            f, req.config.probe(), hypothesis_rules=req.config.hypothesis_rules
        )
        return models.VerdictResponse(**verdict.to_json_dict())

    @app.post("/v1/semistable/cokernel", response_model=models.VerdictResponse)
    def semistable_cokernel(req: models.MorphismConfigRequest):
        g = serialize.parse_mor(req.morphism.doc(), "morphism")
        verdict = decide_semistable_cokernel(
            g, req.config.probe(), hypothesis_rules=req.config.hypothesis_rules
        )
        return models.VerdictResponse(**verdict.to_json_dict())

    @app.post("/v1/pair/maximal", response_model=models.VerdictResponse)
    def pair_maximal(req: models.PairRequest):
        pair = serialize.parse_pair({"f": req.f.doc(), "g": req.g.doc()})
        verdict = in_maximal_exact(
            pair, req.config.probe(), hypothesis_rules=req.config.hypothesis_rules
        )
        return models.VerdictResponse(**verdict.to_json_dict())

    @app.post("/v1/pair/split", response_model=models.SplitResponse)
    def pair_split(req: models.PairRequest):
        pair = serialize.parse_pair({"f": req.f.doc(), "g": req.g.doc()})
        return models.SplitResponse(split=is_split_exact(pair))

    @app.post("/v1/suite", response_model=models.ReportResponse)
    def suite(req: models.SuiteRequest):
        report = run_suite(
            req.suite,
            req.category,
            req.config.probe(),
            hypothesis_rules=req.config.hypothesis_rules,
            workers=req.workers,
        )
        return models.ReportResponse(**report.to_json_dict())

    return app


app = create_app()
