"""Command-line client for the exactcat service.

The CLI is a thin HTTP client: by default it drives the FastAPI app
in-process (no server needed); ``--server URL`` points it at a running
instance instead.  Exit codes: 0 success/yes/no violations, 1 no or
violations found, 2 input error, 3 undecided (probe budget exhausted).
"""

from __future__ import annotations

import asyncio
import json
import os
import sys

import click
import httpx

from .seeding import DEFAULT_SEED
from .serialize import canonical_json

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_UNKNOWN = 3


class ServiceClient:
    def __init__(self, base_url: str | None = None):
        self.base_url = base_url

    def post(self, path: str, payload: dict) -> tuple[int, dict]:
        if self.base_url:
            with httpx.Client(base_url=self.base_url, timeout=600.0) as client:
                response = client.post(path, json=payload)
                return response.status_code, response.json()
        return asyncio.run(self._post_in_process(path, payload))

    async def _post_in_process(self, path: str, payload: dict) -> tuple[int, dict]:
        from .service import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://exactcat.local", timeout=600.0
        ) as client:
            response = await client.post(path, json=payload)
            return response.status_code, response.json()


def _load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    except json.JSONDecodeError as exc:
        click.echo(f"error: malformed JSON in {path}: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    if not isinstance(doc, dict):
        click.echo(f"error: {path}: expected a JSON object", err=True)
        sys.exit(EXIT_INPUT)
    return doc


def _take(doc: dict, key: str, path: str) -> dict:
    if key not in doc:
        click.echo(f"error: {path}: missing top-level field {key!r}", err=True)
        sys.exit(EXIT_INPUT)
    return doc[key]


def _seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("EXACTCAT_SEED")
    if env:
        try:
            return int(env)
        except ValueError:
            click.echo(f"error: EXACTCAT_SEED is not an integer: {env!r}", err=True)
            sys.exit(EXIT_INPUT)
    return DEFAULT_SEED


def _request(ctx, path: str, payload: dict) -> dict:
    status, body = ctx.obj["client"].post(path, payload)
    if status == 409:
        _emit(ctx, body)
        sys.exit(EXIT_VIOLATION)
    if status >= 400:
        field = body.get("field") if isinstance(body, dict) else None
        message = body.get("error", body) if isinstance(body, dict) else body
        if isinstance(body, dict) and "detail" in body:
            message = body["detail"]
        where = f" (field: {field})" if field else ""
        click.echo(f"error: {message}{where}", err=True)
        sys.exit(EXIT_INPUT)
    return body


def _emit(ctx, doc: dict, text: str | None = None) -> None:
    if ctx.obj["format"] == "json" or text is None:
        click.echo(canonical_json(doc))
    else:
        click.echo(text)


# -- text rendering ---------------------------------------------------------

def _matrix_lines(data: list, indent: str = "  ") -> list:
    if not data:
        return [indent + "(0 rows)"]
    cells = [[str(x) for x in row] for row in data]
    if not cells[0]:
        return [indent + f"({len(cells)} rows, 0 cols)"]
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    return [
        indent + "[ " + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + " ]"
        for row in cells
    ]


def _obj_text(doc: dict) -> str:
    if "rank" in doc:
        return f"rank {doc['rank']}"
    if "sub" in doc:
        k = len(doc["sub"][0]) if doc["sub"] and doc["sub"][0] else 0
        return f"dim {doc['dim']} (sub dim {k})"
    return f"dim {doc['dim']}"


def _mor_text(label: str, doc: dict) -> str:
    head = f"{label}: {doc['category']} {_obj_text(doc['dom'])} -> {_obj_text(doc['cod'])}"
    return "\n".join([head] + _matrix_lines(doc["matrix"]))


def _square_text(doc: dict) -> str:
    if doc.get("kind") == "pullback":
        names = ("g", "t", "p_Y", "p_T")
        head = f"pullback object P: {_obj_text(doc['P'])}"
    else:
        names = ("f", "t", "s_Y", "s_T")
        head = f"pushout object S: {_obj_text(doc['S'])}"
    return "\n".join([head] + [_mor_text(n, doc[n]) for n in names])


def _witness_text(witness: dict | None) -> str:
    if not witness:
        return ""
    parts = []
    if "reason" in witness:
        parts.append(f"reason: {witness['reason']}")
    if "t" in witness:
        parts.append(_mor_text("t", witness["t"]))
    if "square" in witness:
        parts.append(_square_text(witness["square"]))
    if "pair" in witness:
        parts.append(_mor_text("f", witness["pair"]["f"]))
        parts.append(_mor_text("g", witness["pair"]["g"]))
    return "\n".join(parts)


def _verdict_exit(ctx, verdict: dict) -> None:
    outcome = verdict["outcome"]
    if outcome == "yes":
        _emit(ctx, verdict, f"verdict: yes ({verdict['justification']})")
        sys.exit(EXIT_OK)
    if outcome == "no":
        text = "verdict: no\n" + _witness_text(verdict.get("witness"))
        _emit(ctx, verdict, text.rstrip())
        sys.exit(EXIT_VIOLATION)
    _emit(ctx, verdict, f"verdict: unknown (probe budget {verdict['budget']} exhausted)")
    sys.exit(EXIT_UNKNOWN)


def _report_text(report: dict) -> str:
    lines = [
        f"suite {report['suite']} on {report['instance']}: "
        f"{report['cases']} cases, {len(report['violations'])} violations, "
        f"{report['unknown']} unknown (seed {report['config']['seed']})"
    ]
    if report.get("aborted"):
        lines.append(f"aborted: {report['aborted']}")
    if report.get("findings"):
        lines.append(f"findings: {canonical_json(report['findings'])}")
    for violation in report["violations"]:
        lines.append(f"violation [{violation['check']}] case {violation['case']}: "
                     f"{violation['reason']}")
        diagram = violation.get("diagram")
        if diagram:
            if "kind" in diagram:
                lines.append(_square_text(diagram))
            elif "square" in diagram:
                lines.append(_witness_text(diagram))
            elif "morphisms" in diagram:
                for name, mor in diagram["morphisms"].items():
                    lines.append(_mor_text(name, mor))
            elif "f" in diagram and "g" in diagram:
                lines.append(_mor_text("f", diagram["f"]))
                lines.append(_mor_text("g", diagram["g"]))
            elif "category" in diagram:
                lines.append(_mor_text("witness", diagram))
    return "\n".join(lines)


def _config_payload(seed, samples, max_dim, max_entry, hypothesis_rules) -> dict:
    return {
        "seed": _seed(seed),
        "samples": samples,
        "max_dim": max_dim,
        "max_entry": max_entry,
        "hypothesis_rules": hypothesis_rules,
    }


def probe_options(fn):
    fn = click.option("--hypothesis-rules/--no-hypothesis-rules", default=True,
                      help="Trust instance rules flagged as hypotheses.")(fn)
    fn = click.option("--max-entry", type=int, default=3, show_default=True)(fn)
    fn = click.option("--max-dim", type=int, default=3, show_default=True)(fn)
    fn = click.option("--seed", type=int, default=None,
                      help="Sampling seed [default: EXACTCAT_SEED or 42].")(fn)
    fn = click.option("--samples", type=int, default=100, show_default=True)(fn)
    return fn


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Remote service base URL; default runs the app in-process.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
@click.pass_context
def main(ctx, server, fmt):
    """Exact-arithmetic kernels, cokernels, semi-stability and exactness checks."""
    ctx.ensure_object(dict)
    ctx.obj["client"] = ServiceClient(server)
    ctx.obj["format"] = fmt


@main.command()
@click.argument("path", type=click.Path())
@click.pass_context
def kernel(ctx, path):
    """Kernel object and inclusion of the morphism in PATH."""
    body = _request(ctx, "/v1/morphism/kernel", {"morphism": _load_document(path)})
    text = f"kernel object: {_obj_text(body['object'])}\n" + _mor_text("inclusion", body["inclusion"])
    _emit(ctx, body, text)


@main.command()
@click.argument("path", type=click.Path())
@click.pass_context
def cokernel(ctx, path):
    """Cokernel object and projection of the morphism in PATH."""
    body = _request(ctx, "/v1/morphism/cokernel", {"morphism": _load_document(path)})
    text = f"cokernel object: {_obj_text(body['object'])}\n" + _mor_text("projection", body["projection"])
    _emit(ctx, body, text)


@main.command()
@click.argument("path", type=click.Path())
@click.pass_context
def classify(ctx, path):
    """Six-way profile: mono/epi/iso/kernel/cokernel/strict."""
    body = _request(ctx, "/v1/morphism/classify", {"morphism": _load_document(path)})
    text = "  ".join(f"{k}={'yes' if v else 'no'}" for k, v in body.items())
    _emit(ctx, body, text)


@main.command()
@click.argument("path", type=click.Path())
@click.pass_context
def strict(ctx, path):
    """Coimage-to-image factorization and strictness."""
    body = _request(ctx, "/v1/morphism/strict", {"morphism": _load_document(path)})
    text = "\n".join(
        [
            f"strict: {'yes' if body['strict'] else 'no'}",
            _mor_text("induced", body["induced"]),
            _mor_text("coimage projection", body["coim_projection"]),
            _mor_text("image inclusion", body["image_inclusion"]),
        ]
    )
    _emit(ctx, body, text)


@main.command()
@click.argument("path", type=click.Path())
@click.pass_context
def pullback(ctx, path):
    """Pullback of the cospan file {"g": ..., "t": ...}."""
    doc = _load_document(path)
    payload = {"g": _take(doc, "g", path), "t": _take(doc, "t", path)}
    body = _request(ctx, "/v1/square/pullback", payload)
    _emit(ctx, body, _square_text(body))


@main.command()
@click.argument("path", type=click.Path())
@click.pass_context
def pushout(ctx, path):
    """Pushout of the span file {"f": ..., "t": ...}."""
    doc = _load_document(path)
    payload = {"f": _take(doc, "f", path), "t": _take(doc, "t", path)}
    body = _request(ctx, "/v1/square/pushout", payload)
    _emit(ctx, body, _square_text(body))


@main.command("semistable-kernel")
@click.argument("path", type=click.Path())
@probe_options
@click.pass_context
def semistable_kernel(ctx, path, samples, seed, max_dim, max_entry, hypothesis_rules):
    """Semi-stability verdict for the kernel in PATH."""
    payload = {
        "morphism": _load_document(path),
        "config": _config_payload(seed, samples, max_dim, max_entry, hypothesis_rules),
    }
    _verdict_exit(ctx, _request(ctx, "/v1/semistable/kernel", payload))


@main.command("semistable-cokernel")
@click.argument("path", type=click.Path())
@probe_options
@click.pass_context
def semistable_cokernel(ctx, path, samples, seed, max_dim, max_entry, hypothesis_rules):
    """Semi-stability verdict for the cokernel in PATH."""
    payload = {
        "morphism": _load_document(path),
        "config": _config_payload(seed, samples, max_dim, max_entry, hypothesis_rules),
    }
    _verdict_exit(ctx, _request(ctx, "/v1/semistable/cokernel", payload))


@main.command("pair-check")
@click.argument("path", type=click.Path())
@probe_options
@click.pass_context
def pair_check(ctx, path, samples, seed, max_dim, max_entry, hypothesis_rules):
    """Maximal-exact-structure membership for the pair file {"f":..., "g":...}."""
    doc = _load_document(path)
    payload = {
        "f": _take(doc, "f", path),
        "g": _take(doc, "g", path),
        "config": _config_payload(seed, samples, max_dim, max_entry, hypothesis_rules),
    }
    _verdict_exit(ctx, _request(ctx, "/v1/pair/maximal", payload))


@main.command("split-check")
@click.argument("path", type=click.Path())
@click.pass_context
def split_check(ctx, path):
    """Whether the pair file {"f":..., "g":...} is split exact."""
    doc = _load_document(path)
    payload = {"f": _take(doc, "f", path), "g": _take(doc, "g", path)}
    body = _request(ctx, "/v1/pair/split", payload)
    _emit(ctx, body, f"split: {'yes' if body['split'] else 'no'}")
    sys.exit(EXIT_OK if body["split"] else EXIT_VIOLATION)


@main.command()
@click.argument("name", type=click.Choice(
    ["universal", "transport", "axioms", "kelly", "theorem", "structure"]))
@click.option("--category", required=True,
              type=click.Choice(["FinVectQ", "LatticeZ", "MonoPairsQ"]))
@click.option("--workers", type=int, default=0, show_default=True,
              help="Parallel sample evaluation; reports are identical either way.")
@probe_options
@click.pass_context
def suite(ctx, name, category, workers, samples, seed, max_dim, max_entry, hypothesis_rules):
    """Run a property suite and report violations."""
    payload = {
        "suite": name,
        "category": category,
        "workers": workers,
        "config": _config_payload(seed, samples, max_dim, max_entry, hypothesis_rules),
    }
    body = _request(ctx, "/v1/suite", payload)
    _emit(ctx, body, _report_text(body))
    failed = body["violations"] or body.get("aborted")
    sys.exit(EXIT_VIOLATION if failed else EXIT_OK)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Start the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
