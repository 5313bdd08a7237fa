"""Command-line surface: spectra, recognition, bounds, enumeration, generation, sweeps.

Text mode prints values rounded to 4 decimals (integers plainly); JSON mode
emits exactly one envelope ``{command, input_digest, result, format_version}``
with full double precision.  Exit codes: 0 success, 2 input error, 3
numerical failure, 4 size guard.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from .bounds import BoundsReport, full_report
from .eigen import EigenError, Spectrum, eig_sym, group_spectrum
from .graphs import (
    Graph,
    GraphFormatError,
    MatrixKind,
    generate_cdim,
    matrix,
    parse_graph_file,
    serialize_graph,
)
from .oracle import MAX_ORACLE_EDGES, SizeGuardError, enumerate_dims
from .recognition import DimCertificate, recognize_cdim
from .sweep import SweepReport, sweep_exhaustive, sweep_random

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERICAL = 3
EXIT_GUARD = 4
FORMAT_VERSION = 1

_KINDS = {
    "a": MatrixKind.ADJACENCY,
    "l": MatrixKind.LAPLACIAN,
    "q": MatrixKind.SIGNLESS_LAPLACIAN,
}


def _fmt(x: float) -> str:
    if abs(x - round(x)) < 1e-9:
        return str(int(round(x)))
    return f"{x:.4f}"


def _fmt_spectrum(spec: Spectrum) -> str:
    parts = []
    for value, mult in spec.groups:
        suffix = f"^[{mult}]" if mult > 1 else ""
        parts.append(f"{_fmt(value)}{suffix}")
    return ", ".join(parts)


def _fmt_matching(matching) -> str:
    return " ".join(f"{u}-{v}" for u, v in matching)


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _load(path: str) -> tuple[Graph, str]:
    raw = Path(path).read_bytes()
    return parse_graph_file(raw.decode("utf-8")), _digest(raw)


def _emit(args, command: str, digest: str, result: dict, text: list[str]) -> int:
    if args.json:
        envelope = {
            "command": command,
            "input_digest": digest,
            "result": result,
            "format_version": FORMAT_VERSION,
        }
        print(json.dumps(envelope, indent=2))
    else:
        for line in text:
            print(line)
    return EXIT_OK


def _cmd_spectra(args) -> int:
    g, digest = _load(args.file)
    kind = _KINDS[args.matrix]
    spec = group_spectrum(eig_sym(matrix(g, kind)).values)
    result = {
        "matrix": kind.value,
        "order": g.n,
        "groups": [{"value": value, "multiplicity": mult} for value, mult in spec.groups],
    }
    return _emit(args, "spectra", digest, result, [_fmt_spectrum(spec)])


def _certificate_json(cert: DimCertificate | None) -> dict:
    if cert is None:
        return {"found": False}
    return {
        "found": True,
        "complete": cert.complete,
        "matching": [list(e) for e in cert.matching],
        "matched_vertices": sorted(cert.matched_vertices),
        "independent": sorted(cert.independent),
    }


def _cmd_recognize(args) -> int:
    g, digest = _load(args.file)
    cert = recognize_cdim(g)
    text = ["none"] if cert is None else [f"complete DIM: {_fmt_matching(cert.matching)}"]
    return _emit(args, "recognize", digest, _certificate_json(cert), text)


def _report_json(report: BoundsReport) -> dict:
    ii = report.index_inequality
    return {
        "n": report.n,
        "min_degree": report.min_degree,
        "rho_a": report.rho_a,
        "mu_1": report.mu_1,
        "q_1": report.q_1,
        "trace_l": report.trace_l,
        "trace_q": report.trace_q,
        "index_inequality": {
            "holds": ii.holds,
            "near_equality": ii.near_equality,
            "lhs": ii.lhs,
            "rhs": ii.rhs,
        },
        "window": list(report.window) if report.window else None,
        "window_roots": list(report.window_roots) if report.window_roots else None,
        "lb_adjacency": report.lb_adjacency,
        "lb_adjacency_raw": report.lb_adjacency_raw,
        "lb_laplacian": report.lb_laplacian,
        "lb_laplacian_raw": report.lb_laplacian_raw,
        "lb_signless": report.lb_signless,
        "lb_signless_raw": report.lb_signless_raw,
        "ub_lambda_count": report.ub_lambda_count,
    }


def _report_text(report: BoundsReport) -> list[str]:
    ii = report.index_inequality
    lines = [
        f"n: {report.n}  min degree: {report.min_degree}",
        f"rho(A): {_fmt(report.rho_a)}  mu1(L): {_fmt(report.mu_1)}  q1(Q): {_fmt(report.q_1)}",
        f"trace L: {_fmt(report.trace_l)}  trace Q: {_fmt(report.trace_q)}",
        f"index inequality (n/2)^2 >= rho(rho-1): "
        f"{'holds' if ii.holds else 'fails'} ({_fmt(ii.lhs)} vs {_fmt(ii.rhs)})"
        + (" [equality]" if ii.near_equality else ""),
    ]
    if report.window is not None:
        lo, hi = report.window
        r1, r2 = report.window_roots
        lines.append(f"DIM size window: [{lo}, {hi}]  (roots {_fmt(r1)}, {_fmt(r2)})")
    else:
        lines.append("DIM size window: not applicable (nonpositive radicand)")
    for label, value, raw in (
        ("adjacency", report.lb_adjacency, report.lb_adjacency_raw),
        ("laplacian", report.lb_laplacian, report.lb_laplacian_raw),
        ("signless", report.lb_signless, report.lb_signless_raw),
    ):
        if value is None:
            lines.append(f"lower bound ({label}): not applicable (min degree 0)")
        else:
            lines.append(f"lower bound ({label}): {value}  (raw {_fmt(raw)})")
    lines.append(f"induced matching upper bound: {report.ub_lambda_count}")
    lines.append("note: DIM bounds are conditional on a DIM existing")
    return lines


def _cmd_bounds(args) -> int:
    g, digest = _load(args.file)
    report = full_report(g)
    return _emit(args, "bounds", digest, _report_json(report), _report_text(report))


def _cmd_oracle(args) -> int:
    g, digest = _load(args.file)
    result = enumerate_dims(g, max_edges=args.max_edges)
    payload = {
        "dim_count": len(result.dims),
        "dims": [[list(e) for e in dim] for dim in result.dims],
        "min_dim_size": result.min_dim_size,
        "max_dim_size": result.max_dim_size,
        "max_induced_matching": result.max_induced_matching,
    }
    if result.dims:
        text = [f"DIMs: {len(result.dims)} (sizes {result.min_dim_size}..{result.max_dim_size})"]
        text.extend(f"  {_fmt_matching(dim) or '(empty)'}" for dim in result.dims)
    else:
        text = ["no DIM"]
    text.append(f"max induced matching: {result.max_induced_matching}")
    return _emit(args, "oracle", digest, payload, text)


def _cmd_generate(args) -> int:
    g = generate_cdim(args.m, args.s)
    content = serialize_graph(g)
    Path(args.out).write_text(content, encoding="utf-8")
    result = {
        "n": g.n,
        "m": args.m,
        "s": args.s,
        "edge_count": g.edge_count,
        "path": str(args.out),
    }
    text = [
        f"wrote complete-DIM graph n={g.n} (m={args.m}, s={args.s}, "
        f"{g.edge_count} edges) to {args.out}"
    ]
    return _emit(args, "generate", _digest(content.encode("utf-8")), result, text)


def _sweep_json(report: SweepReport, params: dict) -> dict:
    payload = dict(params)
    payload.update(
        {
            "graphs_checked": report.graphs_checked,
            "dim_graphs": report.dim_graphs,
            "complete_dim_graphs": report.complete_dim_graphs,
            "equality_cases": list(report.equality_cases),
            "violations": [
                {"graph": v.graph, "check": v.check, "detail": v.detail}
                for v in report.violations
            ],
        }
    )
    return payload


def _cmd_sweep(args) -> int:
    if args.mode == "exhaustive":
        params = {"n": args.n, "mode": args.mode}
        report = sweep_exhaustive(args.n, jobs=args.jobs)
    else:
        params = {"n": args.n, "mode": args.mode, "seed": args.seed, "count": args.count}
        report = sweep_random(args.n, args.count, args.seed, jobs=args.jobs)
    digest = _digest(" ".join(f"{k}={v}" for k, v in params.items()).encode("utf-8"))
    text = [
        f"checked {report.graphs_checked} graphs (n={args.n}, {args.mode}): "
        f"{report.dim_graphs} with a DIM, {report.complete_dim_graphs} complete",
        f"equality cases: {len(report.equality_cases)}",
        f"violations: {len(report.violations)}",
    ]
    text.extend(f"  [{v.check}] {v.graph}: {v.detail}" for v in report.violations)
    return _emit(args, "sweep", digest, _sweep_json(report, params), text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dimspectra",
        description="Spectra, recognition, and eigenvalue bounds for dominating induced matchings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectra", help="grouped spectrum of a graph file")
    p.add_argument("file")
    p.add_argument("--matrix", choices=sorted(_KINDS), default="a",
                   help="a=adjacency, l=Laplacian, q=signless Laplacian")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_spectra)

    p = sub.add_parser("recognize", help="complete-DIM certificate or 'none'")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("bounds", help="all eigenvalue bounds for a graph file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("oracle", help="brute-force enumeration of all DIMs")
    p.add_argument("file")
    p.add_argument("--max-edges", type=int, default=MAX_ORACLE_EDGES)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("generate", help="write a complete-DIM graph edge list")
    p.add_argument("--m", type=int, required=True, help="matching size (>= 1)")
    p.add_argument("--s", type=int, required=True, help="independent-set size (>= 1)")
    p.add_argument("out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("sweep", help="soundness sweep over a graph corpus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except EigenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (GraphFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
