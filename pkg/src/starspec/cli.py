"""Command line interface.

Subcommands: classify, roots, coxeter, feasible, construct, verify,
solve-batch.  All output is JSON on stdout (deterministic for fixed seeds);
errors go to stderr with machine-readable codes.

Exit codes: 0 success/feasible, 1 infeasible, 2 degenerate or boundary,
3 construction failure, 64 usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .coxeter import DimCharPair, coxeter_char
from .feasibility import FeasibilityError, solve
from .graph import GraphError, build_star, classify, unit_vector
from .io import (
    IOError_,
    algebra_rep_from_dict,
    algebra_rep_to_dict,
    dumps,
    dumps_pretty,
    gen_dim_from_dict,
    gvec_in,
    gvec_out,
    instance_from_dict,
    verdict_to_dict,
    JSON_SCHEMAS,
)
from .reps import ConstructionError, RepError, build_graph_rep, build_hyperplane_rep, to_algebra_rep
from .roots import coxeter_series, fundamental_roots
from .transfer import TransferError, char_from_chi, dim_from_n
from .verify import commutant_dimension, verify_algebra_rep

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_DEGENERATE = 2
EXIT_CONSTRUCTION = 3
EXIT_USAGE = 64


def _fail(code: int, kind: str, message: str) -> int:
    sys.stderr.write(dumps({"error": kind, "message": message}) + "\n")
    return code


def _parse_branches(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p != ""]
    except ValueError:
        raise GraphError(f"bad branch list {text!r}")


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def cmd_classify(args) -> int:
    graph = build_star(_parse_branches(args.branches))
    cls = classify(graph)
    out = {"class": cls.kind}
    if cls.name:
        out["name"] = cls.name
    if cls.delta is not None:
        out["delta"] = [int(v) for v in cls.delta]
        out["extending"] = list(cls.extending or ())
    if cls.witness is not None:
        out["witness"] = gvec_out(cls.witness)
    print(dumps(out))
    return EXIT_OK


def cmd_roots(args) -> int:
    graph = build_star(_parse_branches(args.branches))
    cls = classify(graph)
    if cls.kind != "ExtendedDynkin":
        return _fail(EXIT_USAGE, "unsupported_graph",
                     "root tables require an extended Dynkin star")
    out: dict = {"graph": cls.name}
    if args.series:
        seeds = {"K1": 0, "K2": 1, "K3": graph.root}
        if args.series not in seeds:
            return _fail(EXIT_USAGE, "unknown_series",
                         f"series must be one of {sorted(seeds)}")
        series = coxeter_series(graph, cls, unit_vector(graph, seeds[args.series]))
        out["series"] = args.series
        out["delta_series"] = [gvec_out(s.base) for s in series.series]
    else:
        roots = fundamental_roots(
            graph, cls,
            include_negative=args.include_negative,
            include_zero=args.include_zero,
        )
        out["fundamental"] = [gvec_out(r) for r in roots]
    print(dumps(out))
    return EXIT_OK


def cmd_coxeter(args) -> int:
    graph = build_star(_parse_branches(args.branches))
    data = _load_json(args.pair)
    d = gvec_in(graph, data["d"])
    f = gvec_in(graph, data["f"])
    pair = DimCharPair(d, f)
    tokens = [t.strip() for t in args.word.split(",") if t.strip()]
    for t in tokens:
        if t not in ("even", "odd"):
            return _fail(EXIT_USAGE, "bad_token", f"unknown token {t!r}")
    print(dumps({"d": gvec_out(pair.d), "f": gvec_out(pair.f), "token": None}))
    for t in tokens:
        pair = coxeter_char(graph, t, pair)
        print(dumps({"d": gvec_out(pair.d), "f": gvec_out(pair.f), "token": t}))
    return EXIT_OK


def _verdict_exit(status: str) -> int:
    return {"feasible": EXIT_OK, "infeasible": EXIT_INFEASIBLE,
            "degenerate": EXIT_DEGENERATE}[status]


def cmd_feasible(args) -> int:
    data = _load_json(args.instance)
    inst = instance_from_dict(data)
    graph = build_star(inst.branch_lengths)
    bound = args.scan_bound or int(data.get("scan_bound", 60))
    verdict = solve(graph, inst, scan_bound=bound)
    print(dumps(verdict_to_dict(verdict)))
    return _verdict_exit(verdict.status)


def cmd_construct(args) -> int:
    data = _load_json(args.instance)
    inst = instance_from_dict(data)
    graph = build_star(inst.branch_lengths)
    seed = args.seed if args.seed is not None else int(data.get("seed", 0))
    if args.dimension:
        ddata = _load_json(args.dimension)
        if isinstance(ddata, dict):
            n = gen_dim_from_dict(ddata)
            d = dim_from_n(graph, n)
        else:
            d = gvec_in(graph, ddata)
    else:
        verdict = solve(graph, inst, scan_bound=args.scan_bound or 60)
        if not verdict.feasible:
            print(dumps(verdict_to_dict(verdict)))
            return _verdict_exit(verdict.status)
        assert verdict.witness_dimension is not None
        d = dim_from_n(graph, verdict.witness_dimension)
    cls = classify(graph)
    meta: dict = {"seed": seed, "dimension": gvec_out(d)}
    if cls.delta is not None and tuple(d) == tuple(cls.delta):
        arep = build_hyperplane_rep(inst, seed=seed)
        resid = float(np.abs(arep.weighted_sum()
                             - float(inst.gamma) * np.eye(arep.n0)).max())
        meta.update({"route": "hyperplane_optimizer", "residual": resid})
    else:
        f = char_from_chi(graph, inst)
        grep = build_graph_rep(graph, d, f)
        arep = to_algebra_rep(graph, grep, inst)
        resid = float(np.abs(arep.weighted_sum()
                             - float(inst.gamma) * np.eye(arep.n0)).max())
        meta.update({
            "route": "reflection_functors",
            "character": gvec_out(f),
            "residual": resid,
        })
    meta["commutant_dimension"] = commutant_dimension(arep)
    out = algebra_rep_to_dict(arep, metadata=meta)
    text = dumps_pretty(out)
    if args.output:
        Path(args.output).write_text(text + "\n")
        print(dumps({"written": args.output, "n0": arep.n0,
                     "residual": meta["residual"]}))
    else:
        print(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = algebra_rep_from_dict(_load_json(args.rep))
    if args.instance:
        inst = instance_from_dict(_load_json(args.instance))
        if inst != rep.instance:
            return _fail(EXIT_USAGE, "instance_mismatch",
                         "representation was built for a different instance")
    report = verify_algebra_rep(rep, tol=args.tol, spec_tol=args.spec_tol)
    out = {
        "overall": bool(report.overall),
        "commutant_dimension": commutant_dimension(rep),
        "checks": [
            {"name": name, "ok": bool(ok), "detail": detail}
            for name, ok, detail in report.checks
        ],
    }
    print(dumps(out))
    return EXIT_OK if report.overall else EXIT_INFEASIBLE


def cmd_solve_batch(args) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        return _fail(EXIT_USAGE, "not_a_directory", str(directory))
    results = []
    counts = {"feasible": 0, "infeasible": 0, "degenerate": 0, "error": 0}
    for path in sorted(directory.glob("*.json")):
        entry: dict = {"file": path.name}
        try:
            inst = instance_from_dict(_load_json(str(path)))
            graph = build_star(inst.branch_lengths)
            verdict = solve(graph, inst, scan_bound=args.scan_bound or 60)
            entry["status"] = verdict.status
            entry["branch_taken"] = verdict.branch_taken
            counts[verdict.status] += 1
        except (IOError_, TransferError, FeasibilityError, GraphError,
                json.JSONDecodeError, OSError) as exc:
            entry["status"] = "error"
            entry["message"] = str(exc)
            counts["error"] += 1
        results.append(entry)
    print(dumps({"results": results, "counts": counts}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="starspec",
        description="Spectral problem on star-shaped graphs: classification, "
                    "feasibility, and explicit constructions.",
    )
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--json-schema", action="store_true",
                   help="print file format schemas and exit")
    sub = p.add_subparsers(dest="command")

    c = sub.add_parser("classify", help="classify a star graph")
    c.add_argument("--branches", required=True, help="comma list, e.g. 2,2,2")
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser("roots", help="root tables of an extended Dynkin star")
    r.add_argument("--branches", required=True)
    r.add_argument("--series", help="K1, K2 or K3: one Coxeter orbit")
    r.add_argument("--include-negative", action="store_true")
    r.add_argument("--include-zero", action="store_true")
    r.set_defaults(func=cmd_roots)

    x = sub.add_parser("coxeter", help="apply a token word to a (d,f) pair")
    x.add_argument("--branches", required=True)
    x.add_argument("--word", required=True, help="comma list of even/odd")
    x.add_argument("--pair", required=True, help="JSON file with 'd' and 'f'")
    x.set_defaults(func=cmd_coxeter)

    f = sub.add_parser("feasible", help="decide existence for an instance")
    f.add_argument("--instance", required=True)
    f.add_argument("--scan-bound", type=int)
    f.set_defaults(func=cmd_feasible)

    b = sub.add_parser("construct", help="build an explicit representation")
    b.add_argument("--instance", required=True)
    b.add_argument("--dimension", help="target dimension JSON (optional)")
    b.add_argument("-o", "--output", help="write the representation here")
    b.add_argument("--seed", type=int)
    b.add_argument("--scan-bound", type=int)
    b.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="verify a representation file")
    v.add_argument("--rep", required=True)
    v.add_argument("--instance")
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--spec-tol", type=float, default=1e-8)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve-batch", help="solve every instance in a directory")
    s.add_argument("directory")
    s.add_argument("--scan-bound", type=int)
    s.set_defaults(func=cmd_solve_batch)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.json_schema:
        print(dumps_pretty(JSON_SCHEMAS))
        return EXIT_OK
    if not getattr(args, "func", None):
        parser.print_help()
        return EXIT_USAGE
    try:
        return args.func(args)
    except ConstructionError as exc:
        return _fail(EXIT_CONSTRUCTION, "construction_failed", str(exc))
    except (GraphError, TransferError, FeasibilityError, RepError,
            IOError_) as exc:
        return _fail(EXIT_USAGE, type(exc).__name__, str(exc))
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        return _fail(EXIT_USAGE, "bad_input", str(exc))


if __name__ == "__main__":
    sys.exit(main())
