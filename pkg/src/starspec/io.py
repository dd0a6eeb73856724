"""JSON serialization: instances, vectors, matrices, representations.

Rationals travel as JSON integers when integral and as "p/q" strings
otherwise, never as floats.  Complex matrices are row-major arrays of
[re, im] pairs.  All emitters sort keys so output is byte-stable.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

import numpy as np

from .feasibility import FeasibilityVerdict
from .graph import GVec, StarGraph, build_star
from .rational import fraction_str, parse_fraction
from .reps import AlgebraRep, GraphRep
from .transfer import GeneralizedDimension, SpectralInstance, make_instance


class IOError_(ValueError):
    pass


def rational_out(x: Fraction):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else fraction_str(x)


def rational_in(v) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise IOError_(f"rationals must be integers or 'p/q' strings, got {v!r}")
    return parse_fraction(v)


def gvec_out(x: GVec) -> list:
    return [rational_out(v) for v in x]


def gvec_in(graph: StarGraph, data) -> GVec:
    if not isinstance(data, list) or len(data) != graph.n_vertices:
        raise IOError_("vector must be an array in canonical vertex order")
    return tuple(rational_in(v) for v in data)


def instance_to_dict(inst: SpectralInstance) -> dict:
    return {
        "branches": [[rational_out(a) for a in spec] for spec in inst.branches],
        "gamma": rational_out(inst.gamma),
    }


def instance_from_dict(data: dict) -> SpectralInstance:
    try:
        branches = data["branches"]
        gamma = data["gamma"]
    except (KeyError, TypeError):
        raise IOError_("instance file needs 'branches' and 'gamma'")
    if not isinstance(branches, list) or not all(isinstance(b, list) for b in branches):
        raise IOError_("'branches' must be a list of spectra")
    return make_instance(
        [[rational_in(a) for a in spec] for spec in branches], rational_in(gamma)
    )


def matrix_out(m: np.ndarray) -> list:
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(m, complex)]


def matrix_in(data) -> np.ndarray:
    try:
        return np.array(
            [[complex(c[0], c[1]) for c in row] for row in data], dtype=complex
        )
    except (TypeError, IndexError):
        raise IOError_("matrices must be row-major arrays of [re, im] pairs")


def gen_dim_to_dict(n: GeneralizedDimension) -> dict:
    return {"n0": n.n0, "branches": [list(b) for b in n.branches]}


def gen_dim_from_dict(data: dict) -> GeneralizedDimension:
    try:
        return GeneralizedDimension(
            n0=int(data["n0"]),
            branches=tuple(tuple(int(v) for v in b) for b in data["branches"]),
        )
    except (KeyError, TypeError, ValueError):
        raise IOError_("dimension file needs integer 'n0' and 'branches'")


def verdict_to_dict(v: FeasibilityVerdict) -> dict:
    out: dict[str, Any] = {
        "status": v.status,
        "feasible": v.feasible,
        "branch_taken": v.branch_taken,
        "certificate": _jsonable(v.certificate),
    }
    if v.witness_dimension is not None:
        out["witness_dimension"] = gen_dim_to_dict(v.witness_dimension)
    return out


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return rational_out(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def algebra_rep_to_dict(rep: AlgebraRep, metadata: Optional[dict] = None) -> dict:
    out = {
        "type": "algebra_rep",
        "instance": instance_to_dict(rep.instance),
        "n0": rep.n0,
        "projections": [
            [matrix_out(p) for p in branch] for branch in rep.projections
        ],
    }
    if metadata:
        out["metadata"] = _jsonable(metadata)
    return out


def algebra_rep_from_dict(data: dict) -> AlgebraRep:
    try:
        inst = instance_from_dict(data["instance"])
        n0 = int(data["n0"])
        projections = tuple(
            tuple(matrix_in(p) for p in branch) for branch in data["projections"]
        )
    except (KeyError, TypeError):
        raise IOError_("not a valid algebra representation file")
    return AlgebraRep(instance=inst, n0=n0, projections=projections)


def graph_rep_to_dict(rep: GraphRep, metadata: Optional[dict] = None) -> dict:
    out = {
        "type": "graph_rep",
        "branches": list(rep.graph.branch_lengths),
        "dims": list(rep.dims),
        "edges": {
            f"{far},{near}": matrix_out(m) for (far, near), m in sorted(rep.ops.items())
        },
    }
    if rep.character is not None:
        out["character"] = gvec_out(rep.character)
    if metadata:
        out["metadata"] = _jsonable(metadata)
    return out


def graph_rep_from_dict(data: dict) -> GraphRep:
    try:
        graph = build_star(data["branches"])
        dims = tuple(int(v) for v in data["dims"])
        ops = {}
        for key, mat in data["edges"].items():
            far, near = (int(p) for p in key.split(","))
            ops[(far, near)] = matrix_in(mat)
        character = None
        if "character" in data:
            character = gvec_in(graph, data["character"])
    except (KeyError, TypeError, ValueError):
        raise IOError_("not a valid graph representation file")
    return GraphRep(graph=graph, dims=dims, ops=ops, character=character)


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def dumps_pretty(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


JSON_SCHEMAS = {
    "instance": {
        "type": "object",
        "required": ["branches", "gamma"],
        "properties": {
            "branches": {
                "type": "array",
                "items": {
                    "type": "array",
                    "items": {"type": ["integer", "string"]},
                    "minItems": 1,
                },
                "minItems": 1,
            },
            "gamma": {"type": ["integer", "string"]},
            "scan_bound": {"type": "integer"},
            "seed": {"type": "integer"},
        },
    },
    "generalized_dimension": {
        "type": "object",
        "required": ["n0", "branches"],
        "properties": {
            "n0": {"type": "integer"},
            "branches": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "integer"}},
            },
        },
    },
    "complex_matrix": {
        "type": "array",
        "items": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "number"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
    "verdict": {
        "type": "object",
        "required": ["status", "feasible", "branch_taken"],
        "properties": {
            "status": {"enum": ["feasible", "infeasible", "degenerate"]},
            "feasible": {"type": "boolean"},
            "branch_taken": {"type": "string"},
            "witness_dimension": {"$ref": "#/generalized_dimension"},
            "certificate": {"type": "array"},
        },
    },
}
