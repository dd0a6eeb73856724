"""Existence of irreducible non-degenerate representations.

Three decision routes:

* ``iterative_feasible``: simulate the reduction of a (dimension, character)
  pair through the alternating reflection schedule, checking the positivity
  preconditions stepwise; works on every extended Dynkin star.
* ``closed_form_e6``: for the (2,2,2) star, evaluate seven frozen linear
  conditions per trajectory family, transported by exact Coxeter matrix
  products; equivalent to the iterative route on its domain, but computed
  through an entirely different code path.
* ``horn_check_e6``: the level-hyperplane case, decided by twelve strict
  Horn-type inequalities in the minimal imaginary-root dimension.

``solve`` orchestrates the routes and scans candidate real-root dimensions.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as _gcd
from typing import Literal, Optional

from .coxeter import (
    EVEN,
    ODD,
    Token,
    coxeter_dim,
    parity_matrix,
    reduction_schedule,
)
from .graph import (
    GraphClass,
    GVec,
    StarGraph,
    build_star,
    classify,
    is_positive_vector,
    unit_vector,
)
from .rational import Q, QMat, fraction_str, mat_mul, mat_vec
from .roots import all_series_bases, is_root
from .transfer import (
    GeneralizedDimension,
    SpectralInstance,
    char_from_chi,
    n_from_dim,
    nondegenerate_dim,
)


class FeasibilityError(ValueError):
    pass


Status = Literal["feasible", "infeasible", "degenerate"]


@dataclass(frozen=True)
class FeasibilityVerdict:
    status: Status
    branch_taken: str
    witness_dimension: Optional[GeneralizedDimension] = None
    certificate: tuple = field(default_factory=tuple)

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


@dataclass(frozen=True)
class Hyperplane:
    """Level condition <coeffs, chi> = 0, displayed as spectra sum = c*gamma.

    The coefficients are the ranks attached to the radical generator delta;
    existence in the minimal imaginary-root dimension forces this trace
    identity, so off the hyperplane only real-root dimensions can occur.
    """

    graph_name: str
    coefficients: tuple[Fraction, ...]

    def evaluate(self, inst: SpectralInstance) -> Fraction:
        chi = inst.chi()
        if len(chi) != len(self.coefficients):
            raise FeasibilityError("instance does not match hyperplane arity")
        return sum(c * x for c, x in zip(self.coefficients, chi))

    def display(self) -> str:
        parts = []
        names = _chi_names(len(self.coefficients) - 1)
        for c, nm in zip(self.coefficients[:-1], names[:-1]):
            if c == 0:
                continue
            parts.append(nm if c == 1 else f"{fraction_str(c)}*{nm}")
        rhs = fraction_str(-self.coefficients[-1])
        return " + ".join(parts) + f" = {rhs}*gamma"


def _chi_names(n_spectra: int) -> list[str]:
    return [f"x{i + 1}" for i in range(n_spectra)] + ["gamma"]


def hyperplane(graph: StarGraph, cls: Optional[GraphClass] = None) -> Hyperplane:
    """Trace-identity hyperplane of an extended Dynkin star."""
    cls = cls or classify(graph)
    if cls.kind != "ExtendedDynkin" or cls.delta is None:
        raise FeasibilityError("hyperplane requires an extended Dynkin graph")
    n = n_from_dim(graph, cls.delta)
    coeffs = [Q(v) for v in n.flat()]
    coeffs[-1] = -coeffs[-1]
    return Hyperplane(graph_name=cls.name or "", coefficients=tuple(coeffs))


def on_hyperplane(graph: StarGraph, inst: SpectralInstance) -> bool:
    return hyperplane(graph).evaluate(inst) == 0


# ---------------------------------------------------------------------------
# Horn case for the (2,2,2) star
# ---------------------------------------------------------------------------

# coefficients on (a1, a2, b1, b2, c1, c2); all inequalities are strict > 0
HORN_E6: tuple[tuple[str, tuple[int, ...]], ...] = (
    ("2(a1+b1) > a2+b2+c1+c2", (2, -1, 2, -1, -1, -1)),
    ("2(a1+c1) > a2+b1+b2+c2", (2, -1, -1, -1, 2, -1)),
    ("2(b1+c1) > a1+a2+b2+c2", (-1, -1, 2, -1, 2, -1)),
    ("a1+a2+b1+c1 > 2(b2+c2)", (1, 1, 1, -2, 1, -2)),
    ("2(a2+b2+c1) > a1+b1+c2", (-1, 2, -1, 2, 2, -1)),
    ("a1+b1+b2+c1 > 2(a2+c2)", (1, -2, 1, 1, 1, -2)),
    ("2(a2+b1+c2) > a1+b2+c1", (-1, 2, 2, -1, -1, 2)),
    ("2(a1+b2+c2) > a2+b1+c1", (2, -1, -1, 2, -1, 2)),
    ("a1+a2+b1+b2+c2 > 2c1", (1, 1, 1, 1, -2, 1)),
    ("a1+b1+c1+c2 > 2(a2+b2)", (1, -2, 1, -2, 1, 1)),
    ("a1+a2+b2+c1+c2 > 2b1", (1, 1, -2, 1, 1, 1)),
    ("a2+b1+b2+c1+c2 > 2a1", (-2, 1, 1, 1, 1, 1)),
)


def horn_check_e6(inst: SpectralInstance) -> FeasibilityVerdict:
    """Existence in generalized dimension (1,1;1,1;1,1;3) on the hyperplane.

    Feasible iff the chi parameters lie on the hyperplane and all twelve
    strict inequalities hold; equality in any of them is reported as a
    boundary case whose status the criterion does not decide.
    """
    graph = e6_graph()
    if inst.branch_lengths != (2, 2, 2):
        raise FeasibilityError("the Horn criterion applies to the (2,2,2) star")
    if not on_hyperplane(graph, inst):
        raise FeasibilityError("instance is off the hyperplane")
    chi6 = inst.chi()[:6]
    cert = []
    n_neg = 0
    n_zero = 0
    for name, coeffs in HORN_E6:
        margin = sum(Q(c) * x for c, x in zip(coeffs, chi6))
        ok = margin > 0
        n_neg += margin < 0
        n_zero += margin == 0
        cert.append((name, fraction_str(margin), bool(ok)))
    witness = GeneralizedDimension(n0=3, branches=((1, 1), (1, 1), (1, 1)))
    if n_neg:
        return FeasibilityVerdict(
            status="infeasible", branch_taken="horn_hyperplane",
            certificate=tuple(cert),
        )
    if n_zero:
        cert.append(("boundary", "existence undecided at equality", False))
        return FeasibilityVerdict(
            status="degenerate", branch_taken="horn_hyperplane",
            certificate=tuple(cert),
        )
    return FeasibilityVerdict(
        status="feasible", branch_taken="horn_hyperplane",
        witness_dimension=witness, certificate=tuple(cert),
    )


# ---------------------------------------------------------------------------
# Closed-form route on the (2,2,2) star
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeriesFamily:
    """One simple-seeded trajectory family of real-root dimensions."""

    name: str
    seed_vertex: int
    first_token: Token
    period: int
    min_k: int
    anchor_k: int
    anchor_rows: QMat

    def token_at(self, level: int) -> Token:
        """Parity map that builds the given level from the one below."""
        alt = (level - 2) % 2 == 0
        if alt:
            return self.first_token
        return ODD if self.first_token == EVEN else EVEN


def _rows(mat) -> QMat:
    return tuple(tuple(Q(v) for v in row) for row in mat)


# Frozen anchor condition matrices (rows act on characters in vertex order;
# terminal-vertex row last, remaining vertices in canonical order).  Each is
# the exact stepwise condition matrix of its anchor dimension; the tests
# re-derive them from the schedule machinery.
_ANCHOR_LEAF = _rows([
    (3, -3, 1, -3, 1, -3, 5),
    (1, -1, 1, -2, 1, -1, 2),
    (3, -3, 2, -3, 1, -2, 4),
    (1, -1, 1, -1, 1, -2, 2),
    (3, -3, 1, -2, 2, -3, 4),
    (5, -4, 2, -4, 2, -4, 6),
    (2, -2, 1, -2, 1, -2, 3),
])
_ANCHOR_INNER = _rows([
    (0, 0, 1, -1, 1, -1, 1),
    (0, 0, 0, -1, 0, 0, 1),
    (1, -1, 0, -1, 1, -1, 2),
    (0, 0, 0, 0, 0, -1, 1),
    (1, -1, 1, -1, 0, -1, 2),
    (2, -1, 1, -2, 1, -2, 3),
    (1, -1, 1, -2, 1, -2, 3),
])
_ANCHOR_ROOT = _rows([
    (-1, 1, 0, 0, 0, 0, 0),
    (-1, 1, 0, 1, 0, 1, -1),
    (0, 0, -1, 1, 0, 0, 0),
    (0, 1, -1, 1, 0, 1, -1),
    (0, 0, 0, 0, -1, 1, 0),
    (0, 1, 0, 1, -1, 1, -1),
    (-1, 2, -1, 2, -1, 2, -2),
])

FAMILY_LEAF = SeriesFamily("leaf", 0, EVEN, 12, 15, 13, _ANCHOR_LEAF)
FAMILY_INNER = SeriesFamily("inner", 1, ODD, 6, 8, 6, _ANCHOR_INNER)
FAMILY_ROOT = SeriesFamily("root", 6, EVEN, 4, 5, 4, _ANCHOR_ROOT)

FAMILIES: dict[str, SeriesFamily] = {
    f.name: f for f in (FAMILY_LEAF, FAMILY_INNER, FAMILY_ROOT)
}


@functools.lru_cache(maxsize=1)
def e6_graph() -> StarGraph:
    return build_star([2, 2, 2])


def trajectory_dim(graph: StarGraph, family: SeriesFamily, k: int) -> GVec:
    """k-th dimension of a family: alternating reflections of the seed."""
    if k < 1:
        raise FeasibilityError("trajectory index starts at 1")
    d = unit_vector(graph, family.seed_vertex)
    for level in range(2, k + 1):
        d = coxeter_dim(graph, family.token_at(level), d)
    return d


@functools.lru_cache(maxsize=256)
def _condition_matrix_e6(family_name: str, k: int) -> QMat:
    """Seven f-side condition rows for the family's k-th dimension.

    Built from the frozen anchor by full parity-matrix products; valid for
    k at or above the anchor where every intermediate dimension is sincere.
    """
    family = FAMILIES[family_name]
    graph = e6_graph()
    rows = family.anchor_rows
    for level in range(family.anchor_k + 1, k + 1):
        token = family.token_at(level)
        other = ODD if token == EVEN else EVEN
        rows = mat_mul(rows, parity_matrix(graph, other))
    return rows


def closed_form_e6(
    inst: SpectralInstance, family: SeriesFamily | str, k: int
) -> FeasibilityVerdict:
    """Decide existence in the family's k-th real-root dimension.

    Feasible iff six transported character values are strictly positive and
    the terminal one is exactly zero.  Only indices in the family's stated
    non-degenerate range are allowed; smaller ones belong to the iterative
    route.
    """
    if isinstance(family, str):
        family = FAMILIES[family]
    if inst.branch_lengths != (2, 2, 2):
        raise FeasibilityError("closed-form route applies to the (2,2,2) star")
    if k < family.min_k:
        raise FeasibilityError(
            f"index {k} below the closed-form range of family "
            f"'{family.name}' (needs k >= {family.min_k})"
        )
    graph = e6_graph()
    rows = _condition_matrix_e6(family.name, k)
    f = char_from_chi(graph, inst)
    vals = mat_vec(rows, f)
    cert = tuple(
        (f"condition {i + 1}", fraction_str(v), bool(v > 0)) for i, v in enumerate(vals[:6])
    ) + (("terminal", fraction_str(vals[6]), vals[6] == 0),)
    branch = f"closed_form({family.name}, k={k})"
    if vals[6] != 0 or any(v < 0 for v in vals[:6]):
        return FeasibilityVerdict(status="infeasible", branch_taken=branch,
                                  certificate=cert)
    if any(v == 0 for v in vals[:6]):
        return FeasibilityVerdict(status="degenerate", branch_taken=branch,
                                  certificate=cert)
    d = trajectory_dim(graph, family, k)
    witness = n_from_dim(graph, d)
    return FeasibilityVerdict(status="feasible", branch_taken=branch,
                              witness_dimension=witness, certificate=cert)


# ---------------------------------------------------------------------------
# Iterative route (any extended Dynkin star)
# ---------------------------------------------------------------------------

def iterative_feasible(
    graph: StarGraph, d: GVec, f: GVec, collect_trajectory: bool = True
) -> FeasibilityVerdict:
    """Reduce (d, f) along the alternating schedule and check every step.

    d must be a positive real root that the schedule takes to a simple one;
    the pair is feasible iff the character stays strictly positive on every
    active support and off-support vertex along the way and vanishes at the
    terminal vertex.  Zero margins are reported as degenerate.
    """
    kind = is_root(graph, d)
    if kind != "real" or not is_positive_vector(d):
        raise FeasibilityError(f"dimension {d} is not a positive real root")
    schedule = reduction_schedule(graph, d)
    if schedule is None:
        raise FeasibilityError(
            "dimension does not reduce to a simple root (imaginary or "
            "stalled); the hyperplane route applies instead"
        )
    # all conditions are homogeneous: clear denominators once and walk the
    # schedule in plain integer arithmetic
    scale = 1
    for v in f:
        den = Fraction(v).denominator
        scale = scale * den // _gcd(scale, den)
    fcur = [int(v * scale) for v in f]
    neighbors = graph.neighbors
    strict: list[int] = []
    traj = []
    for dcur, token in schedule.steps:
        act = graph.even_vertices() if token == EVEN else graph.odd_vertices()
        other = graph.odd_vertices() if token == EVEN else graph.even_vertices()
        for g in range(graph.n_vertices):
            if dcur[g] == 0:
                strict.append(fcur[g])
        for g in act:
            if dcur[g] != 0:
                strict.append(fcur[g])
        if collect_trajectory:
            traj.append((dcur, token, list(fcur)))
        nf = list(fcur)
        for g in other:
            if dcur[g] != 0:
                nf[g] = -fcur[g] + sum(fcur[h] for h in neighbors[g])
        fcur = nf
    g_term = schedule.terminal
    eq = fcur[g_term]
    for g in range(graph.n_vertices):
        if g != g_term:
            strict.append(fcur[g])
    if collect_trajectory:
        traj.append((unit_vector(graph, g_term), "terminal", fcur))
    cert: tuple = (
        ("terminal_value", fraction_str(Q(eq, scale)), eq == 0),
    )
    if collect_trajectory:
        steps_entry = (
            "steps",
            tuple(
                ([int(x) for x in dd], tok,
                 [fraction_str(Q(x, scale)) for x in ff])
                for dd, tok, ff in traj
            ),
        )
        cert = (steps_entry,) + cert
    if eq != 0 or any(v < 0 for v in strict):
        return FeasibilityVerdict(status="infeasible", branch_taken="iterative",
                                  certificate=cert)
    if any(v == 0 for v in strict):
        return FeasibilityVerdict(status="degenerate", branch_taken="iterative",
                                  certificate=cert)
    return FeasibilityVerdict(
        status="feasible", branch_taken="iterative",
        witness_dimension=n_from_dim(graph, d), certificate=cert,
    )


# ---------------------------------------------------------------------------
# Orchestration
# ---------------------------------------------------------------------------

def candidate_dimensions(
    graph: StarGraph, cls: GraphClass, bound: int
) -> list[GVec]:
    """Positive real roots with nondegenerate chains and root entry <= bound,
    sorted by root entry then lexicographically."""
    if cls.kind != "ExtendedDynkin" or cls.delta is None:
        raise FeasibilityError("candidate scan requires an extended Dynkin graph")
    return _candidate_dimensions_cached(graph, cls.delta, bound)


@functools.lru_cache(maxsize=64)
def _candidate_dimensions_cached(
    graph: StarGraph, delta: GVec, bound: int
) -> list[GVec]:
    cls = classify(graph)
    out = set()
    for base in all_series_bases(graph, cls):
        k = 0
        while True:
            member = tuple(b + k * d for b, d in zip(base, delta))
            if member[graph.root] > bound:
                break
            if is_positive_vector(member) and nondegenerate_dim(graph, member):
                out.add(member)
            k += 1
    return sorted(out, key=lambda v: (v[graph.root], v))


def solve(
    graph: StarGraph,
    inst: SpectralInstance,
    scan_bound: int = 60,
) -> FeasibilityVerdict:
    """Decide existence of an irreducible non-degenerate representation.

    On the hyperplane the imaginary-root dimension is tested by the Horn
    criterion (for the (2,2,2) star); real-root dimensions are scanned in
    order of increasing ambient dimension up to the bound.  Off the
    hyperplane no imaginary-root witness is possible, so the scan is
    exhaustive for the reported window.
    """
    cls = classify(graph)
    if cls.kind != "ExtendedDynkin":
        raise FeasibilityError("solve requires an extended Dynkin star")
    if inst.branch_lengths != graph.branch_lengths:
        raise FeasibilityError("instance does not match the graph")
    f = char_from_chi(graph, inst)
    on_h = on_hyperplane(graph, inst)
    is_e6 = cls.name == "E6~"
    horn: Optional[FeasibilityVerdict] = None
    horn_note = None
    if on_h and is_e6:
        horn = horn_check_e6(inst)
    elif on_h:
        horn_note = (
            "hyperplane_regime",
            "imaginary-root existence not decided for this graph",
            False,
        )
    candidates = candidate_dimensions(graph, cls, scan_bound)
    delta_n0 = int(cls.delta[graph.root]) if cls.delta else 0
    scanned = 0
    boundary_seen = False
    for d in candidates:
        if horn is not None and d[graph.root] > delta_n0:
            if horn.feasible:
                return horn
            boundary_seen = boundary_seen or horn.status == "degenerate"
            horn = None
        try:
            verdict = iterative_feasible(graph, d, f, collect_trajectory=False)
        except FeasibilityError:
            continue
        scanned += 1
        if verdict.feasible:
            return FeasibilityVerdict(
                status="feasible",
                branch_taken=f"iterative(d={[int(x) for x in d]})",
                witness_dimension=verdict.witness_dimension,
                certificate=verdict.certificate,
            )
        boundary_seen = boundary_seen or verdict.status == "degenerate"
    if horn is not None:
        if horn.feasible:
            return horn
        boundary_seen = boundary_seen or horn.status == "degenerate"
    cert = [(
        "exhausted_scan",
        f"no feasible real-root dimension with root entry <= {scan_bound} "
        f"({scanned} candidates tested)",
        True,
    )]
    if horn_note is not None:
        cert.append(horn_note)
    status: Status = "degenerate" if boundary_seen else "infeasible"
    return FeasibilityVerdict(
        status=status, branch_taken="exhausted", certificate=tuple(cert)
    )
