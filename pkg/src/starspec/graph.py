"""Star-shaped graphs, their quadratic form, and Dynkin classification.

A star graph is a tree with one root of degree n and n simple paths
(branches) attached.  Vertices are integers in a fixed canonical order:
branch 1 from leaf to innermost vertex, then branch 2, and so on, with the
root last.  All vectors on the graph ("G-vectors") are tuples of rationals
in that order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Literal, Optional, Sequence

from .rational import Q, QMat, QVec, is_positive_definite, nullspace, qvec

GVec = QVec

ODD = "odd"
EVEN = "even"
Parity = Literal["odd", "even"]


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class StarGraph:
    """Star-shaped tree with a proper 2-coloring (root is odd).

    ``branches[b]`` lists vertex indices of branch ``b`` from the leaf
    inward; ``root`` is the last index.  ``parity[v]`` alternates along each
    branch so that every edge joins an odd and an even vertex.
    """

    branch_lengths: tuple[int, ...]
    branches: tuple[tuple[int, ...], ...] = field(repr=False)
    root: int = field(repr=False)
    neighbors: tuple[tuple[int, ...], ...] = field(repr=False)
    parity: tuple[Parity, ...] = field(repr=False)

    @property
    def n_vertices(self) -> int:
        return self.root + 1

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for path in self.branches:
            for a, b in zip(path, path[1:]):
                out.append((a, b))
            out.append((path[-1], self.root))
        return tuple(out)

    def odd_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n_vertices) if self.parity[v] == ODD)

    def even_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n_vertices) if self.parity[v] == EVEN)

    def vertex_label(self, v: int) -> str:
        if v == self.root:
            return "g0"
        for b, path in enumerate(self.branches):
            if v in path:
                return f"b{b + 1}.{path.index(v)}"
        raise GraphError(f"unknown vertex {v}")


def build_star(branch_lengths: Sequence[int]) -> StarGraph:
    """Build the star with the given branch lengths (vertices per branch)."""
    lengths = tuple(int(m) for m in branch_lengths)
    if not lengths:
        raise GraphError("at least one branch is required")
    if any(m < 1 for m in lengths):
        raise GraphError("branch lengths must be positive")
    branches = []
    idx = 0
    for m in lengths:
        branches.append(tuple(range(idx, idx + m)))
        idx += m
    root = idx
    nbr: list[list[int]] = [[] for _ in range(root + 1)]
    for path in branches:
        for a, b in zip(path, path[1:]):
            nbr[a].append(b)
            nbr[b].append(a)
        nbr[path[-1]].append(root)
        nbr[root].append(path[-1])
    parity: list[Parity] = [ODD] * (root + 1)
    for m, path in zip(lengths, branches):
        for t, v in enumerate(path):
            dist_to_root = m - t
            parity[v] = ODD if dist_to_root % 2 == 0 else EVEN
    return StarGraph(
        branch_lengths=lengths,
        branches=tuple(branches),
        root=root,
        neighbors=tuple(tuple(ns) for ns in nbr),
        parity=tuple(parity),
    )


def gvector(graph: StarGraph, entries: Sequence) -> GVec:
    v = qvec(entries)
    if len(v) != graph.n_vertices:
        raise GraphError(
            f"vector has {len(v)} entries, graph has {graph.n_vertices} vertices"
        )
    return v


def unit_vector(graph: StarGraph, v: int) -> GVec:
    return tuple(Q(int(i == v)) for i in range(graph.n_vertices))


def is_positive_vector(x: GVec) -> bool:
    """x > 0 in the G-vector sense: nonzero with all entries >= 0."""
    return any(e != 0 for e in x) and all(e >= 0 for e in x)


def tits_form(graph: StarGraph, x: GVec) -> Fraction:
    """q(x) = sum x_i^2 - sum over edges x_i x_j (each edge once)."""
    if len(x) != graph.n_vertices:
        raise GraphError("vector/graph mismatch")
    s = sum(e * e for e in x)
    for a, b in graph.edges:
        s -= x[a] * x[b]
    return Fraction(s)


def bilinear_form(graph: StarGraph, x: GVec, y: GVec) -> Fraction:
    """(x, y) = q(x+y) - q(x) - q(y); symmetric, with (x,x) = 2 q(x)."""
    if len(x) != graph.n_vertices or len(y) != graph.n_vertices:
        raise GraphError("vector/graph mismatch")
    xy = tuple(a + b for a, b in zip(x, y))
    return tits_form(graph, xy) - tits_form(graph, x) - tits_form(graph, y)


def form_matrix(graph: StarGraph) -> QMat:
    """Gram matrix of the bilinear form: 2I minus the adjacency matrix."""
    n = graph.n_vertices
    m = [[Q(0)] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = Q(2)
    for a, b in graph.edges:
        m[a][b] = Q(-1)
        m[b][a] = Q(-1)
    return tuple(tuple(row) for row in m)


@dataclass(frozen=True)
class GraphClass:
    """Classification of a star graph by its quadratic form.

    kind 'Dynkin': form positive definite.  kind 'ExtendedDynkin': positive
    semi-definite with one-dimensional radical, generated by the minimal
    positive integer vector ``delta``; ``extending`` lists the vertices where
    delta equals 1.  kind 'Wild': indefinite, with a nonnegative ``witness``
    of negative form value.
    """

    kind: Literal["Dynkin", "ExtendedDynkin", "Wild"]
    name: Optional[str] = None
    delta: Optional[GVec] = None
    extending: Optional[tuple[int, ...]] = None
    witness: Optional[GVec] = None


def _dynkin_name(lengths: tuple[int, ...]) -> str:
    arms = sorted(m for m in lengths if m > 0)
    total = sum(arms) + 1
    if len(arms) <= 2:
        return f"A{total}"
    if arms[:-1] == [1, 1] and len(arms) == 3:
        return f"D{total}"
    if arms == [1, 2, 2]:
        return "E6"
    if arms == [1, 2, 3]:
        return "E7"
    if arms == [1, 2, 4]:
        return "E8"
    raise GraphError(f"unexpected Dynkin arm profile {arms}")


def _extended_name(lengths: tuple[int, ...]) -> str:
    arms = sorted(lengths)
    if arms == [1, 1, 1, 1]:
        return "D4~"
    if arms == [2, 2, 2]:
        return "E6~"
    if arms == [1, 3, 3]:
        return "E7~"
    if arms == [1, 2, 5]:
        return "E8~"
    raise GraphError(f"unexpected extended Dynkin arm profile {arms}")


def _ramp_witness(graph: StarGraph) -> GVec:
    """Nonnegative integer vector with q < 0 on every wild star.

    The root gets N = lcm of the arm lengths p_j = m_j + 1; each branch
    ramps linearly down toward the leaf.  A direct computation gives
    q = (N^2/2) (2 - n + sum 1/p_j), negative exactly in the wild range.
    """
    ps = [m + 1 for m in graph.branch_lengths]
    big = 1
    for p in ps:
        big = big * p // gcd(big, p)
    x = [Q(0)] * graph.n_vertices
    x[graph.root] = Q(big)
    for path, p in zip(graph.branches, ps):
        for t, v in enumerate(path):
            dist = len(path) - t
            x[v] = Q(big * (p - dist), p)
    return tuple(x)


def classify(graph: StarGraph) -> GraphClass:
    """Classify by exact positive (semi)definiteness of the form."""
    m = form_matrix(graph)
    if is_positive_definite(m):
        return GraphClass(kind="Dynkin", name=_dynkin_name(graph.branch_lengths))
    kernel = nullspace(m)
    if len(kernel) == 1:
        v = kernel[0]
        denom = 1
        for e in v:
            denom = denom * e.denominator // gcd(denom, e.denominator)
        ints = [int(e * denom) for e in v]
        g = 0
        for e in ints:
            g = gcd(g, abs(e))
        ints = [e // g for e in ints]
        if ints[graph.root] < 0:
            ints = [-e for e in ints]
        delta = tuple(Q(e) for e in ints)
        # semidefinite iff definite on a complement of the radical
        pivot = next(i for i, e in enumerate(delta) if e != 0)
        keep = [i for i in range(graph.n_vertices) if i != pivot]
        sub = tuple(tuple(m[i][j] for j in keep) for i in keep)
        if is_positive_vector(delta) and is_positive_definite(sub):
            extending = tuple(i for i, e in enumerate(delta) if e == 1)
            return GraphClass(
                kind="ExtendedDynkin",
                name=_extended_name(graph.branch_lengths),
                delta=delta,
                extending=extending,
            )
    witness = _ramp_witness(graph)
    q = tits_form(graph, witness)
    if q >= 0:
        raise GraphError("classification failed: no wild witness found")
    return GraphClass(kind="Wild", witness=witness)
