"""Root systems of extended Dynkin stars: enumeration and Coxeter orbits.

Roots are integer G-vectors with form value 1 (real) or 0 (imaginary).
For an extended Dynkin graph the root system modulo the radical generator
delta is finite; fixing an extending vertex e (delta_e = 1) gives a unique
representative with e-entry zero in every coset, and the positive such
representatives bounded by delta enumerate the whole table.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .coxeter import coxeter_dim, reduction_schedule
from .graph import (
    EVEN,
    ODD,
    GraphClass,
    GraphError,
    GVec,
    StarGraph,
    is_positive_vector,
    tits_form,
)
from .rational import Q


class RootError(ValueError):
    pass


@dataclass(frozen=True)
class Root:
    vector: GVec
    kind: Literal["real", "imaginary"]
    sign: Literal["positive", "negative"]


def is_root(graph: StarGraph, x: GVec) -> Optional[str]:
    """'real' (q=1), 'imaginary' (q=0), or None.

    Only integer vectors qualify; non-integer input is an error.
    """
    for e in x:
        if Fraction(e).denominator != 1:
            raise RootError("roots must have integer entries")
    if all(e == 0 for e in x):
        return None
    q = tits_form(graph, x)
    if q == 1:
        return "real"
    if q == 0:
        return "imaginary"
    return None


def classify_root(graph: StarGraph, x: GVec) -> Root:
    kind = is_root(graph, x)
    if kind is None:
        raise RootError(f"{x} is not a root")
    if is_positive_vector(x):
        sign = "positive"
    elif is_positive_vector(tuple(-e for e in x)):
        sign = "negative"
    else:
        raise RootError(f"root {x} is neither positive nor negative")
    return Root(vector=tuple(Q(e) for e in x), kind=kind, sign=sign)


def default_extending_vertex(cls: GraphClass) -> int:
    if cls.kind != "ExtendedDynkin" or not cls.extending:
        raise RootError("an extended Dynkin classification is required")
    return cls.extending[0]


def fundamental_roots(
    graph: StarGraph,
    cls: GraphClass,
    extending: Optional[int] = None,
    include_negative: bool = False,
    include_zero: bool = False,
) -> list[GVec]:
    """All coset representatives with zero entry at the extending vertex.

    Returns the positive representatives (componentwise bounded by delta) in
    lexicographic order; optionally adds their negatives and/or the zero
    vector.  Every returned nonzero vector is a real root: an imaginary root
    is a multiple of delta and cannot vanish at an extending vertex.
    """
    if cls.kind != "ExtendedDynkin":
        raise RootError("fundamental roots require an extended Dynkin graph")
    e = default_extending_vertex(cls) if extending is None else extending
    if cls.delta is None or cls.delta[e] != 1:
        raise RootError(f"vertex {e} is not an extending vertex")
    ranges = []
    for i, dmax in enumerate(cls.delta):
        ranges.append([0] if i == e else range(int(dmax) + 1))
    out = []
    for cand in itertools.product(*ranges):
        if all(v == 0 for v in cand):
            continue
        vec = tuple(Q(v) for v in cand)
        if tits_form(graph, vec) == 1:
            out.append(vec)
    out.sort()
    result: list[GVec] = []
    if include_zero:
        result.append(tuple(Q(0) for _ in range(graph.n_vertices)))
    result.extend(out)
    if include_negative:
        result.extend(tuple(-v for v in x) for x in out)
    return result


@dataclass(frozen=True)
class DeltaSeries:
    """Coset base + k*delta, keyed by the representative with zero e-entry."""

    base: GVec
    delta: GVec

    def member(self, k: int) -> GVec:
        return tuple(b + k * d for b, d in zip(self.base, self.delta))


@dataclass(frozen=True)
class CSeries:
    """Orbit of a root under the two parity maps, as a set of delta-series."""

    series: tuple[DeltaSeries, ...]

    def bases(self) -> tuple[GVec, ...]:
        return tuple(s.base for s in self.series)

    def __len__(self) -> int:
        return len(self.series)


def series_base(x: GVec, delta: GVec, extending: int) -> GVec:
    """Normalize a root to its coset representative with zero e-entry."""
    k = x[extending]  # delta has entry 1 there
    return tuple(a - k * d for a, d in zip(x, delta))


def coxeter_series(
    graph: StarGraph,
    cls: GraphClass,
    seed: GVec,
    extending: Optional[int] = None,
) -> CSeries:
    """Closure of the seed's delta-series under both parity maps."""
    if cls.kind != "ExtendedDynkin" or cls.delta is None:
        raise RootError("Coxeter series require an extended Dynkin graph")
    if is_root(graph, seed) is None:
        raise RootError(f"seed {seed} is not a root")
    e = default_extending_vertex(cls) if extending is None else extending
    delta = cls.delta
    seen = {series_base(seed, delta, e)}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            for token in (EVEN, ODD):
                img = coxeter_dim(graph, token, x)
                rep = series_base(img, delta, e)
                if rep not in seen:
                    seen.add(rep)
                    nxt.append(img)
        frontier = nxt
    ordered = sorted(seen)
    return CSeries(tuple(DeltaSeries(base=b, delta=delta) for b in ordered))


def branch_permutation(graph: StarGraph, x: GVec, perm: Sequence[int]) -> GVec:
    """Push a G-vector along a permutation of equal-length branches."""
    if sorted(graph.branch_lengths[p] for p in perm) != sorted(graph.branch_lengths):
        raise GraphError("permutation does not preserve branch lengths")
    out = [Q(0)] * graph.n_vertices
    out[graph.root] = x[graph.root]
    for b, src in enumerate(perm):
        if graph.branch_lengths[b] != graph.branch_lengths[src]:
            raise GraphError("permutation does not preserve branch lengths")
        for t, v in enumerate(graph.branches[b]):
            out[v] = x[graph.branches[src][t]]
    return tuple(out)


def all_series_bases(graph: StarGraph, cls: GraphClass) -> set[GVec]:
    """Bases of all 2*|Delta_f| signed delta-series."""
    pos = fundamental_roots(graph, cls)
    return set(pos) | {tuple(-v for v in x) for x in pos}


def singular_and_regular_series(
    graph: StarGraph, cls: GraphClass
) -> tuple[set[GVec], set[GVec]]:
    """Split series bases into functor-reachable (singular) and stalled
    (regular) parts.

    Singular bases are those whose orbit under the parity maps reaches a
    simple root modulo delta; equivalently, the symmetry images of the
    orbits seeded at one vertex of each symmetry class.
    """
    singular: set[GVec] = set()
    regular: set[GVec] = set()
    assert cls.delta is not None
    for base in all_series_bases(graph, cls):
        hit = False
        # a series is singular iff some member (shifted into the positive
        # cone) admits a reduction schedule
        for k in range(-3, int(sum(cls.delta)) + 3):
            member = tuple(b + k * d for b, d in zip(base, cls.delta))
            if not is_positive_vector(member):
                continue
            if reduction_schedule(graph, member) is not None:
                hit = True
                break
        (singular if hit else regular).add(base)
    return singular, regular
