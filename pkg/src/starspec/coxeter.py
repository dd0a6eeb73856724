"""Reflections and Coxeter transformations on dimensions and characters.

The two parity maps act on G-vectors by simultaneous reflection at all odd
(resp. all even) vertices; same-parity vertices are never adjacent, so the
order inside one parity class does not matter.

On (dimension, character) pairs the reflection functors act crosswise: the
'even' step reflects the dimension at even vertices but the character at the
odd vertices inside the current support, and requires the character to be
strictly positive on the even part of the support.  The 'odd' step is the
mirror image.  This pairing is what keeps every vertex operator scalar at
the matrix level.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .graph import EVEN, ODD, GVec, GraphError, Parity, StarGraph
from .rational import Q, QMat, mat_pow, qmat

Token = Parity
CoxeterWord = tuple[Token, ...]


class CoxeterDomainError(ValueError):
    """A functor precondition failed; carries the offending vertex."""

    def __init__(self, message: str, vertex: int, value: Fraction):
        super().__init__(f"{message} (vertex {vertex}, value {value})")
        self.vertex = vertex
        self.value = value


class DimCharPair(NamedTuple):
    d: GVec
    f: GVec


def reflect(graph: StarGraph, g: int, x: GVec) -> GVec:
    """Reflection at one vertex: only entry g changes, to -x_g + sum over
    neighbors."""
    if not 0 <= g < graph.n_vertices:
        raise GraphError(f"unknown vertex {g}")
    y = list(x)
    y[g] = -x[g] + sum(x[h] for h in graph.neighbors[g])
    return tuple(y)


def _parity_set(graph: StarGraph, token: Token) -> tuple[int, ...]:
    return graph.even_vertices() if token == EVEN else graph.odd_vertices()


def _other(token: Token) -> Token:
    return ODD if token == EVEN else EVEN


def coxeter_dim(graph: StarGraph, token: Token, d: GVec) -> GVec:
    """Reflect simultaneously at all vertices of the given parity."""
    y = list(d)
    for g in _parity_set(graph, token):
        y[g] = -d[g] + sum(d[h] for h in graph.neighbors[g])
    return tuple(y)


def _reflect_char_on(graph: StarGraph, verts: Iterable[int], f: GVec) -> GVec:
    y = list(f)
    for g in verts:
        y[g] = -f[g] + sum(f[h] for h in graph.neighbors[g])
    return tuple(y)


def support(d: GVec) -> tuple[int, ...]:
    return tuple(i for i, v in enumerate(d) if v != 0)


def check_pair_domain(graph: StarGraph, token: Token, pair: DimCharPair) -> None:
    """Raise CoxeterDomainError unless the pair admits the `token` functor.

    Required: d(g) + f(g) > 0 at every vertex, and f(g) > 0 on the
    token-parity part of the support of d.
    """
    d, f = pair
    for g in range(graph.n_vertices):
        if d[g] + f[g] <= 0:
            raise CoxeterDomainError("pair leaves the admissible set", g, f[g])
    for g in _parity_set(graph, token):
        if d[g] != 0 and f[g] <= 0:
            raise CoxeterDomainError(
                "character not positive on active support", g, f[g]
            )


def coxeter_char(
    graph: StarGraph, token: Token, pair: DimCharPair, *, check: bool = True
) -> DimCharPair:
    """One reflection-functor step on a (dimension, character) pair."""
    if check:
        check_pair_domain(graph, token, pair)
    d, f = pair
    new_d = coxeter_dim(graph, token, d)
    moved = [g for g in _parity_set(graph, _other(token)) if d[g] != 0]
    new_f = _reflect_char_on(graph, moved, f)
    return DimCharPair(new_d, new_f)


@dataclass(frozen=True)
class ReductionSchedule:
    """Alternating functor schedule taking a dimension down to a simple one.

    ``steps[i]`` is the (dimension, token) state before the i-th application;
    ``terminal`` is the vertex carrying the final one-dimensional space.
    """

    steps: tuple[tuple[GVec, Token], ...]
    terminal: int

    def tokens(self) -> tuple[Token, ...]:
        return tuple(t for _, t in self.steps)


@functools.lru_cache(maxsize=8192)
def reduction_schedule(graph: StarGraph, d: GVec) -> Optional[ReductionSchedule]:
    """Descending alternating schedule for a positive real root, or None.

    Tries both starting parities; a valid direction must strictly decrease
    the total dimension every two steps and end at a unit vector.  Imaginary
    roots and the finitely many 'stalled' real roots admit no schedule.
    """
    for first in (EVEN, ODD):
        dd = d
        token: Token = first
        steps: list[tuple[GVec, Token]] = []
        prev2: Optional[Fraction] = None
        limit = 2 * int(sum(d)) + 4
        for n in range(limit + 1):
            total = sum(dd)
            if total == 1 and max(dd) == 1:
                return ReductionSchedule(tuple(steps), list(dd).index(1))
            if any(v < 0 for v in dd) or n == limit:
                break
            if n % 2 == 0:
                if prev2 is not None and total >= prev2:
                    break
                prev2 = total
            steps.append((dd, token))
            dd = coxeter_dim(graph, token, dd)
            token = _other(token)
    return None


def char_transport_down(
    graph: StarGraph, schedule: ReductionSchedule, f: GVec
) -> GVec:
    """Push a character through the whole schedule (no domain checks)."""
    for dcur, token in schedule.steps:
        moved = [g for g in _parity_set(graph, _other(token)) if dcur[g] != 0]
        f = _reflect_char_on(graph, moved, f)
    return f


def char_transport_up(
    graph: StarGraph, schedule: ReductionSchedule, f_term: GVec
) -> list[GVec]:
    """Characters along the upward replay, from terminal to full dimension.

    Returns the list [f at simple, ..., f at schedule start]; each upward
    step inverts the corresponding downward reflection (an involution on the
    same vertex set).
    """
    chars = [f_term]
    f = f_term
    for dcur, token in reversed(schedule.steps):
        moved = [g for g in _parity_set(graph, _other(token)) if dcur[g] != 0]
        f = _reflect_char_on(graph, moved, f)
        chars.append(f)
    return chars


# ---------------------------------------------------------------------------
# Matrices (exact rational)
# ---------------------------------------------------------------------------

def parity_matrix(graph: StarGraph, token: Token) -> QMat:
    """Matrix of the parity reflection in the canonical vertex basis."""
    n = graph.n_vertices
    rows = []
    pset = set(_parity_set(graph, token))
    for i in range(n):
        if i in pset:
            row = [Q(0)] * n
            row[i] = Q(-1)
            for h in graph.neighbors[i]:
                row[h] += 1
            rows.append(tuple(row))
        else:
            rows.append(tuple(Q(int(j == i)) for j in range(n)))
    return tuple(rows)


def elementary_coxeter_matrix(graph: StarGraph, order: str = "odd_after_even") -> QMat:
    """Composite Coxeter matrix; both factor orders are exposed.

    'odd_after_even' applies the even map first (matrix product odd * even),
    the order used by the closed-form power tables below.
    """
    ce = parity_matrix(graph, EVEN)
    co = parity_matrix(graph, ODD)
    if order == "odd_after_even":
        return _mm(co, ce)
    if order == "even_after_odd":
        return _mm(ce, co)
    raise ValueError(f"unknown order {order!r}")


def _mm(a: QMat, b: QMat) -> QMat:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def coxeter_power_matrix_e6(graph: StarGraph, k: int) -> QMat:
    """Exact k-th power of the composite Coxeter matrix on the E6~ star."""
    if graph.branch_lengths != (2, 2, 2):
        raise GraphError("power matrices are specific to the (2,2,2) star")
    if k < 0:
        raise ValueError("negative power not allowed here")
    return mat_pow(elementary_coxeter_matrix(graph), k)


def coxeter_power_table_e6(k: int) -> QMat:
    """Period-six normalized table of the transposed Coxeter powers on E6~.

    The table depends only on k mod 3 together with (-1)^k.  It differs from
    the exact transposed power by an explicit rank-one drift:

        table(k) = (C^k)^T - ((k-1)/6) * outer(sd, delta)

    where delta = (1,2,1,2,1,2,3) and sd = (1,-2,1,-2,1,-2,3) is its
    parity-signed companion.  In particular table(k) is not multiplicative
    in k; use coxeter_power_matrix_e6 for exact powers.
    """
    u = (-1) ** (k % 2)
    if k % 3 == 0:
        rows = [
            [11 + 3 * u, 4, -1 + 3 * u, 4, -1 + 3 * u, 4, 3 * (3 - u)],
            [-4, 4, -4, -8, -4, -8, -12],
            [-1 + 3 * u, 4, 11 + 3 * u, 4, -1 + 3 * u, 4, 3 * (3 - u)],
            [-4, -8, -4, 4, -4, -8, -12],
            [-1 + 3 * u, 4, -1 + 3 * u, 4, 11 + 3 * u, 4, 3 * (3 - u)],
            [-4, -8, -4, -8, -4, 4, -12],
            [3 * (3 - u), 12, 3 * (3 - u), 12, 3 * (3 - u), 12, 3 * (9 + u)],
        ]
        den = 12
    elif k % 3 == 1:
        rows = [
            [1 + u, 4, 1 + u, 0, 1 + u, 0, 3 - u],
            [-4, -4, 0, 0, 0, 0, -4],
            [1 + u, 0, 1 + u, 4, 1 + u, 0, 3 - u],
            [0, 0, -4, -4, 0, 0, -4],
            [1 + u, 0, 1 + u, 0, 1 + u, 4, 3 - u],
            [0, 0, 0, 0, -4, -4, -4],
            [3 - u, 4, 3 - u, 4, 3 - u, 4, 9 + u],
        ]
        den = 4
    else:
        rows = [
            [-5 + 3 * u, -4, 7 + 3 * u, 8, 7 + 3 * u, 8, 3 * (3 - u)],
            [4, -4, -8, -4, -8, -4, -12],
            [7 + 3 * u, 8, -5 + 3 * u, -4, 7 + 3 * u, 8, 3 * (3 - u)],
            [-8, -4, 4, -4, -8, -4, -12],
            [7 + 3 * u, 8, 7 + 3 * u, 8, -5 + 3 * u, -4, 3 * (3 - u)],
            [-8, -4, -8, -4, 4, -4, -12],
            [3 * (3 - u), 12, 3 * (3 - u), 12, 3 * (3 - u), 12, 3 * (9 + u)],
        ]
        den = 12
    return qmat([[Fraction(v, den) for v in row] for row in rows])


def signed_delta_e6() -> GVec:
    """Parity-signed companion of the E6~ radical generator."""
    return tuple(Q(v) for v in (1, -2, 1, -2, 1, -2, 3))
