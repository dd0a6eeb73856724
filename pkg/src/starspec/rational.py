"""Exact rational linear algebra on small dense matrices.

Everything in the classification and feasibility layers runs over
``fractions.Fraction`` so that verdicts are exact.  Matrices are tuples of
tuples; vectors are tuples.  Sizes here are tiny (the number of graph
vertices), so no attempt is made to be clever.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Q = Fraction
QVec = tuple[Fraction, ...]
QMat = tuple[QVec, ...]


def qvec(entries: Sequence) -> QVec:
    return tuple(Fraction(e) for e in entries)


def qmat(rows: Sequence[Sequence]) -> QMat:
    return tuple(qvec(r) for r in rows)


def identity(n: int) -> QMat:
    return tuple(tuple(Q(int(i == j)) for j in range(n)) for i in range(n))


def mat_mul(a: QMat, b: QMat) -> QMat:
    n, m, p = len(a), len(b), len(b[0])
    assert len(a[0]) == m
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(m)) for j in range(p))
        for i in range(n)
    )


def mat_vec(a: QMat, x: QVec) -> QVec:
    return tuple(sum(row[j] * x[j] for j in range(len(x))) for row in a)


def transpose(a: QMat) -> QMat:
    return tuple(tuple(a[i][j] for i in range(len(a))) for j in range(len(a[0])))


def mat_pow(a: QMat, k: int) -> QMat:
    if k < 0:
        return mat_pow(mat_inv(a), -k)
    out = identity(len(a))
    base = a
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out


def mat_inv(a: QMat) -> QMat:
    """Gauss-Jordan inverse; raises ValueError on singular input."""
    n = len(a)
    m = [list(row) + [Q(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        d = m[c][c]
        m[c] = [v / d for v in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def determinant(a: QMat) -> Fraction:
    n = len(a)
    m = [list(row) for row in a]
    det = Q(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Q(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def nullspace(a: QMat) -> list[QVec]:
    """Basis of the right kernel, via reduced row echelon form."""
    if not a:
        return []
    rows, cols = len(a), len(a[0])
    m = [list(r) for r in a]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        d = m[r][c]
        m[r] = [v / d for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Q(0)] * cols
        v[fc] = Q(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(tuple(v))
    return basis


def is_positive_definite(a: QMat) -> bool:
    """Sylvester criterion on a symmetric rational matrix."""
    n = len(a)
    for k in range(1, n + 1):
        minor = tuple(tuple(a[i][j] for j in range(k)) for i in range(k))
        if determinant(minor) <= 0:
            return False
    return True


def parse_fraction(s) -> Fraction:
    """Parse an int, float-free string like '3' or '17/3', or Fraction."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Q(s)
    if isinstance(s, str):
        return Fraction(s)
    raise TypeError(f"cannot parse rational from {type(s).__name__}: {s!r}")


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
