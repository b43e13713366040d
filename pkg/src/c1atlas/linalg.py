"""Small exact linear-algebra kernel over Fraction matrices.

Matrices are lists of row lists.  Everything is dense; the sizes that occur in
this package stay below ~60 x 60, where fraction-exact Gaussian elimination is
instantaneous and never rounds.
"""

from __future__ import annotations

from fractions import Fraction


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    return [
        [sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(m)]
        for i in range(n)
    ]


def mat_vec(a, v):
    return [sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def _eliminate(a, pivot_cols=None):
    """Row-reduce a copy of `a` using pivots in the first `pivot_cols` columns;
    returns (echelon rows, rank, det_factor)."""
    m = [list(map(Fraction, row)) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if pivot_cols is None:
        pivot_cols = cols
    rank = 0
    det = Fraction(1)
    for col in range(pivot_cols):
        pivot = next((r for r in range(rank, rows) if m[r][col] != 0), None)
        if pivot is None:
            det = Fraction(0)
            continue
        if pivot != rank:
            m[rank], m[pivot] = m[pivot], m[rank]
            det = -det
        det *= m[rank][col]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(rows):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == rows:
            break
    return m, rank, det


def rank(a) -> int:
    if not a:
        return 0
    return _eliminate(a)[1]


def det(a) -> Fraction:
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    echelon, rk, d = _eliminate(a)
    return d if rk == n else Fraction(0)


def solve(a, b):
    """Solve a x = b for square invertible `a`; raises ValueError if singular."""
    n = len(a)
    aug = [list(map(Fraction, row)) + [Fraction(b[i])] for i, row in enumerate(a)]
    echelon, rk, _ = _eliminate(aug, pivot_cols=n)
    if rk < n or any(echelon[i][i] != 1 for i in range(n)):
        raise ValueError("singular linear system")
    return [echelon[i][n] for i in range(n)]


def inverse(a):
    n = len(a)
    aug = [list(map(Fraction, row)) + identity(n)[i] for i, row in enumerate(a)]
    echelon, rk, _ = _eliminate(aug, pivot_cols=n)
    if rk < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in echelon]


def charpoly(a):
    """Monic characteristic polynomial of `a` via Faddeev-LeVerrier.

    Returns coefficients [1, c1, ..., cn] of x^n + c1 x^(n-1) + ... + cn.
    """
    n = len(a)
    coeffs = [Fraction(1)]
    m = identity(n)
    for k in range(1, n + 1):
        m = mat_mul(a, m)
        c = -sum((m[i][i] for i in range(n)), Fraction(0)) / k
        coeffs.append(c)
        for i in range(n):
            m[i][i] += c
    return coeffs


def is_symmetric(a) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def is_positive_definite(a) -> bool:
    """Exact Sylvester criterion on leading principal minors."""
    n = len(a)
    for k in range(1, n + 1):
        minor = [row[:k] for row in a[:k]]
        if det(minor) <= 0:
            return False
    return True
