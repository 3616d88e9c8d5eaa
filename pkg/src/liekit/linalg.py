"""Exact linear algebra over the rationals and the integers.

Everything here is elimination-based and exact; no floating point. Rank
computations scale rows freely (rank is scale-invariant), which permits
integer arithmetic with per-row gcd reduction instead of fractions. Where
determinant values matter (minors, Smith form) we use fraction-free
Bareiss-style updates with exact division.
"""

from fractions import Fraction
from math import gcd


def _row_to_int(row):
    """Scale a rational row to a primitive integer row."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) if isinstance(x, Fraction) else int(x) * den for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def rank(matrix, ncols=None):
    """Exact rank of a matrix given as a list of rows (ints or Fractions)."""
    rows = [_row_to_int(r) for r in matrix if any(r)]
    if not rows:
        return 0
    n = ncols if ncols is not None else len(rows[0])
    rk = 0
    col = 0
    while rows and col < n:
        # smallest nonzero pivot keeps the integers from blowing up
        piv = None
        for i, r in enumerate(rows):
            if r[col]:
                if piv is None or abs(r[col]) < abs(rows[piv][col]):
                    piv = i
        if piv is None:
            col += 1
            continue
        rows[0], rows[piv] = rows[piv], rows[0]
        prow = rows[0]
        p = prow[col]
        nxt = []
        for r in rows[1:]:
            a = r[col]
            if a:
                r = [p * x - a * y for x, y in zip(r, prow)]
                g = 0
                for v in r:
                    g = gcd(g, v)
                if g > 1:
                    r = [v // g for v in r]
            if any(r):
                nxt.append(r)
        rows = nxt
        rk += 1
        col += 1
    return rk


def rank_sparse(rows, ncols):
    """Rank of a matrix given as a list of {col: coeff} dicts."""
    dense = []
    for r in rows:
        if r:
            row = [0] * ncols
            for c, v in r.items():
                row[c] = v
            dense.append(row)
    return rank(dense, ncols)


def rref(matrix):
    """Reduced row echelon form over Fraction. Returns (rows, pivot_cols)."""
    rows = [[Fraction(x) for x in r] for r in matrix]
    if not rows:
        return [], []
    n = len(rows[0])
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(matrix, ncols=None):
    """Basis of the right nullspace, as Fraction vectors."""
    if not matrix:
        return [
            [Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols or 0)
        ]
    n = ncols if ncols is not None else len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """One exact solution of M x = b, or None if inconsistent."""
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    n = len(matrix[0])
    rows, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][n]
    return x


def det(matrix):
    """Exact determinant (Bareiss) of a square int/Fraction matrix."""
    n = len(matrix)
    if n == 0:
        return 1
    den = 1
    for row in matrix:
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
    m = [[int(x * den) if isinstance(x, Fraction) else int(x) * den for x in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return Fraction(0) if den > 1 else 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    val = sign * m[n - 1][n - 1]
    return val if den == 1 else Fraction(val, den**n)


def leading_principal_minors(matrix):
    n = len(matrix)
    return [det([row[: k + 1] for row in matrix[: k + 1]]) for k in range(n)]


def inverse(matrix):
    """Exact inverse of a square matrix, as Fractions."""
    n = len(matrix)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows]


def smith_normal_form(matrix):
    """Invariant factors d_1 | d_2 | ... of an integer matrix."""
    m = [list(map(int, row)) for row in matrix]
    if not m:
        return []
    nr, nc = len(m), len(m[0])
    factors = []
    t = 0
    while t < min(nr, nc):
        # locate smallest nonzero entry in the remaining block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[t], m[bi] = m[bi], m[t]
        for row in m:
            row[t], row[bj] = row[bj], row[t]
        dirty = False
        for i in range(t + 1, nr):
            q = m[i][t] // m[t][t]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[t])]
            if m[i][t]:
                dirty = True
        for j in range(t + 1, nc):
            q = m[t][j] // m[t][t]
            if q:
                for row in m:
                    row[j] -= q * row[t]
            if m[t][j]:
                dirty = True
        if dirty:
            continue
        # pivot must divide the rest of the block
        pivot = m[t][t]
        adjust = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if m[i][j] % pivot:
                    adjust = i
                    break
            if adjust is not None:
                break
        if adjust is not None:
            m[t] = [a + b for a, b in zip(m[t], m[adjust])]
            continue
        factors.append(abs(pivot))
        t += 1
    return factors
