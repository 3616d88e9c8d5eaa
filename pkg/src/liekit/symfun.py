"""Partition combinatorics, Schur polynomials, symmetric group characters,
q-binomials and Betti numbers of Grassmannians and flag manifolds.

Box contents use column minus row (the orientation pinned down by the
closed formula c(lambda) = sum lambda_i (lambda_i - 2i + 1)/2 and by the
Jucys-Murphy eigenvalue); partitions are weakly decreasing tuples.
"""

from fractions import Fraction
from itertools import permutations

from . import chars, rootsys
from .errors import SizeMismatch, TooLarge, ValidationError


def check_partition(lam):
    lam = tuple(int(x) for x in lam)
    if any(x <= 0 for x in lam) or any(
        lam[i] < lam[i + 1] for i in range(len(lam) - 1)
    ):
        raise ValidationError(f"{lam} is not a partition")
    return lam


def conjugate(lam):
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(
        sum(1 for x in lam if x > j) for j in range(lam[0])
    )


def content(lam):
    """Sum of box contents; computed from boxes and from the closed formula,
    which must agree."""
    lam = check_partition(lam)
    by_boxes = sum(
        (j + 1) - (i + 1) for i, row in enumerate(lam) for j in range(row)
    )
    closed = sum(
        Fraction(row * (row - 2 * (i + 1) + 1), 2) for i, row in enumerate(lam)
    )
    assert by_boxes == closed
    return by_boxes


def jucys_murphy_eigenvalue(lam):
    """Eigenvalue of the sum of all transpositions on the irreducible
    representation labeled by lam."""
    return content(lam)


def partitions(n, max_parts=None, max_part=None):
    """All partitions of n, optionally bounded."""
    out = []

    def rec(rest, largest, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        if max_parts is not None and len(acc) >= max_parts:
            return
        for part in range(min(rest, largest), 0, -1):
            acc.append(part)
            rec(rest - part, part, acc)
            acc.pop()

    rec(n, n if max_part is None else min(n, max_part), [])
    return out


# ---------------------------------------------------------------------------
# Schur polynomials via the A-series character engine


def _sl_weight(lam, n):
    lam = list(lam) + [0] * (n - len(lam))
    return tuple(lam[i] - lam[i + 1] for i in range(n - 1))


def schur_poly(lam, n):
    """Schur polynomial s_lambda(x_1..x_n) as {exponent tuple: coeff}.

    Computed from the character of the matching special linear highest
    weight; the bialternant is kept as an independent evaluation oracle.
    """
    lam = check_partition(lam)
    if len(lam) > n:
        return {}
    if not lam:
        return {(0,) * n: 1}
    if n == 1:
        return {(lam[0],): 1}
    rs = rootsys.build(("A", n - 1))
    size = sum(lam)
    out = {}
    for gamma, mult in chars.character(rs, _sl_weight(lam, n)).items():
        # exponents e with e_i - e_{i+1} = gamma_i and sum e = |lambda|
        tail = [0] * n
        for i in range(n - 2, -1, -1):
            tail[i] = tail[i + 1] + gamma[i]
        base = Fraction(size - sum(tail), n)
        assert base.denominator == 1
        e = tuple(int(base) + t for t in tail)
        assert all(x >= 0 for x in e)
        out[e] = mult
    return out


def schur_poly_value(lam, xs):
    """Evaluate s_lambda at a point, via the bialternant determinant.

    Independent of the character engine; the xs must be distinct and
    nonzero rationals for the Vandermonde to be invertible.
    """
    from . import linalg

    lam = check_partition(lam)
    n = len(xs)
    if len(lam) > n:
        return Fraction(0)
    padded = list(lam) + [0] * (n - len(lam))
    num = [
        [Fraction(xs[i]) ** (padded[j] + n - 1 - j) for j in range(n)]
        for i in range(n)
    ]
    den = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            den *= Fraction(xs[i]) - Fraction(xs[j])
    return linalg.det(num) / den


def evaluate_poly(poly, xs):
    total = Fraction(0)
    for e, c in poly.items():
        term = Fraction(c)
        for x, k in zip(xs, e):
            term *= Fraction(x) ** k
        total += term
    return total


# ---------------------------------------------------------------------------
# dimension polynomials


def schur_dim_poly(lam):
    """P_lambda as Fraction coefficients (low degree first): the dimension
    of the lambda Schur functor of an N-dimensional space, as a polynomial
    in N."""
    lam = check_partition(lam)
    k = len(lam)
    if k == 0:
        return [Fraction(1)]
    pref = Fraction(1)
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            pref *= Fraction(lam[i - 1] - lam[j - 1] + j - i, j - i)
    poly = [pref]
    for i in range(1, k + 1):
        for t in range(1, lam[i - 1] + 1):
            # factor (N - i + t) / (k - i + t)
            poly = [c * Fraction(1, k - i + t) for c in poly]
            shifted = [Fraction(0)] + poly
            poly = [
                a + Fraction(t - i) * b
                for a, b in zip(shifted, poly + [Fraction(0)])
            ]
    return poly


def eval_poly_at(coeffs, x):
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


def schur_dim(lam, n):
    val = eval_poly_at(schur_dim_poly(lam), n)
    assert val.denominator == 1
    return int(val)


# ---------------------------------------------------------------------------
# Frobenius character formula


def frobenius_character(lam, cycles):
    """Character of the symmetric group irreducible pi_lambda at the class
    with the given cycle lengths."""
    lam = check_partition(lam)
    cycles = sorted((int(c) for c in cycles), reverse=True)
    size = sum(lam)
    if sum(cycles) != size or any(c <= 0 for c in cycles):
        raise SizeMismatch(f"cycle type {cycles} does not match |lambda| = {size}")
    n = size  # number of variables
    if n == 0:
        return 1
    if n > 8:
        raise TooLarge("Frobenius extraction capped at symbols of size 8")
    delta = tuple(range(n - 1, -1, -1))
    target = tuple((lam[i] if i < len(lam) else 0) + delta[i] for i in range(n))
    # expand prod_k p_{cycles[k]} with exponents capped at the target
    poly = {(0,) * n: 1}
    for c in cycles:
        nxt = {}
        for e, coeff in poly.items():
            for i in range(n):
                if e[i] + c <= target[i]:
                    e2 = e[:i] + (e[i] + c,) + e[i + 1 :]
                    nxt[e2] = nxt.get(e2, 0) + coeff
        poly = nxt
    total = 0
    for perm in permutations(range(n)):
        exps = tuple(target[i] - delta[perm[i]] for i in range(n))
        if any(x < 0 for x in exps):
            continue
        coeff = poly.get(exps)
        if coeff:
            total += _perm_sign(perm) * coeff
    return total


def _perm_sign(perm):
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def symmetric_group_dimension(lam):
    return frobenius_character(lam, [1] * sum(lam))


# ---------------------------------------------------------------------------
# Pieri rules


def addable_rows(lam):
    """Rows of lambda that can take one more box (1-based), incl. a new row."""
    lam = check_partition(lam)
    rows = [1] if lam else [1]
    for i in range(1, len(lam)):
        if lam[i] < lam[i - 1]:
            rows.append(i + 1)
    if lam:
        rows.append(len(lam) + 1)
    return rows


def pieri(lam, m=1):
    """Partitions obtained by adding m addable boxes in m different rows."""
    lam = check_partition(lam)
    from itertools import combinations

    rows = addable_rows(lam)
    out = []
    for chosen in combinations(rows, m):
        parts = list(lam) + [0] * (max(chosen) - len(lam))
        for r in chosen:
            parts[r - 1] += 1
        out.append(tuple(p for p in parts if p))
    return sorted(set(out), reverse=True)


# ---------------------------------------------------------------------------
# q-combinatorics


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divexact(num, den):
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    if not num:
        return [0]
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        q[i] = c // den[-1]
        if q[i]:
            for j, y in enumerate(den):
                num[i + j] -= q[i] * y
    assert all(v == 0 for v in num)
    return q


def q_int(n):
    return [1] * n


def q_factorial(n):
    out = [1]
    for k in range(1, n + 1):
        out = _poly_mul(out, q_int(k))
    return out


def gaussian_binomial(m, n):
    """Coefficients of the q-binomial (m+n choose n)_q.

    Computed two independent ways: the partitions-in-a-box recursion and
    the q-factorial ratio with exact division; they must agree.
    """
    m, n = int(m), int(n)
    if m < 0 or n < 0:
        raise ValidationError("negative arguments")
    # DP on partitions fitting in an m x n box
    table = {(0, 0): [1]}

    def box(a, b):
        if (a, b) not in table:
            if a == 0 or b == 0:
                table[(a, b)] = [1]
            else:
                left = box(a, b - 1)
                up = [0] * b + box(a - 1, b)
                size = max(len(left), len(up))
                table[(a, b)] = [
                    (left[i] if i < len(left) else 0) + (up[i] if i < len(up) else 0)
                    for i in range(size)
                ]
        return table[(a, b)]

    by_boxes = box(m, n)
    ratio = _poly_divexact(
        q_factorial(m + n), _poly_mul(q_factorial(m), q_factorial(n))
    )
    assert by_boxes == ratio
    return by_boxes


def gaussian_multinomial(n, parts):
    parts = [int(p) for p in parts]
    if sum(parts) != n or any(p < 0 for p in parts):
        raise ValidationError("parts must be nonnegative and sum to n")
    den = [1]
    for p in parts:
        den = _poly_mul(den, q_factorial(p))
    return _poly_divexact(q_factorial(n), den)


# ---------------------------------------------------------------------------
# Betti numbers


def _interleave(even_coeffs):
    out = []
    for i, c in enumerate(even_coeffs):
        out.append(c)
        if i < len(even_coeffs) - 1:
            out.append(0)
    return out


def grassmannian_betti(m, n):
    """Betti numbers of the Grassmannian of m-planes in C^{m+n}."""
    return _interleave(gaussian_binomial(m, n))


def projective_space_betti(n):
    return grassmannian_betti(1, n)


def flag_betti(n):
    return _interleave(q_factorial(n))


def partial_flag_betti(n, subset):
    subset = sorted(set(int(s) for s in subset))
    if any(s <= 0 or s >= n for s in subset):
        raise ValidationError("flag dimensions must lie strictly between 0 and n")
    cuts = [0] + subset + [n]
    sizes = [b - a for a, b in zip(cuts, cuts[1:])]
    return _interleave(gaussian_multinomial(n, sizes))


# ---------------------------------------------------------------------------
# the Cauchy identity


def cauchy_check(r, s, max_degree=6):
    """Exact check of sum_lambda s_lambda(x) s_lambda(y) z^|lambda| against
    prod 1/(1 - z x_i y_j), truncated at z-degree max_degree."""
    if r * s * max_degree > 400:
        raise TooLarge("cauchy expansion too large")
    lhs = {}
    for d in range(max_degree + 1):
        for lam in partitions(d, max_parts=min(r, s)) if d else [()]:
            sx = schur_poly(lam, r)
            sy = schur_poly(lam, s)
            for ex, cx in sx.items():
                for ey, cy in sy.items():
                    key = (d, ex, ey)
                    lhs[key] = lhs.get(key, 0) + cx * cy
    rhs = {(0, (0,) * r, (0,) * s): 1}
    for i in range(r):
        for j in range(s):
            factor = {}
            for k in range(max_degree + 1):
                ex = tuple(k if a == i else 0 for a in range(r))
                ey = tuple(k if b == j else 0 for b in range(s))
                factor[(k, ex, ey)] = 1
            nxt = {}
            for (d1, ex1, ey1), c1 in rhs.items():
                for (d2, ex2, ey2), c2 in factor.items():
                    if d1 + d2 > max_degree:
                        continue
                    key = (
                        d1 + d2,
                        tuple(a + b for a, b in zip(ex1, ex2)),
                        tuple(a + b for a, b in zip(ey1, ey2)),
                    )
                    nxt[key] = nxt.get(key, 0) + c1 * c2
            rhs = nxt
    lhs = {k: v for k, v in lhs.items() if v}
    rhs = {k: v for k, v in rhs.items() if v}
    return lhs == rhs
