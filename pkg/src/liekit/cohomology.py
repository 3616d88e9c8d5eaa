"""Chevalley-Eilenberg cohomology with exact ranks.

The differential on alternating forms (with values in a module V) follows
the full Cartan formula; d^2 = 0 is verified on every run. Betti numbers
come from exact integer rank computations. When the algebra carries a
diagonal Cartan marker and the coefficients are trivial, the complex splits
into finite weight blocks and ranks are taken blockwise, which keeps rank-14
algebras within desk-scale budgets.
"""

from fractions import Fraction
from itertools import combinations

from . import linalg
from .errors import NotDiagonalizable, TooLarge, ValidationError

MAX_DIM = 20


def _subset_weight(weights, subset):
    r = len(weights[0]) if weights else 0
    return tuple(sum(weights[i][j] for i in subset) for j in range(r))


def _d_entries(g, T):
    """Bracket part of the differential evaluated on a (k+1)-subset T.

    Yields (k-subset, coefficient): d(e_S^*)(e_T) summed into columns S.
    """
    k1 = len(T)
    for p in range(k1):
        for q in range(p + 1, k1):
            row = g.bracket_basis(T[p], T[q])
            if not row:
                continue
            rest = T[:p] + T[p + 1 : q] + T[q + 1 :]
            rest_set = set(rest)
            sgn_pq = -1 if (p + q) % 2 else 1
            for c, coeff in row.items():
                if c in rest_set:
                    continue
                pos = sum(1 for x in rest if x < c)
                sgn = sgn_pq * (-1 if pos % 2 else 1)
                S = tuple(sorted(rest + (c,)))
                yield S, sgn * coeff


def _build_block(g, cols, rows, module=None):
    """Dense matrix of d from span(cols) to span(rows), subsets as indices."""
    col_index = {S: i for i, S in enumerate(cols)}
    vdim = module.dim if module is not None else 1
    mat = [
        [Fraction(0)] * (len(cols) * vdim) for _ in range(len(rows) * vdim)
    ]
    for r, T in enumerate(rows):
        for S, coeff in _d_entries(g, T):
            ci = col_index.get(S)
            if ci is not None:
                for a in range(vdim):
                    mat[r * vdim + a][ci * vdim + a] += coeff
        if module is not None:
            for p in range(len(T)):
                rest = T[:p] + T[p + 1 :]
                ci = col_index.get(rest)
                if ci is None:
                    continue
                sgn = -1 if p % 2 else 1
                action = module.mats[T[p]]
                for a in range(vdim):
                    for b in range(vdim):
                        if action[a][b]:
                            mat[r * vdim + a][ci * vdim + b] += sgn * action[a][b]
    return mat


def _check_d_squared(m2, m1):
    """Assert m2 @ m1 == 0 for dense Fraction matrices."""
    if not m1 or not m2 or not m1[0]:
        return
    ncols = len(m1[0])
    for i, row2 in enumerate(m2):
        nz = [(k, v) for k, v in enumerate(row2) if v]
        if not nz:
            continue
        for j in range(ncols):
            s = sum(v * m1[k][j] for k, v in nz)
            if s:
                raise ValidationError("d^2 != 0: structure constants corrupt")


def ce_cohomology(g, module=None, degrees=None, max_dim=MAX_DIM):
    """Betti numbers {k: dim H^k(g, V)}; V defaults to the trivial module."""
    n = g.dim
    if n > max_dim:
        raise TooLarge(f"dim g = {n} exceeds the cohomology cap {max_dim}")
    wanted = set(range(n + 1)) if degrees is None else set(degrees)
    graded = module is None and g.cartan is not None
    if graded:
        try:
            weights = g.weights_by_index()
        except NotDiagonalizable:
            graded = False
    if graded:
        groups = []
        for k in range(n + 2):
            blocks = {}
            if k <= n:
                for S in combinations(range(n), k):
                    blocks.setdefault(_subset_weight(weights, S), []).append(S)
            groups.append(blocks)
        ranks = [0] * (n + 2)  # rank of d_k: C^k -> C^{k+1}
        needed_ranks = set()
        for k in wanted:
            needed_ranks.update([k - 1, k])
        prev_blocks = {}
        for k in range(n + 1):
            cur_blocks = {}
            if k in needed_ranks or (k + 1) in needed_ranks:
                for w, cols in groups[k].items():
                    rows = groups[k + 1].get(w, [])
                    mat = _build_block(g, cols, rows)
                    cur_blocks[w] = mat
                    if k in needed_ranks and mat and mat[0]:
                        ranks[k] += linalg.rank(mat)
                    prev = prev_blocks.get(w)
                    if prev is not None:
                        _check_d_squared(mat, prev)
            prev_blocks = cur_blocks
        return {
            k: _binom(n, k) - ranks[k] - (ranks[k - 1] if k > 0 else 0)
            for k in sorted(wanted)
            if 0 <= k <= n
        }
    # ungraded (or with coefficients): single dense block per degree
    vdim = module.dim if module is not None else 1
    widest = max(_binom(n, k) * vdim for k in range(n + 1))
    if widest > 30000:
        raise TooLarge("ungraded Chevalley-Eilenberg complex too large")
    ranks = [0] * (n + 2)
    needed_ranks = set()
    for k in wanted:
        needed_ranks.update([k - 1, k])
    prev = None
    for k in range(n + 1):
        if k in needed_ranks or k + 1 in needed_ranks:
            cols = list(combinations(range(n), k))
            rows = list(combinations(range(n), k + 1))
            mat = _build_block(g, cols, rows, module)
            if k in needed_ranks and mat and mat[0]:
                ranks[k] = linalg.rank(mat)
            if prev is not None:
                _check_d_squared(mat, prev)
            prev = mat
        else:
            prev = None
    return {
        k: _binom(n, k) * vdim - ranks[k] - (ranks[k - 1] if k > 0 else 0)
        for k in sorted(wanted)
        if 0 <= k <= n
    }


def _binom(n, k):
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


# ---------------------------------------------------------------------------
# invariant forms


def _coadjoint_wedge_apply(g, x_index, subset, weights=None):
    """x . e_S^* expanded over basis forms: yields (k-subset, coeff)."""
    for p in range(len(subset)):
        s = subset[p]
        rest = subset[:p] + subset[p + 1 :]
        rest_set = set(rest)
        # x . e_s^* = -sum_c (ad x)_{s c} e_c^*
        for c in range(g.dim):
            coeff = g.bracket_basis(x_index, c).get(s)
            if not coeff or c in rest_set:
                continue
            pos = sum(1 for y in rest if y < c)
            before = p  # s was at position p
            sgn = (-1) ** ((pos + before) % 2)
            yield tuple(sorted(rest + (c,))), -sgn * coeff


def invariant_forms_dimension(g, k):
    """dim (Lambda^k g*)^g by exact kernel computation."""
    n = g.dim
    if n > MAX_DIM:
        raise TooLarge(f"dim g = {n} exceeds the cap {MAX_DIM}")
    use_graded = g.cartan is not None and g.is_semisimple()
    if use_graded:
        try:
            weights = g.weights_by_index()
        except NotDiagonalizable:
            use_graded = False
    if use_graded:
        from .liealg import recovered_cartan_matrix

        _, simple, _ = recovered_cartan_matrix(g)
        index_of = {}
        for i, w in enumerate(weights):
            index_of.setdefault(w, []).append(i)
        lower_indices = []
        for f in simple:
            neg = tuple(-x for x in f)
            idx = index_of[neg]
            assert len(idx) == 1
            lower_indices.append(idx[0])
        # invariants live in weight zero; for completely reducible modules a
        # zero-weight vector killed by every lowering operator is invariant
        zero_cols = [
            S
            for S in combinations(range(n), k)
            if not any(_subset_weight(weights, S))
        ]
        if not zero_cols:
            return 0
        col_index = {S: i for i, S in enumerate(zero_cols)}
        rows = []
        for fi in lower_indices:
            images = {}
            for S in zero_cols:
                for T, coeff in _coadjoint_wedge_apply(g, fi, S):
                    images.setdefault(T, {})[col_index[S]] = (
                        images.get(T, {}).get(col_index[S], Fraction(0)) + coeff
                    )
            for T, row in images.items():
                dense = [Fraction(0)] * len(zero_cols)
                for ci, v in row.items():
                    dense[ci] = v
                if any(dense):
                    rows.append(dense)
        return len(zero_cols) - (linalg.rank(rows) if rows else 0)
    cols = list(combinations(range(n), k))
    col_index = {S: i for i, S in enumerate(cols)}
    rows = []
    for x in range(n):
        images = {}
        for S in cols:
            for T, coeff in _coadjoint_wedge_apply(g, x, S):
                images.setdefault(T, [Fraction(0)] * len(cols))
                images[T][col_index[S]] += coeff
        rows.extend(r for r in images.values() if any(r))
    return len(cols) - (linalg.rank(rows) if rows else 0)


def invariant_forms_poincare(g):
    """Coefficients of sum_k dim (Lambda^k g*)^g q^k."""
    return [invariant_forms_dimension(g, k) for k in range(g.dim + 1)]


def triple_product_invariant(g):
    """dim (Lambda^3 g*)^g; equals 1 for simple g (the triple product)."""
    return invariant_forms_dimension(g, 3)


def exterior_generator_degrees(coeffs):
    """Degrees d_1 <= d_2 <= ... with prod (1 + q^{d_i}) = the given series."""
    poly = list(coeffs)
    while poly and poly[-1] == 0:
        poly.pop()
    degrees = []
    while poly != [1]:
        if not poly or poly[0] != 1:
            raise ValueError("series is not a product of (1 + q^d) factors")
        d = next((i for i in range(1, len(poly)) if poly[i]), None)
        if d is None:
            raise ValueError("series is not a product of (1 + q^d) factors")
        quot = [0] * (len(poly) - d)
        for i in range(len(quot)):
            quot[i] = poly[i] - (quot[i - d] if i >= d else 0)
        check = [0] * len(poly)
        for i, c in enumerate(quot):
            check[i] += c
            check[i + d] += c
        if check != poly:
            raise ValueError("series is not a product of (1 + q^d) factors")
        degrees.append(d)
        poly = quot
        while poly and poly[-1] == 0:
            poly.pop()
    return degrees
