"""Finite-dimensional Lie algebras by exact rational structure constants.

Brackets are stored sparsely for index pairs i < j; antisymmetry is built
in and the Jacobi identity is verified exhaustively on construction. The
classical constructors realize the split forms with the anti-diagonal-block
Gram matrices, so the diagonal Cartan marker indexes honest simultaneous
ad-eigenvector bases.
"""

import json
from fractions import Fraction

from . import linalg
from .errors import InvalidFile, JacobiFailure, NotDiagonalizable, ValidationError


class StructureLieAlgebra:
    def __init__(self, labels, table, cartan=None, validate=True):
        """table: {(i, j): {k: coeff}} for i < j; missing pairs are zero."""
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.table = {}
        for (i, j), row in table.items():
            if i == j:
                if any(row.values()):
                    raise ValidationError("[x, x] must vanish")
                continue
            if i > j:
                i, j, row = j, i, {k: -c for k, c in row.items()}
            clean = {k: Fraction(c) for k, c in row.items() if Fraction(c)}
            if clean:
                self.table[(i, j)] = clean
        self.cartan = tuple(cartan) if cartan is not None else None
        if validate:
            self._check_jacobi()

    # -- brackets -------------------------------------------------------

    def bracket_basis(self, i, j):
        if i == j:
            return {}
        if i < j:
            return self.table.get((i, j), {})
        return {k: -c for k, c in self.table.get((j, i), {}).items()}

    def bracket(self, x, y):
        """Bracket of sparse vectors {index: coeff}."""
        out = {}
        for i, a in x.items():
            if not a:
                continue
            for j, b in y.items():
                if not b or i == j:
                    continue
                ab = a * b
                for k, c in self.bracket_basis(i, j).items():
                    v = out.get(k, Fraction(0)) + ab * c
                    if v:
                        out[k] = v
                    else:
                        out.pop(k, None)
        return out

    def _check_jacobi(self):
        n = self.dim
        for i in range(n):
            ei = {i: Fraction(1)}
            for j in range(i + 1, n):
                ej = {j: Fraction(1)}
                bij = self.bracket_basis(i, j)
                for k in range(j + 1, n):
                    ek = {k: Fraction(1)}
                    acc = self.bracket(ei, self.bracket_basis(j, k))
                    bki = {m: -c for m, c in self.bracket_basis(i, k).items()}
                    for m, c in self.bracket(ej, bki).items():
                        acc[m] = acc.get(m, Fraction(0)) + c
                    for m, c in self.bracket(ek, bij).items():
                        acc[m] = acc.get(m, Fraction(0)) + c
                    if any(acc.values()):
                        raise JacobiFailure(
                            f"Jacobi fails on basis triple ({i}, {j}, {k})"
                        )

    # -- linear algebra helpers ------------------------------------------

    def ad(self, i):
        """Matrix of ad(e_i) as {col: {row: coeff}} columns."""
        return {k: self.bracket_basis(i, k) for k in range(self.dim)}

    def killing_form(self):
        n = self.dim
        ads = [self.ad(i) for i in range(n)]
        K = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                tr = Fraction(0)
                for k in range(n):
                    # (ad_i ad_j e_k) coefficient of e_k
                    for l, c in ads[j][k].items():
                        tr += c * ads[i][l].get(k, Fraction(0))
                K[i][j] = K[j][i] = tr
        return K

    # -- series and predicates --------------------------------------------

    def _span(self, vectors):
        """RREF basis rows of the span of dense Fraction vectors."""
        rows, _ = linalg.rref([list(v) for v in vectors]) if vectors else ([], [])
        return rows

    def _dense(self, sparse):
        v = [Fraction(0)] * self.dim
        for k, c in sparse.items():
            v[k] = c
        return v

    def _sparse(self, dense):
        return {i: c for i, c in enumerate(dense) if c}

    def _bracket_spans(self, basis_a, basis_b):
        out = []
        for va in basis_a:
            sa = self._sparse(va)
            for vb in basis_b:
                w = self.bracket(sa, self._sparse(vb))
                if w:
                    out.append(self._dense(w))
        return self._span(out)

    def series(self, kind="derived"):
        """Dimensions of the derived or lower central series, until stable."""
        full = [
            [Fraction(int(i == j)) for j in range(self.dim)] for i in range(self.dim)
        ]
        dims = [self.dim]
        current = full
        while True:
            nxt = self._bracket_spans(
                current if kind == "derived" else full, current
            )
            dims.append(len(nxt))
            if len(nxt) == 0 or len(nxt) == dims[-2]:
                return dims
            current = nxt

    def is_solvable(self):
        by_series = self.series("derived")[-1] == 0
        # Cartan criterion: [g, g] inside the kernel of the Killing form
        K = self.killing_form()
        comm = self._bracket_spans(
            [self._dense({i: Fraction(1)}) for i in range(self.dim)],
            [self._dense({i: Fraction(1)}) for i in range(self.dim)],
        )
        by_cartan = all(
            sum(K[i][j] * v[j] for j in range(self.dim)) == 0
            for v in comm
            for i in range(self.dim)
        )
        assert by_series == by_cartan, "solvability criteria disagree"
        return by_series

    def is_nilpotent(self):
        return self.series("lower_central")[-1] == 0

    def is_semisimple(self):
        return linalg.det(self.killing_form()) != 0

    # -- root decomposition ------------------------------------------------

    def weights_by_index(self):
        """ad-eigenvalue tuple of each basis vector under the marked Cartan.

        Requires every basis vector to be a simultaneous eigenvector;
        Cartan members get the zero functional.
        """
        if self.cartan is None:
            raise NotDiagonalizable("no Cartan marker present")
        out = []
        for k in range(self.dim):
            func = []
            for h in self.cartan:
                row = self.bracket_basis(h, k)
                extra = {m: c for m, c in row.items() if m != k}
                if extra:
                    raise NotDiagonalizable(
                        f"ad of Cartan element {h} is not diagonal on index {k}"
                    )
                func.append(row.get(k, Fraction(0)))
            if k in self.cartan and any(func):
                raise NotDiagonalizable("Cartan elements do not commute")
            out.append(tuple(func))
        return out

    def root_decomposition(self):
        """[(root functional, dimension)] over nonzero weights, sorted."""
        weights = self.weights_by_index()
        spaces = {}
        for k, f in enumerate(weights):
            if any(f):
                spaces.setdefault(f, []).append(k)
        zero_dim = sum(1 for f in weights if not any(f))
        if zero_dim != len(self.cartan):
            raise NotDiagonalizable("zero-weight space exceeds the marked Cartan")
        return sorted((f, len(ix)) for f, ix in spaces.items())


# ---------------------------------------------------------------------------
# modules


class LieModule:
    def __init__(self, algebra, mats, validate=True):
        self.algebra = algebra
        self.dim = len(mats[0]) if mats else 0
        self.mats = [
            [[Fraction(x) for x in row] for row in m] for m in mats
        ]
        if len(self.mats) != algebra.dim:
            raise ValidationError("need one action matrix per basis element")
        if validate:
            self._check_action()

    def _check_action(self):
        for i in range(self.algebra.dim):
            for j in range(i + 1, self.algebra.dim):
                lhs = _mat_sub(
                    _mat_mul(self.mats[i], self.mats[j]),
                    _mat_mul(self.mats[j], self.mats[i]),
                )
                rhs = [[Fraction(0)] * self.dim for _ in range(self.dim)]
                for k, c in self.algebra.bracket_basis(i, j).items():
                    for a in range(self.dim):
                        for b in range(self.dim):
                            rhs[a][b] += c * self.mats[k][a][b]
                if lhs != rhs:
                    raise ValidationError(
                        f"action fails the bracket relation on pair ({i}, {j})"
                    )

    def act(self, i, vec):
        m = self.mats[i]
        return [
            sum(m[a][b] * vec[b] for b in range(self.dim)) for a in range(self.dim)
        ]


def trivial_module(algebra):
    return LieModule(algebra, [[[Fraction(0)]] for _ in range(algebra.dim)], validate=False)


def _mat_mul(a, b):
    n, m, p = len(a), len(b[0]), len(b)
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        for k in range(p):
            if a[i][k]:
                aik = a[i][k]
                for j in range(m):
                    if b[k][j]:
                        out[i][j] += aik * b[k][j]
    return out


def _mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


# ---------------------------------------------------------------------------
# constructors


def _from_matrices(labels, mats, cartan=None):
    """Structure constants of a Lie algebra of sparse matrices (exact).

    mats are {(row, col): coeff} dicts; closure under the commutator is
    verified, so a basis that does not span a Lie algebra is rejected.
    """
    dim = len(mats)
    mats = [{pos: Fraction(v) for pos, v in m.items() if v} for m in mats]
    positions = sorted({pos for m in mats for pos in m})
    pos_index = {p: i for i, p in enumerate(positions)}
    cols = len(positions)
    aug = [
        [mats[r].get(positions[c], Fraction(0)) for r in range(dim)]
        + [Fraction(int(c == c2)) for c2 in range(cols)]
        for c in range(cols)
    ]
    rows, pivots = linalg.rref(aug)
    if pivots[:dim] != list(range(dim)):
        raise ValidationError("matrices are linearly dependent")
    left_inv = [rows[i][dim:] for i in range(dim)]

    def commutator(a, b):
        out = {}
        for (r1, c1), v1 in a.items():
            for (r2, c2), v2 in b.items():
                if c1 == r2:
                    out[(r1, c2)] = out.get((r1, c2), Fraction(0)) + v1 * v2
                if c2 == r1:
                    out[(r2, c1)] = out.get((r2, c1), Fraction(0)) - v1 * v2
        return {p: v for p, v in out.items() if v}

    table = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            comm = commutator(mats[i], mats[j])
            if any(p not in pos_index for p in comm):
                raise ValidationError("commutator escapes the span of the basis")
            entry = {}
            for k in range(dim):
                c = sum(left_inv[k][pos_index[p]] * v for p, v in comm.items())
                if c:
                    entry[k] = c
            recon = {}
            for k, c in entry.items():
                for p, v in mats[k].items():
                    recon[p] = recon.get(p, Fraction(0)) + c * v
            if {p: v for p, v in recon.items() if v} != comm:
                raise ValidationError("commutator escapes the span of the basis")
            if entry:
                table[(i, j)] = entry
    return StructureLieAlgebra(labels, table, cartan=cartan)


def _e(n, a, b, val=1):
    return {(a, b): Fraction(val)}


def _madd(*ms):
    out = {}
    for m in ms:
        for p, v in m.items():
            out[p] = out.get(p, Fraction(0)) + v
    return {p: v for p, v in out.items() if v}


def sl(n):
    """Traceless n x n matrices; Cartan = the diagonal differences."""
    labels, mats = [], []
    for i in range(n - 1):
        labels.append(f"h{i + 1}")
        mats.append(_madd(_e(n, i, i), _e(n, i + 1, i + 1, -1)))
    cartan = tuple(range(n - 1))
    for a in range(n):
        for b in range(n):
            if a != b:
                labels.append(f"E{a + 1}{b + 1}")
                mats.append(_e(n, a, b))
    return _from_matrices(labels, mats, cartan=cartan)


def so(n):
    """Split orthogonal algebra for the hyperbolic-block Gram matrix."""
    if n % 2 == 0:
        m = n // 2
        labels, mats = [], []
        for i in range(m):
            labels.append(f"h{i + 1}")
            mats.append(_madd(_e(n, i, i), _e(n, m + i, m + i, -1)))
        cartan = tuple(range(m))
        for a in range(m):
            for b in range(m):
                if a != b:
                    labels.append(f"a{a + 1}{b + 1}")
                    mats.append(_madd(_e(n, a, b), _e(n, m + b, m + a, -1)))
        for a in range(m):
            for b in range(a + 1, m):
                labels.append(f"b{a + 1}{b + 1}")
                mats.append(_madd(_e(n, a, m + b), _e(n, b, m + a, -1)))
                labels.append(f"c{a + 1}{b + 1}")
                mats.append(_madd(_e(n, m + b, a), _e(n, m + a, b, -1)))
        return _from_matrices(labels, mats, cartan=cartan)
    m = (n - 1) // 2
    # index 0 carries the quadratic form's square term; blocks 1..m, m+1..2m
    labels, mats = [], []
    for i in range(m):
        labels.append(f"h{i + 1}")
        mats.append(_madd(_e(n, 1 + i, 1 + i), _e(n, 1 + m + i, 1 + m + i, -1)))
    cartan = tuple(range(m))
    for a in range(m):
        for b in range(m):
            if a != b:
                labels.append(f"a{a + 1}{b + 1}")
                mats.append(
                    _madd(_e(n, 1 + a, 1 + b), _e(n, 1 + m + b, 1 + m + a, -1))
                )
    for a in range(m):
        for b in range(a + 1, m):
            labels.append(f"b{a + 1}{b + 1}")
            mats.append(
                _madd(_e(n, 1 + a, 1 + m + b), _e(n, 1 + b, 1 + m + a, -1))
            )
            labels.append(f"c{a + 1}{b + 1}")
            mats.append(
                _madd(_e(n, 1 + m + b, 1 + a), _e(n, 1 + m + a, 1 + b, -1))
            )
    for i in range(m):
        labels.append(f"w{i + 1}")
        mats.append(_madd(_e(n, 1 + i, 0), _e(n, 0, 1 + m + i, -1)))
        labels.append(f"u{i + 1}")
        mats.append(_madd(_e(n, 0, 1 + i), _e(n, 1 + m + i, 0, -1)))
    return _from_matrices(labels, mats, cartan=cartan)


def sp(n):
    """Symplectic algebra sp_n (n even) for the standard symplectic form."""
    if n % 2:
        raise ValidationError("sp requires an even matrix size")
    m = n // 2
    labels, mats = [], []
    for i in range(m):
        labels.append(f"h{i + 1}")
        mats.append(_madd(_e(n, i, i), _e(n, m + i, m + i, -1)))
    cartan = tuple(range(m))
    for a in range(m):
        for b in range(m):
            if a != b:
                labels.append(f"a{a + 1}{b + 1}")
                mats.append(_madd(_e(n, a, b), _e(n, m + b, m + a, -1)))
    for a in range(m):
        for b in range(a, m):
            labels.append(f"b{a + 1}{b + 1}")
            if a == b:
                mats.append(_e(n, a, m + a))
            else:
                mats.append(_madd(_e(n, a, m + b), _e(n, b, m + a)))
            labels.append(f"c{a + 1}{b + 1}")
            if a == b:
                mats.append(_e(n, m + a, a))
            else:
                mats.append(_madd(_e(n, m + b, a), _e(n, m + a, b)))
    return _from_matrices(labels, mats, cartan=cartan)


def heisenberg():
    """Basis x, y, c with [x, y] = c central."""
    return StructureLieAlgebra(
        ["x", "y", "c"], {(0, 1): {2: Fraction(1)}}
    )


def upper_triangular(n):
    labels, mats = [], []
    for a in range(n):
        for b in range(a, n):
            labels.append(f"E{a + 1}{b + 1}")
            mats.append(_e(n, a, b))
    return _from_matrices(labels, mats)


def strictly_upper_triangular(n):
    labels, mats = [], []
    for a in range(n):
        for b in range(a + 1, n):
            labels.append(f"E{a + 1}{b + 1}")
            mats.append(_e(n, a, b))
    return _from_matrices(labels, mats)


def abelian(n):
    return StructureLieAlgebra([f"e{i + 1}" for i in range(n)], {})


def direct_sum(g1, g2):
    labels = [f"a.{x}" for x in g1.labels] + [f"b.{x}" for x in g2.labels]
    table = {}
    for (i, j), row in g1.table.items():
        table[(i, j)] = dict(row)
    off = g1.dim
    for (i, j), row in g2.table.items():
        table[(i + off, j + off)] = {k + off: c for k, c in row.items()}
    cartan = None
    if g1.cartan is not None and g2.cartan is not None:
        cartan = tuple(g1.cartan) + tuple(i + off for i in g2.cartan)
    return StructureLieAlgebra(labels, table, cartan=cartan, validate=False)


def change_basis(g, p):
    """Structure constants in the basis e'_j = sum_i p[i][j] e_i."""
    n = g.dim
    p = [[Fraction(x) for x in row] for row in p]
    pinv = linalg.inverse(p)
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            xi = {k: p[k][i] for k in range(n) if p[k][i]}
            xj = {k: p[k][j] for k in range(n) if p[k][j]}
            br = g.bracket(xi, xj)
            entry = {}
            for k in range(n):
                c = sum(pinv[k][m] * v for m, v in br.items())
                if c:
                    entry[k] = c
            if entry:
                table[(i, j)] = entry
    return StructureLieAlgebra([f"v{i + 1}" for i in range(n)], table)


# ---------------------------------------------------------------------------
# file interface


def from_dict(data):
    try:
        dim = int(data["dim"])
        labels = list(data.get("basis", [f"e{i + 1}" for i in range(dim)]))
        if len(labels) != dim:
            raise InvalidFile("basis length does not match dim")
        table = {}
        for item in data.get("brackets", []):
            i, j = int(item["i"]), int(item["j"])
            if not (0 <= i < dim and 0 <= j < dim):
                raise InvalidFile(f"bracket indices ({i}, {j}) out of range")
            row = {}
            for k, c in item["coeffs"].items():
                k = int(k)
                if not 0 <= k < dim:
                    raise InvalidFile(f"bracket target {k} out of range")
                row[k] = Fraction(str(c))
            table[(i, j)] = row
        cartan = data.get("cartan")
        if cartan is not None:
            cartan = tuple(int(i) for i in cartan)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidFile(f"malformed structure-constant data: {exc}") from exc
    return StructureLieAlgebra(labels, table, cartan=cartan)


def from_file(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidFile(f"cannot read {path}: {exc}") from exc
    return from_dict(data)


def to_dict(g):
    out = {
        "dim": g.dim,
        "basis": list(g.labels),
        "brackets": [
            {"i": i, "j": j, "coeffs": {str(k): str(c) for k, c in row.items()}}
            for (i, j), row in sorted(g.table.items())
        ],
    }
    if g.cartan is not None:
        out["cartan"] = list(g.cartan)
    return out


# ---------------------------------------------------------------------------
# concordance with abstract root systems


def recovered_cartan_matrix(g):
    """Cartan matrix of the root decomposition of a marked semisimple g.

    Roots are polarized lexicographically; the pairing is the dual of the
    Killing form restricted to the marked Cartan.
    """
    decomp = g.root_decomposition()
    roots = [f for f, _ in decomp]
    positives = [f for f in roots if f > tuple([0] * len(g.cartan))]
    simple = []
    pos_set = set(positives)
    for f in positives:
        if not any(
            tuple(a - b for a, b in zip(f, g2)) in pos_set
            for g2 in positives
            if g2 != f
        ):
            simple.append(f)
    simple.sort()
    k = g.killing_form()
    kres = [[k[i][j] for j in g.cartan] for i in g.cartan]
    binv = linalg.inverse(kres)

    def pair(f1, f2):
        return sum(
            f1[a] * binv[a][b] * f2[b]
            for a in range(len(f1))
            for b in range(len(f2))
        )

    r = len(simple)
    A = [
        [
            int(2 * pair(simple[i], simple[j]) / pair(simple[i], simple[i]))
            for j in range(r)
        ]
        for i in range(r)
    ]
    return A, simple, roots


def root_coordinates(simple, roots):
    """Each root functional written over the simple ones (exact)."""
    mat = [[simple[j][a] for j in range(len(simple))] for a in range(len(simple[0]))]
    out = []
    for f in roots:
        sol = linalg.solve(mat, list(f))
        assert sol is not None
        out.append(tuple(int(x) for x in sol))
    return out
