"""Reduced root systems from Cartan matrices or Dynkin type labels.

Conventions (fixed across the package):

* Cartan matrix entries a_ij = <alpha_j, alpha_i^vee>, so the fundamental
  coordinates of a root with simple-root coordinates n are A @ n.
* Roots are stored in simple-root coordinates (integer tuples); weights in
  fundamental-weight coordinates (integer or Fraction tuples).
* The symmetrizer d is the smallest positive integer vector with
  d_i a_ij = d_j a_ji; the invariant pairing is (alpha_i, alpha_j) = d_i a_ij.
  Every quantity exposed here is invariant under rescaling d.

Vertex numbering for built-in types: A/B/C/D chains end with the short (B)
or long (C) root at vertex n; D forks at n-2; E6/E7/E8 attach vertex 1 to
vertex 3 and vertex 2 to vertex 4 on the chain 3-4-...-n; F4 has the double
edge from vertex 2 to vertex 3 pointing 3 -> 2; G2 is [[2,-1],[-3,2]].
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import linalg
from .errors import (
    DimensionMismatch,
    NotCartan,
    Reducible,
    UnsupportedType,
)


@dataclass(frozen=True)
class Root:
    """A root in simple-root coordinates."""

    coords: tuple

    def height(self):
        return sum(self.coords)


@dataclass(frozen=True)
class Weight:
    """A weight in fundamental-weight coordinates."""

    coords: tuple

    def is_integral(self):
        return all(Fraction(c).denominator == 1 for c in self.coords)

    def is_dominant(self):
        return all(c >= 0 for c in self.coords)


# ---------------------------------------------------------------------------
# standard Cartan matrices


def standard_cartan(family, rank):
    f = family.upper()
    n = rank
    if f == "A" and n >= 1:
        a = _chain(n)
    elif f == "B" and n >= 1:
        a = _chain(n)
        if n >= 2:
            a[n - 1][n - 2] = -2
    elif f == "C" and n >= 1:
        a = _chain(n)
        if n >= 2:
            a[n - 2][n - 1] = -2
    elif f == "D" and n >= 2:
        a = _chain(n)
        if n >= 3:
            a[n - 1][n - 2] = a[n - 2][n - 1] = 0
            a[n - 1][n - 3] = a[n - 3][n - 1] = -1
        else:
            a[0][1] = a[1][0] = 0
    elif f == "E" and n in (6, 7, 8):
        a = [[2 * (i == j) for j in range(n)] for i in range(n)]
        edges = [(1, 3), (2, 4), (3, 4)] + [(i, i + 1) for i in range(4, n)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    elif f == "F" and n == 4:
        a = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    elif f == "G" and n == 2:
        a = [[2, -1], [-3, 2]]
    else:
        raise UnsupportedType(f"no root system of type {family}{rank}")
    return tuple(tuple(row) for row in a)


def _chain(n):
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def parse_type(label):
    """Parse "A5", "E8" or a product like "B3xG2" into [(family, rank), ...]."""
    parts = label.replace(" ", "").split("x")
    out = []
    for p in parts:
        m = re.fullmatch(r"([A-Ga-g])(\d+)", p)
        if not m:
            raise UnsupportedType(f"cannot parse type label {p!r}")
        out.append((m.group(1).upper(), int(m.group(2))))
    return out


def cartan_from_types(types):
    """Block-diagonal Cartan matrix of a product of types."""
    blocks = [standard_cartan(f, r) for f, r in types]
    n = sum(len(b) for b in blocks)
    a = [[0] * n for _ in range(n)]
    ofs = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                a[ofs + i][ofs + j] = v
        ofs += len(b)
    return tuple(tuple(row) for row in a)


# ---------------------------------------------------------------------------
# validation and classification


def symmetrizer(entries):
    """Smallest positive integer d with d_i a_ij = d_j a_ji, or None."""
    n = len(entries)
    d = [None] * n
    for comp in _components(entries):
        start = comp[0]
        d[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in comp:
                if entries[i][j] and i != j:
                    # d_j = d_i a_ij / a_ji
                    val = d[i] * Fraction(entries[i][j], entries[j][i])
                    if d[j] is None:
                        d[j] = val
                        queue.append(j)
                    elif d[j] != val:
                        return None
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in d]
    g = 0
    for v in ints:
        g = _gcd(g, v)
    return tuple(v // g for v in ints)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _components(entries):
    n = len(entries)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = [s]
        while queue:
            i = queue.pop()
            for j in range(n):
                if not seen[j] and entries[i][j] != 0:
                    seen[j] = True
                    comp.append(j)
                    queue.append(j)
        comps.append(sorted(comp))
    return comps


def _axioms(entries):
    n = len(entries)
    for i in range(n):
        if len(entries[i]) != n:
            raise NotCartan("matrix is not square")
        if entries[i][i] != 2:
            raise NotCartan(f"diagonal entry a_{i + 1}{i + 1} != 2")
        for j in range(n):
            v = entries[i][j]
            if v != int(v):
                raise NotCartan("entries must be integers")
            if i != j and v > 0:
                raise NotCartan(f"positive off-diagonal entry a_{i + 1}{j + 1}")
            if i != j and (v == 0) != (entries[j][i] == 0):
                raise NotCartan(f"zero pattern not symmetric at ({i + 1},{j + 1})")


def _matrices_isomorphic(a, b):
    """Permutation equivalence of two square integer matrices (small rank)."""
    n = len(a)
    if len(b) != n:
        return False

    def profile(m, i):
        return tuple(sorted((m[i][j], m[j][i]) for j in range(n) if j != i and m[i][j]))

    pa = [profile(a, i) for i in range(n)]
    pb = [profile(b, i) for i in range(n)]
    if sorted(pa) != sorted(pb):
        return False
    order = sorted(range(n), key=lambda i: (pa[i], -sum(1 for j in range(n) if a[i][j])))
    assign = [None] * n
    used = [False] * n

    def backtrack(k):
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if used[j] or pb[j] != pa[i]:
                continue
            ok = True
            for k2 in range(k):
                i2 = order[k2]
                j2 = assign[i2]
                if a[i][i2] != b[j][j2] or a[i2][i] != b[j2][j]:
                    ok = False
                    break
            if ok:
                assign[i] = j
                used[j] = True
                if backtrack(k + 1):
                    return True
                assign[i] = None
                used[j] = False
        return False

    return backtrack(0)


def _classify_component(entries, comp):
    sub = tuple(tuple(entries[i][j] for j in comp) for i in comp)
    r = len(comp)
    candidates = [("A", 1)] if r == 1 else []
    if r >= 2:
        candidates.append(("A", r))
        candidates.append(("B", r))
        if r >= 3:
            candidates.append(("C", r))
        if r >= 4:
            candidates.append(("D", r))
        if r in (6, 7, 8):
            candidates.append(("E", r))
        if r == 4:
            candidates.append(("F", 4))
        if r == 2:
            candidates.append(("G", 2))
    for fam, rk in candidates:
        if _matrices_isomorphic(sub, standard_cartan(fam, rk)):
            return (fam, rk)
    raise NotCartan("not isomorphic to any Dynkin type")


def validate_cartan(entries):
    """Check the Cartan axioms and return the connected Dynkin types.

    Raises NotCartan with a reason distinguishing axiom violations from a
    non-positive-definite symmetrization ("affine" vs "indefinite").
    """
    entries = tuple(tuple(int(v) for v in row) for row in entries)
    _axioms(entries)
    d = symmetrizer(entries)
    if d is None:
        raise NotCartan("not symmetrizable")
    sym = [[d[i] * entries[i][j] for j in range(len(entries))] for i in range(len(entries))]
    minors = linalg.leading_principal_minors(sym)
    if any(m <= 0 for m in minors):
        if _is_positive_semidefinite(sym):
            raise NotCartan("affine")
        raise NotCartan("indefinite")
    return [_classify_component(entries, comp) for comp in _components(entries)]


def _is_positive_semidefinite(sym):
    n = len(sym)
    from itertools import combinations

    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            sub = [[sym[i][j] for j in idx] for i in idx]
            if linalg.det(sub) < 0:
                return False
    return True


# ---------------------------------------------------------------------------
# the root system itself


class RootSystem:
    """A reduced root system generated by closing the simple roots under
    the simple reflections."""

    def __init__(self, cartan, d=None):
        if isinstance(cartan, str):
            cartan = cartan_from_types(parse_type(cartan))
        elif isinstance(cartan, tuple) and len(cartan) == 2 and isinstance(cartan[0], str):
            cartan = cartan_from_types([cartan])
        self.cartan = tuple(tuple(int(v) for v in row) for row in cartan)
        _axioms(self.cartan)
        self.rank = len(self.cartan)
        self.d = tuple(d) if d is not None else symmetrizer(self.cartan)
        if self.d is None:
            raise NotCartan("not symmetrizable")
        sym = [
            [self.d[i] * self.cartan[i][j] for j in range(self.rank)]
            for i in range(self.rank)
        ]
        if any(m <= 0 for m in linalg.leading_principal_minors(sym)):
            raise NotCartan(
                "affine" if _is_positive_semidefinite(sym) else "indefinite"
            )
        self.components = _components(self.cartan)
        self._generate_roots()
        self._cache = {}

    # -- construction -------------------------------------------------

    def _generate_roots(self):
        r = self.rank
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        seen = set(simple)
        queue = list(simple)
        while queue:
            n = queue.pop()
            for i in range(r):
                m = self.reflect_root(i, n)
                if m not in seen:
                    seen.add(m)
                    queue.append(m)
        positives = sorted(
            (n for n in seen if all(c >= 0 for c in n)),
            key=lambda n: (sum(n), n),
        )
        self.positive_roots = tuple(positives)
        self.roots = self.positive_roots + tuple(
            tuple(-c for c in n) for n in self.positive_roots
        )

    # -- coordinate plumbing ------------------------------------------

    def reflect_root(self, i, n):
        """Simple reflection s_i on simple-root coordinates."""
        pair = sum(self.cartan[i][j] * n[j] for j in range(self.rank))
        out = list(n)
        out[i] -= pair
        return tuple(out)

    def reflect_weight(self, i, lam):
        """Simple reflection s_i on fundamental-weight coordinates."""
        li = lam[i]
        if li == 0:
            return tuple(lam)
        return tuple(
            lam[j] - li * self.cartan[j][i] for j in range(self.rank)
        )

    def root_to_weight(self, n):
        """Fundamental coordinates of a root-lattice vector (A @ n)."""
        return tuple(
            sum(self.cartan[i][j] * n[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def weight_to_root(self, lam):
        """Simple-root coordinates of a weight; exact Fractions."""
        inv = self._cached("cartan_inv", lambda: linalg.inverse(self.cartan))
        return tuple(
            sum(inv[i][j] * Fraction(lam[j]) for j in range(self.rank))
            for i in range(self.rank)
        )

    def pair(self, lam, mu):
        """Invariant pairing of two weights in fundamental coordinates."""
        if len(lam) != self.rank or len(mu) != self.rank:
            raise DimensionMismatch("weight length does not match rank")
        m = self.weight_to_root(mu)
        return sum(m[j] * self.d[j] * Fraction(lam[j]) for j in range(self.rank))

    def root_norm_half(self, n):
        """d_alpha = (alpha, alpha)/2 for a root with coordinates n."""
        val = 0
        for i in range(self.rank):
            if n[i]:
                for j in range(self.rank):
                    if n[j]:
                        val += n[i] * self.d[i] * self.cartan[i][j] * n[j]
        assert val % 2 == 0
        return val // 2

    def coroot(self, n):
        """Coordinates of alpha^vee in the simple-coroot basis."""
        da = self.root_norm_half(n)
        out = []
        for i in range(self.rank):
            c = Fraction(n[i] * self.d[i], da)
            assert c.denominator == 1
            out.append(int(c))
        return tuple(out)

    def pair_weight_coroot(self, lam, cov):
        """<lam, beta^vee> for a coweight in simple-coroot coordinates."""
        return sum(Fraction(lam[i]) * cov[i] for i in range(self.rank))

    # -- derived constants --------------------------------------------

    def _cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def _require_irreducible(self):
        if len(self.components) != 1:
            raise Reducible("operation requires an irreducible root system")

    @property
    def num_positive(self):
        return len(self.positive_roots)

    @property
    def rho(self):
        return (1,) * self.rank

    @property
    def rho_check_coords(self):
        """rho^vee in simple-coroot coordinates (root coords of the dual rho)."""
        return self._cached(
            "rho_check", lambda: tuple(self.dual().weight_to_root((1,) * self.rank))
        )

    def height_census(self):
        census = {}
        for n in self.positive_roots:
            census[sum(n)] = census.get(sum(n), 0) + 1
        return census

    def highest_root(self):
        self._require_irreducible()

        def compute():
            best = max(self.positive_roots, key=lambda n: sum(n))
            ties = [n for n in self.positive_roots if sum(n) == sum(best)]
            assert len(ties) == 1
            return best

        return self._cached("theta", compute)

    def exponents(self):
        self._require_irreducible()

        def compute():
            census = self.height_census()
            hmax = max(census)
            out = []
            for m in range(1, hmax + 1):
                drop = census.get(m, 0) - census.get(m + 1, 0)
                out.extend([m] * drop)
            return tuple(sorted(out))

        return self._cached("exponents", compute)

    def coxeter_numbers(self):
        """(h, h^vee)."""
        self._require_irreducible()
        h = sum(self.highest_root()) + 1
        theta_vee = self.coroot(self.highest_root())
        # theta^vee is the highest root of the dual system only up to the
        # long/short swap; h^vee = <rho, theta^vee> + 1 works regardless.
        hv = sum(theta_vee) + 1
        return (h, hv)

    def dual(self):
        def compute():
            at = tuple(
                tuple(self.cartan[j][i] for j in range(self.rank))
                for i in range(self.rank)
            )
            return RootSystem(at)

        return self._cached("dual", compute)

    def minuscule_weights(self):
        """All minuscule dominant weights, including 0."""
        self._require_irreducible()
        dual_theta = self.dual().highest_root()  # theta^vee in coroot coords
        out = [(0,) * self.rank]
        for i in range(self.rank):
            if dual_theta[i] == 1:
                out.append(tuple(int(i == j) for j in range(self.rank)))
        return out

    def weight_lattice_quotient(self):
        """Elementary divisors (>1) of the Cartan matrix: P/Q as a product
        of cyclic groups."""
        return [f for f in linalg.smith_normal_form(self.cartan) if f > 1]

    def types(self):
        return [_classify_component(self.cartan, comp) for comp in self.components]


# ---------------------------------------------------------------------------
# spec-level operation wrappers


def build(spec):
    """Build a root system from a type label, (family, rank) pair, or matrix."""
    return RootSystem(spec)


def highest_root(rs):
    theta = rs.highest_root()
    return Root(theta)


def exponents(rs):
    return list(rs.exponents())


def coxeter_numbers(rs):
    return rs.coxeter_numbers()


def rho(rs):
    return Weight(rs.rho)


def rho_check(rs):
    return Root(rs.rho_check_coords)


def minuscule_weights(rs):
    return [Weight(w) for w in rs.minuscule_weights()]


def weight_lattice_quotient(rs):
    return rs.weight_lattice_quotient()


def dual_root_system(rs):
    return rs.dual()


def pairing(rs, x, y):
    """Invariant pairing; accepts Root (simple-root coords) or Weight values."""

    def fund(v):
        if isinstance(v, Root):
            return rs.root_to_weight(v.coords)
        if isinstance(v, Weight):
            return v.coords
        return tuple(v)

    return rs.pair(fund(x), fund(y))
