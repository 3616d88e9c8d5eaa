"""End-to-end property battery behind `liekit selftest`.

Each check prints one pass/fail line; the run exits nonzero if anything
fails. The checks mirror the package's acceptance suite at a size that
finishes comfortably on a laptop.  All arithmetic is exact, so every
comparison is equality.
"""

import random
import time
from fractions import Fraction

from . import chars, cohomology, freelie, liealg, rootsys, symfun, voganforms, weyl


def _g2_path():
    import importlib.resources

    return importlib.resources.files("liekit") / "data" / "g2.json"


# ---------------------------------------------------------------------------
# matrix oracle for the BCH series (independent of the series engine)


def matrix_exp_nilpotent(m):
    n = len(m)
    out = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    power = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    fact = 1
    for k in range(1, n):
        power = _mul(power, m)
        fact *= k
        if all(all(x == 0 for x in row) for row in power):
            break
        for i in range(n):
            for j in range(n):
                out[i][j] += power[i][j] / fact
    return out


def matrix_log_unipotent(m):
    n = len(m)
    u = [[m[i][j] - (i == j) for j in range(n)] for i in range(n)]
    out = [[Fraction(0)] * n for _ in range(n)]
    power = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(1, n):
        power = _mul(power, u)
        if all(all(x == 0 for x in row) for row in power):
            break
        sign = Fraction((-1) ** (k + 1), k)
        for i in range(n):
            for j in range(n):
                out[i][j] += sign * power[i][j]
    return out


def _mul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def _comm(a, b):
    ab = _mul(a, b)
    ba = _mul(b, a)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def evaluate_bracket(bracket, mats):
    if isinstance(bracket, int):
        return mats[bracket]
    return _comm(evaluate_bracket(bracket[0], mats), evaluate_bracket(bracket[1], mats))


def bch_matrix_oracle(order, rng):
    """Compare bch(order) against log(exp X exp Y) on strictly upper
    triangular matrices of nilpotency index order + 1."""
    n = order + 1
    for _ in range(3):
        X = [[Fraction(0)] * n for _ in range(n)]
        Y = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                X[i][j] = Fraction(rng.randint(-3, 3))
                Y[i][j] = Fraction(rng.randint(-3, 3))
        rhs = matrix_log_unipotent(_mul(matrix_exp_nilpotent(X), matrix_exp_nilpotent(Y)))
        elt = freelie.bch(order)
        lhs = [[Fraction(0)] * n for _ in range(n)]
        for b, c in elt.coords.items():
            val = evaluate_bracket(b, [X, Y])
            for i in range(n):
                for j in range(n):
                    lhs[i][j] += c * val[i][j]
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# random validated Lie algebras


def random_algebra(rng, max_dim=8):
    pool = [
        lambda: liealg.abelian(rng.randint(1, 4)),
        liealg.heisenberg,
        lambda: liealg.upper_triangular(rng.choice([2, 3])),
        lambda: liealg.strictly_upper_triangular(rng.choice([3, 4])),
        lambda: liealg.sl(2),
        lambda: liealg.StructureLieAlgebra(
            ["x", "y"], {(0, 1): {1: Fraction(1)}}
        ),  # the nonabelian 2-dim algebra
    ]
    g = rng.choice(pool)()
    if g.dim <= 5 and rng.random() < 0.5:
        g = liealg.direct_sum(g, rng.choice(pool[:2])())
    if g.dim > max_dim:
        return random_algebra(rng, max_dim)
    # random unimodular change of basis keeps brackets exact
    n = g.dim
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            c = rng.randint(-2, 2)
            for k in range(n):
                p[k][i] += c * p[k][j]
    return liealg.change_basis(g, p)


# ---------------------------------------------------------------------------
# the checks


def _check_roots():
    expect = {"A2": 6, "G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240}
    return all(len(rootsys.build(t).roots) == n for t, n in expect.items())


def _check_exponents():
    data = {
        "F4": [1, 5, 7, 11],
        "E6": [1, 4, 5, 7, 8, 11],
        "E7": [1, 5, 7, 9, 11, 13, 17],
        "E8": [1, 7, 11, 13, 17, 19, 23, 29],
    }
    for n in range(2, 7):
        data[f"B{n}"] = list(range(1, 2 * n, 2))
        data[f"C{n}"] = list(range(1, 2 * n, 2))
    for t, e in data.items():
        rs = rootsys.build(t)
        if list(rs.exponents()) != e or sum(e) != rs.num_positive:
            return False
    return True


def _check_coxeter():
    data = {
        "A4": (5, 5), "B3": (6, 5), "C3": (6, 4), "D5": (8, 8),
        "G2": (6, 4), "F4": (12, 9), "E6": (12, 12), "E7": (18, 18),
        "E8": (30, 30),
    }
    return all(rootsys.build(t).coxeter_numbers() == hv for t, hv in data.items())


def _check_minuscule():
    for t in ["A4", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"]:
        rs = rootsys.build(t)
        from . import linalg

        if len(rs.minuscule_weights()) != linalg.det(rs.cartan):
            return False
    rs = rootsys.build("B4")
    dims = sorted(chars.dimension(rs, w) for w in rs.minuscule_weights())
    if dims != [1, 16]:
        return False
    rs = rootsys.build("D5")
    dims = sorted(chars.dimension(rs, w) for w in rs.minuscule_weights())
    return dims == [1, 10, 16, 16]


def _check_pq():
    cases = {
        "A3": [4], "B4": [2], "C4": [2], "D5": [4], "D6": [2, 2],
        "E6": [3], "E7": [2], "E8": [], "F4": [], "G2": [],
    }
    return all(
        rootsys.build(t).weight_lattice_quotient() == q for t, q in cases.items()
    )


def _check_characters():
    rs = rootsys.build("A1")
    if chars.tensor_decompose(rs, (2,), (3,)) != {(1,): 1, (3,): 1, (5,): 1}:
        return False
    for t, lam in [("A2", (1, 1)), ("B2", (1, 1)), ("G2", (1, 0))]:
        rs = rootsys.build(t)
        chi = chars.character(rs, lam)
        if sum(chi.values()) != chars.dimension(rs, lam):
            return False
        if not _denominator_identity(rs, lam):
            return False
        q = chars.q_dimension(rs, lam)
        if q != q[::-1] or sum(q) != chars.dimension(rs, lam):
            return False
    rs = rootsys.build("B3")
    return chars.tensor_minuscule(rs, (0, 0, 1), (0, 0, 1)) == chars.tensor_decompose(
        rs, (0, 0, 1), (0, 0, 1)
    )


def _denominator_identity(rs, lam):
    """prod (1 - e^-alpha) * chi = sum_w sign(w) e^{w(lam+rho)-(lam+rho)} shifted."""
    chi = chars.character(rs, lam)
    # multiply chi by prod over positive roots of (1 - e^{-alpha})
    prod = {(0,) * rs.rank: 1}
    for n in rs.positive_roots:
        alpha = rs.root_to_weight(n)
        nxt = dict(prod)
        for w, c in prod.items():
            w2 = tuple(a - b for a, b in zip(w, alpha))
            nxt[w2] = nxt.get(w2, 0) - c
        prod = {w: c for w, c in nxt.items() if c}
    lhs = {}
    for w1, c1 in prod.items():
        for w2, c2 in chi.items():
            w = tuple(a + b for a, b in zip(w1, w2))
            v = lhs.get(w, 0) + c1 * c2
            if v:
                lhs[w] = v
            else:
                lhs.pop(w, None)
    rhs = {}
    lam_rho = tuple(x + 1 for x in lam)
    lam_rho_root = rs.weight_to_root(lam_rho)
    rho_root = rs.weight_to_root(rs.rho)
    for m, sgn in chars._signed_elements(rs):
        img_root = chars._apply_root_matrix(m, lam_rho_root)
        delta = tuple(a - b for a, b in zip(img_root, rho_root))
        w = rs.root_to_weight(delta)
        assert all(Fraction(x).denominator == 1 for x in w)
        w = tuple(int(x) for x in w)
        v = rhs.get(w, 0) + sgn
        if v:
            rhs[w] = v
        else:
            rhs.pop(w, None)
    return lhs == rhs


def _check_kostant():
    rs = rootsys.build("A2")
    for k1 in range(0, 13):
        for k2 in range(0, 13):
            if chars.kostant_p(rs, (k1, k2)) != min(k1, k2) + 1:
                return False
    return True


def _check_bch(rng):
    elt = freelie.bch(4)
    if elt.coords.get((0, 1)) != Fraction(1, 2):
        return False
    deg3 = {
        b: c for b, c in elt.coords.items() if len(freelie.bracket_word(b)) == 3
    }
    if deg3 != {(0, (0, 1)): Fraction(1, 12), ((0, 1), 1): Fraction(1, 12)}:
        return False
    for m in range(1, 6):
        part = freelie.bch(6).degree_part(m)
        ok, _ = freelie.is_primitive(part.expand())
        if not ok:
            return False
    return bch_matrix_oracle(6, rng)


def _check_witt():
    for n, upto in [(2, 10), (3, 6)]:
        dims = freelie.witt_dimensions(n, upto)
        for m in range(1, upto + 1):
            if len(freelie.lyndon_basis(n, m)) != dims[m - 1]:
                return False
    return (
        freelie.witt_dimensions(2, 3) == [2, 1, 2]
        and freelie.witt_dimensions(3, 3)[2] == 8
    )


def _check_predicates(rng, count=100):
    if not (
        liealg.upper_triangular(3).is_solvable()
        and not liealg.upper_triangular(3).is_nilpotent()
        and liealg.strictly_upper_triangular(4).is_nilpotent()
        and liealg.sl(3).is_semisimple()
        and liealg.so(6).is_semisimple()
        and liealg.sp(6).is_semisimple()
    ):
        return False
    for _ in range(count):
        g = random_algebra(rng)
        g.is_solvable()  # asserts the two solvability criteria agree
    return True


def _check_cohomology():
    if cohomology.ce_cohomology(liealg.sl(2)) != {0: 1, 1: 0, 2: 0, 3: 1}:
        return False
    if cohomology.invariant_forms_poincare(liealg.abelian(2)) != [1, 2, 1]:
        return False
    if cohomology.ce_cohomology(liealg.abelian(2)) != {0: 1, 1: 2, 2: 1}:
        return False
    inv = cohomology.invariant_forms_poincare(liealg.sl(3))
    if cohomology.exterior_generator_degrees(inv) != [3, 5]:
        return False
    inv = cohomology.invariant_forms_poincare(liealg.so(5))
    if cohomology.exterior_generator_degrees(inv) != [3, 7]:
        return False
    g = liealg.sl(2)
    for n in range(1, 7):
        module = sl2_module(g, n)
        betti = cohomology.ce_cohomology(g, module=module)
        if betti[1] != 0 or betti[2] != 0:
            return False
    return (
        cohomology.triple_product_invariant(liealg.sl(2)) == 1
        and cohomology.triple_product_invariant(liealg.so(5)) == 1
    )


def _check_g2_cohomology():
    g = liealg.from_file(str(_g2_path()))
    inv = cohomology.invariant_forms_poincare(g)
    if cohomology.exterior_generator_degrees(inv) != [3, 11]:
        return False
    betti = cohomology.ce_cohomology(g)
    poly = [betti[k] for k in range(15)]
    return poly == inv


def sl2_module(g, n):
    """The (n+1)-dimensional irreducible module over the sl(2) constructor."""
    size = n + 1
    h = [[Fraction(0)] * size for _ in range(size)]
    e = [[Fraction(0)] * size for _ in range(size)]
    f = [[Fraction(0)] * size for _ in range(size)]
    for m in range(size):
        h[m][m] = Fraction(n - 2 * m)
        if m + 1 < size:
            f[m + 1][m] = Fraction(1)
            e[m][m + 1] = Fraction((m + 1) * (n - m))
    return liealg.LieModule(g, [h, e, f])


def _check_concordance():
    cases = [
        (liealg.sl(3), [("A", 2)]),
        (liealg.sl(5), [("A", 4)]),
        (liealg.sp(4), [("B", 2)]),
        (liealg.sp(8), [("C", 4)]),
        (liealg.so(7), [("B", 3)]),
        (liealg.so(8), [("D", 4)]),
        (liealg.so(10), [("D", 5)]),
    ]
    for g, expected in cases:
        A, simple, roots = liealg.recovered_cartan_matrix(g)
        if rootsys.validate_cartan(A) != expected:
            return False
        coords = liealg.root_coordinates(simple, roots)
        abstract = rootsys.RootSystem(tuple(tuple(r) for r in A))
        if sorted(coords) != sorted(abstract.roots):
            return False
    return True


def _check_symfun():
    import math

    for size in range(1, 8):
        if (
            sum(symfun.symmetric_group_dimension(l) ** 2 for l in symfun.partitions(size))
            != math.factorial(size)
        ):
            return False
    if symfun.schur_dim_poly((2, 1)) != [Fraction(0), Fraction(-1, 3), Fraction(0), Fraction(1, 3)]:
        return False
    if symfun.pieri((3, 3, 2, 1), 1) != [
        (4, 3, 2, 1), (3, 3, 3, 1), (3, 3, 2, 2), (3, 3, 2, 1, 1)
    ]:
        return False
    if symfun.pieri((3, 1), 2) != [(4, 2), (4, 1, 1), (3, 2, 1)]:
        return False
    if not symfun.cauchy_check(2, 2, 4):
        return False
    for lam in symfun.partitions(5):
        for cyc in symfun.partitions(5):
            lhs = symfun.frobenius_character(symfun.conjugate(lam), cyc)
            sign = (-1) ** (5 - len(cyc))
            if lhs != sign * symfun.frobenius_character(lam, cyc):
                return False
    return True


def _check_betti():
    for m in range(0, 7):
        for n in range(0, 7):
            symfun.gaussian_binomial(m, n)  # asserts DP == ratio internally
    for n in range(2, 7):
        rs = rootsys.build(("A", n - 1))
        lgf = weyl.length_generating_function(rs)
        flag = symfun.flag_betti(n)
        if flag[::2] != lgf:
            return False
    return symfun.projective_space_betti(4)[::2] == [1, 1, 1, 1, 1]


def _check_realforms():
    counts = {("G", 2): 2, ("F", 4): 3, ("E", 6): 5, ("E", 7): 4, ("E", 8): 3}
    for (fam, rk), n in counts.items():
        if len(voganforms.enumerate_real_forms(fam, rk)) != n:
            return False
    vd = voganforms.diagram("F", 4, colors=[1])
    if voganforms.fixed_subalgebra_dims(vd)[0] != 36:
        return False
    for t in ["A3", "B4", "C3", "D4", "E6", "E7", "E8", "F4", "G2"]:
        rs = rootsys.build(t)
        fam, rk = rs.types()[0]
        forms = voganforms.enumerate_real_forms(fam, rk)
        if not any(f.dim_k == rs.num_positive for f in forms):
            return False
    for n in range(2, 11):
        forms = voganforms.enumerate_real_forms("A", n - 1)
        if sum(1 for f in forms if f.inner) != n // 2 + 1:
            return False
    return True


def run(seed=0, quick=False):
    rng = random.Random(seed)
    checks = [
        ("root counts", _check_roots),
        ("exponents", _check_exponents),
        ("coxeter numbers", _check_coxeter),
        ("minuscule weights", _check_minuscule),
        ("weight lattice P/Q", _check_pq),
        ("character suite", _check_characters),
        ("kostant partition", _check_kostant),
        ("bch series", lambda: _check_bch(rng)),
        ("witt dimensions", _check_witt),
        ("lie predicates", lambda: _check_predicates(rng, 25 if quick else 100)),
        ("cohomology", _check_cohomology),
        ("root concordance", _check_concordance),
        ("symmetric functions", _check_symfun),
        ("betti numbers", _check_betti),
        ("real forms", _check_realforms),
    ]
    if not quick:
        checks.append(("g2 cohomology (file)", _check_g2_cohomology))
    failures = 0
    for name, fn in checks:
        t0 = time.time()
        try:
            ok = fn()
        except Exception as exc:  # noqa: BLE001 - report, keep going
            ok = False
            print(f"FAIL {name}: {exc}")
        dt = time.time() - t0
        if ok:
            print(f"PASS {name} ({dt:.1f}s)")
        else:
            failures += 1
            print(f"FAIL {name} ({dt:.1f}s)")
    print(f"{len(checks) - failures}/{len(checks)} checks passed (seed={seed})")
    return 1 if failures else 0
