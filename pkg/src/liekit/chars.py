"""Highest-weight representation data via the Weyl and Kostant formulas.

Characters are sparse dicts mapping weight tuples (fundamental coordinates)
to positive integer multiplicities. The character engine is the Kostant
multiplicity formula evaluated on the dominant cone followed by Weyl-orbit
expansion; Freudenthal recursion is deliberately not used.
"""

from fractions import Fraction

from . import weyl
from .errors import NotDominant, NotMinuscule, TooLarge

DEFAULT_DIM_CAP = 10**6
DEFAULT_PRODUCT_CAP = 10**8


def _require_dominant_integral(rs, lam):
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise NotDominant("weight length does not match rank")
    for c in lam:
        if Fraction(c).denominator != 1 or c < 0:
            raise NotDominant(f"{lam} is not dominant integral")
    return tuple(int(c) for c in lam)


# ---------------------------------------------------------------------------
# Kostant partition function


def kostant_p(rs, beta):
    """Number of multisets of positive roots summing to beta (root coords)."""
    beta = tuple(beta)
    if not all(isinstance(b, int) for b in beta):
        if any(Fraction(b).denominator != 1 for b in beta):
            return 0
        beta = tuple(int(b) for b in beta)
    memo = rs._cached("kostant_memo", dict)
    positives = rs.positive_roots

    def rec(b, k):
        if all(v == 0 for v in b):
            return 1
        if k < 0 or any(v < 0 for v in b):
            return 0
        key = (b, k)
        val = memo.get(key)
        if val is None:
            root = positives[k]
            val = rec(b, k - 1) + rec(tuple(x - y for x, y in zip(b, root)), k)
            memo[key] = val
        return val

    return rec(beta, len(positives) - 1)


# ---------------------------------------------------------------------------
# multiplicities and characters


def _signed_elements(rs):
    """[(matrix on root coords, sign)] for the whole Weyl group."""

    def compute():
        return [
            (m, -1 if length % 2 else 1) for m, length in weyl.elements(rs).items()
        ]

    return rs._cached("signed_elements", compute)


def _apply_root_matrix(m, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _scaled_root_coords(rs, fund):
    """(integer vector, denominator) for the root coordinates of a weight."""
    coords = rs.weight_to_root(fund)
    den = 1
    for x in coords:
        f = Fraction(x)
        den = den * f.denominator // _gcd_int(den, f.denominator)
    return tuple(int(Fraction(x) * den) for x in coords), den


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _signed_images(rs, lam_rho):
    """Integer-scaled Weyl images of lam + rho in root coordinates."""
    X, den = _scaled_root_coords(rs, lam_rho)
    images = [
        (_apply_root_matrix(m, X), sgn) for m, sgn in _signed_elements(rs)
    ]
    return images, den


def weight_multiplicity(rs, lam, gamma):
    """dim L_lam[gamma] by the Kostant multiplicity formula."""
    lam = _require_dominant_integral(rs, lam)
    gamma = tuple(gamma)
    diff = rs.weight_to_root(tuple(l - g for l, g in zip(lam, gamma)))
    if any(Fraction(x).denominator != 1 or x < 0 for x in diff):
        return 0
    images, den = _signed_images(rs, tuple(l + 1 for l in lam))
    base, den2 = _scaled_root_coords(rs, tuple(g + 1 for g in gamma))
    assert den == den2
    total = 0
    for img, sgn in images:
        # w(lam+rho) - (gamma+rho) lies in the root lattice here
        arg = tuple((a - b) // den for a, b in zip(img, base))
        assert all((a - b) % den == 0 for a, b in zip(img, base))
        total += sgn * kostant_p(rs, arg)
    return total


def _dominant_support(rs, lam):
    """All dominant mu with lam - mu in Q_+ (including lam)."""
    c = rs.rho_check_coords
    # ht(lam - mu) = <lam - mu, rho_check> <= <lam, rho_check>, and heights
    # are integers, so the fractional part of the budget can be dropped
    budget = sum(Fraction(l) * ci for l, ci in zip(lam, c))
    budget = int(budget) if budget >= 0 else 0
    r = rs.rank
    out = []
    b = [0] * r

    def dfs(i, left):
        if i == r:
            mu = tuple(
                lam[j] - sum(rs.cartan[j][k] * b[k] for k in range(r))
                for j in range(r)
            )
            if all(x >= 0 for x in mu):
                out.append((mu, tuple(b)))
            return
        for v in range(left + 1):
            b[i] = v
            dfs(i + 1, left - v)
        b[i] = 0

    dfs(0, budget)
    return out


def character(rs, lam, cap=DEFAULT_DIM_CAP):
    """Formal character of L_lam as {weight: multiplicity}."""
    lam = _require_dominant_integral(rs, lam)
    cache = rs._cached("character_cache", dict)
    if lam in cache:
        return dict(cache[lam])
    if dimension(rs, lam) > cap:
        raise TooLarge(f"dim L_{lam} exceeds cap {cap}")
    images, den = _signed_images(rs, tuple(l + 1 for l in lam))
    chi = {}
    for mu, _ in _dominant_support(rs, lam):
        base, _ = _scaled_root_coords(rs, tuple(g + 1 for g in mu))
        mult = 0
        for img, sgn in images:
            arg = tuple((a - b) // den for a, b in zip(img, base))
            mult += sgn * kostant_p(rs, arg)
        if mult:
            for w in weyl.orbit(rs, mu):
                chi[tuple(w)] = mult
    cache[lam] = chi
    return dict(chi)


def dimension(rs, lam):
    """Weyl dimension formula; exact positive integer."""
    lam = _require_dominant_integral(rs, lam)
    num = Fraction(1)
    lam_rho = tuple(l + 1 for l in lam)
    rho = rs.rho
    for n in rs.positive_roots:
        alpha = rs.root_to_weight(n)
        num *= Fraction(rs.pair(alpha, lam_rho), rs.pair(alpha, rho))
    assert num.denominator == 1
    return int(num)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divexact(num, den):
    """Exact division of integer polynomials (lists, low degree first)."""
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    d = list(den)
    while d and d[-1] == 0:
        d.pop()
    if not num:
        return [0]
    q = [0] * (len(num) - len(d) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(d) - 1]
        assert c % d[-1] == 0
        q[i] = c // d[-1]
        if q[i]:
            for j, y in enumerate(d):
                num[i + j] -= q[i] * y
    assert all(v == 0 for v in num)
    return q


def q_dimension(rs, lam):
    """Principal specialization: coefficients of the q-dimension polynomial.

    Shift is cleared so the constant term is 1; evaluating at q = 1 gives the
    dimension, and the coefficient list is palindromic.
    """
    lam = _require_dominant_integral(rs, lam)
    lam_rho = tuple(l + 1 for l in lam)
    rho = rs.rho
    num = [1]
    den = [1]
    for n in rs.positive_roots:
        # canonical coroot pairings: the grading by twice the dual rho,
        # independent of the symmetrizer scale
        cor = rs.coroot(n)
        a = rs.pair_weight_coroot(lam_rho, cor)
        b = rs.pair_weight_coroot(rho, cor)
        # (q^a - q^-a)/(q^b - q^-b) contributes (q^{2a}-1)/(q^{2b}-1)
        # and a power shift which cancels in total against the clearing.
        a, b = int(2 * a), int(2 * b)
        fa = [-1] + [0] * (a - 1) + [1]
        fb = [-1] + [0] * (b - 1) + [1]
        num = _poly_mul(num, fa)
        den = _poly_mul(den, fb)
    q = _poly_divexact(num, den)
    while q and q[-1] == 0:
        q.pop()
    return q


def tensor_decompose(rs, lam, mu, cap=DEFAULT_PRODUCT_CAP):
    """Decompose L_lam (x) L_mu by character multiplication and peeling.

    Returns {dominant weight: multiplicity}.
    """
    lam = _require_dominant_integral(rs, lam)
    mu = _require_dominant_integral(rs, mu)
    if dimension(rs, lam) * dimension(rs, mu) > cap:
        raise TooLarge("product dimension exceeds cap")
    chi1 = character(rs, lam)
    chi2 = character(rs, mu)
    prod = {}
    for w1, m1 in chi1.items():
        for w2, m2 in chi2.items():
            w = tuple(a + b for a, b in zip(w1, w2))
            prod[w] = prod.get(w, 0) + m1 * m2
    top = tuple(a + b for a, b in zip(lam, mu))
    c = rs.rho_check_coords

    def peel_key(nu):
        gap = sum((Fraction(t) - Fraction(n)) * ci for t, n, ci in zip(top, nu, c))
        return (gap, tuple(-x for x in nu))

    out = {}
    while prod:
        dominant = [w for w in prod if all(x >= 0 for x in w)]
        assert dominant, "peel left non-dominant residue"
        nu = min(dominant, key=peel_key)
        mult = prod[nu]
        assert mult > 0
        out[nu] = mult
        for w, m in character(rs, nu).items():
            newv = prod.get(w, 0) - mult * m
            if newv:
                prod[w] = newv
            else:
                prod.pop(w, None)
    return out


def tensor_minuscule(rs, omega, lam):
    """Minuscule tensor rule: L_omega (x) L_lam = sum over the orbit of
    omega of L_{lam+gamma}, dropping non-dominant terms (rho-shift
    cancellation)."""
    omega = _require_dominant_integral(rs, omega)
    lam = _require_dominant_integral(rs, lam)
    if list(omega) not in [list(w) for w in rs.minuscule_weights()]:
        raise NotMinuscule(f"{omega} is not minuscule")
    out = {}
    for gamma in weyl.orbit(rs, omega):
        nu = tuple(l + g for l, g in zip(lam, gamma))
        # <nu + rho, alpha_i^vee> = 0 for some i iff nu is not dominant here,
        # since minuscule orbit weights have coordinates in {-1, 0, 1}
        if all(x >= 0 for x in nu):
            out[nu] = out.get(nu, 0) + 1
    return out


def dual_highest_weight(rs, lam):
    """Highest weight of the dual: -w0(lam), via the diagram automorphism."""
    lam = _require_dominant_integral(rs, lam)
    _, perm = weyl.longest_element(rs)
    out = [0] * rs.rank
    for i in range(rs.rank):
        out[perm[i] - 1] = lam[i]
    return tuple(out)


def frobenius_schur_type(rs, lam):
    """'complex', 'real' or 'quaternionic' for the irreducible L_lam."""
    lam = _require_dominant_integral(rs, lam)
    if dual_highest_weight(rs, lam) != lam:
        return "complex"
    two_rho_check = tuple(2 * c for c in rs.rho_check_coords)
    val = sum(Fraction(l) * c for l, c in zip(lam, two_rho_check))
    assert Fraction(val).denominator == 1
    return "real" if int(val) % 2 == 0 else "quaternionic"


def casimir_eigenvalue(rs, lam):
    """(lam, lam + 2 rho) in the package's fixed pairing normalization."""
    lam = _require_dominant_integral(rs, lam)
    shifted = tuple(l + 2 for l in lam)
    return rs.pair(lam, shifted)
