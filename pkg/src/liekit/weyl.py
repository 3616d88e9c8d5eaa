"""Weyl group elements as words in simple reflections.

Words use 1-based reflection indices externally (matching vertex labels);
a word (i1, i2, ..., ik) acts as s_{i1} s_{i2} ... s_{ik}, applied to a
weight from the right end first. Group elements are compared through their
action, never through word normal forms.
"""

from fractions import Fraction

from .errors import IndexOutOfRange, OrbitTooLarge

DEFAULT_ORBIT_CAP = 10**7


def act(rs, word, lam):
    """Apply a word in simple reflections to a weight (fundamental coords)."""
    v = tuple(lam)
    for i in reversed(word):
        if not 1 <= i <= rs.rank:
            raise IndexOutOfRange(f"reflection index {i} out of 1..{rs.rank}")
        v = rs.reflect_weight(i - 1, v)
    return v


def act_on_root(rs, word, n):
    v = tuple(n)
    for i in reversed(word):
        if not 1 <= i <= rs.rank:
            raise IndexOutOfRange(f"reflection index {i} out of 1..{rs.rank}")
        v = rs.reflect_root(i - 1, v)
    return v


def length(rs, word):
    """Number of positive roots sent negative by the word's group element."""
    count = 0
    for n in rs.positive_roots:
        img = act_on_root(rs, word, n)
        if all(c <= 0 for c in img):
            count += 1
    return count


def sign(rs, word):
    return -1 if length(rs, word) % 2 else 1


def to_dominant(rs, lam):
    """Greedy descent to the dominant chamber.

    Returns (dominant weight, word, sign) with act(word, lam) dominant.
    """
    v = tuple(Fraction(x) if not isinstance(x, int) else x for x in lam)
    letters = []
    while True:
        neg = next((i for i, c in enumerate(v) if c < 0), None)
        if neg is None:
            break
        v = rs.reflect_weight(neg, v)
        letters.insert(0, neg + 1)
    return v, tuple(letters), (-1) ** len(letters)


def longest_element(rs):
    """The longest element w0, together with the diagram automorphism -w0.

    Returns (word, permutation) where permutation[i-1] = j means
    -w0(alpha_i) = alpha_j.
    """
    minus_rho = tuple(-1 for _ in range(rs.rank))
    _, word, _ = to_dominant(rs, minus_rho)
    w0 = tuple(reversed(word))  # inverse word: w0(rho) = -rho
    perm = []
    for i in range(rs.rank):
        e_i = tuple(int(i == j) for j in range(rs.rank))
        img = act_on_root(rs, w0, e_i)
        neg = tuple(-c for c in img)
        assert sum(neg) == 1 and all(c >= 0 for c in neg)
        perm.append(neg.index(1) + 1)
    return w0, tuple(perm)


def orbit(rs, lam, cap=DEFAULT_ORBIT_CAP):
    """The Weyl orbit of a weight, sorted lexicographically."""
    start = tuple(Fraction(x) if not isinstance(x, int) else x for x in lam)
    seen = {start}
    queue = [start]
    while queue:
        v = queue.pop()
        for i in range(rs.rank):
            w = rs.reflect_weight(i, v)
            if w not in seen:
                if len(seen) >= cap:
                    raise OrbitTooLarge(f"orbit exceeds cap {cap}")
                seen.add(w)
                queue.append(w)
    return sorted(seen)


def _root_action_matrix(rs, i):
    r = rs.rank
    m = [[int(j == k) for k in range(r)] for j in range(r)]
    m[i] = [m[i][k] - rs.cartan[i][k] for k in range(r)]
    return tuple(tuple(row) for row in m)


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def elements(rs, cap=DEFAULT_ORBIT_CAP):
    """All group elements as matrices on simple-root coordinates, mapped to
    their length (breadth-first word depth, which is the minimal word
    length and hence the Coxeter length)."""
    r = rs.rank
    ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    gens = [_root_action_matrix(rs, i) for i in range(r)]
    out = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            depth = out[m] + 1
            for g in gens:
                p = _mat_mul(g, m)
                if p not in out:
                    if len(out) >= cap:
                        raise OrbitTooLarge(f"Weyl group exceeds cap {cap}")
                    out[p] = depth
                    nxt.append(p)
        frontier = nxt
    return out


def matrix_length(rs, m):
    """Length of a group element given by its root-coordinate matrix."""
    count = 0
    for n in rs.positive_roots:
        img = tuple(
            sum(m[i][j] * n[j] for j in range(rs.rank)) for i in range(rs.rank)
        )
        if all(c <= 0 for c in img):
            count += 1
    return count


def group_order(rs):
    """|W| via the product of (exponent + 1) over irreducible components."""
    total = 1
    for comp in rs.components:
        from .rootsys import RootSystem

        sub = RootSystem(
            tuple(tuple(rs.cartan[i][j] for j in comp) for i in comp)
        )
        for m in sub.exponents():
            total *= m + 1
    return total


def length_generating_function(rs, cap=DEFAULT_ORBIT_CAP):
    """Coefficients [c_0, c_1, ...] of sum_w q^length(w), by enumeration."""
    order = group_order(rs)
    if order > cap:
        raise OrbitTooLarge(f"|W| = {order} exceeds cap {cap}")
    coeffs = [0] * (rs.num_positive + 1)
    for length_of_w in elements(rs, cap=cap).values():
        coeffs[length_of_w] += 1
    return coeffs
