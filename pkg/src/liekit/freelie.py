"""Free Lie algebras inside the truncated free associative algebra.

Series live in the tensor algebra on an alphabet of n letters, truncated at
a total degree; coefficients are exact rationals. Lie elements are carried
in the Lyndon basis, bracketed by standard factorization. All identities
(exp/log inversion, primitivity, the BCH expansion) hold exactly up to the
truncation order.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BadConstantTerm, NotPrimitive, TooDeep

DEFAULT_BCH_CAP = 10


@dataclass
class FreeSeries:
    """Truncated series in the free associative algebra.

    terms maps words (tuples of letters 0..n-1, length <= order) to nonzero
    Fractions.
    """

    n: int
    order: int
    terms: dict = field(default_factory=dict)

    def copy(self):
        return FreeSeries(self.n, self.order, dict(self.terms))

    def coefficient(self, word):
        return self.terms.get(tuple(word), Fraction(0))

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def degree_part(self, m):
        return FreeSeries(
            self.n, self.order, {w: c for w, c in self.terms.items() if len(w) == m}
        )

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, Fraction(0)) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return FreeSeries(self.n, min(self.order, other.order), out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return FreeSeries(self.n, self.order, {})
        return FreeSeries(self.n, self.order, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        order = min(self.order, other.order)
        out = {}
        for w1, c1 in self.terms.items():
            room = order - len(w1)
            if room < 0:
                continue
            for w2, c2 in other.terms.items():
                if len(w2) <= room:
                    w = w1 + w2
                    v = out.get(w, Fraction(0)) + c1 * c2
                    if v:
                        out[w] = v
                    else:
                        out.pop(w, None)
        return FreeSeries(self.n, order, out)

    def __eq__(self, other):
        return (
            isinstance(other, FreeSeries)
            and self.n == other.n
            and self.terms == other.terms
        )


def generator(n, order, letter):
    return FreeSeries(n, order, {(letter,): Fraction(1)})


def unit(n, order):
    return FreeSeries(n, order, {(): Fraction(1)})


def exp(s):
    """exp of a series with zero constant term."""
    if s.constant_term():
        raise BadConstantTerm("exp needs zero constant term")
    out = unit(s.n, s.order)
    power = unit(s.n, s.order)
    fact = 1
    for k in range(1, s.order + 1):
        power = power * s
        if power.is_zero():
            break
        fact *= k
        out = out + power.scale(Fraction(1, fact))
    return out


def log(s):
    """log of a series with constant term 1: -sum (1-s)^k / k."""
    if s.constant_term() != 1:
        raise BadConstantTerm("log needs constant term 1")
    u = unit(s.n, s.order) - s  # 1 - s, no constant term
    out = FreeSeries(s.n, s.order, {})
    power = unit(s.n, s.order)
    for k in range(1, s.order + 1):
        power = power * u
        if power.is_zero():
            break
        out = out - power.scale(Fraction(1, k))
    return out


# ---------------------------------------------------------------------------
# Lyndon words and brackets


def lyndon_words(n, max_len):
    """All Lyndon words over 0..n-1 of length <= max_len (Duval's method)."""
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        out.append(tuple(w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[-m])
        while w and w[-1] == n - 1:
            w.pop()
    return sorted(out, key=lambda t: (len(t), t))


def standard_factorization(word):
    """w = uv with v the longest proper Lyndon suffix."""
    assert len(word) >= 2
    for i in range(1, len(word)):
        v = word[i:]
        if all(v < v[j:] for j in range(1, len(v))):
            return word[:i], v
    raise AssertionError("no Lyndon suffix found")


def bracketing(word):
    """Nested-tuple bracket of a Lyndon word by standard factorization."""
    if len(word) == 1:
        return word[0]
    u, v = standard_factorization(word)
    return (bracketing(u), bracketing(v))


def bracket_word(bracket):
    """The Lyndon word a bracket tree flattens to."""
    if isinstance(bracket, int):
        return (bracket,)
    return bracket_word(bracket[0]) + bracket_word(bracket[1])


def lyndon_basis(n, degree):
    """Bracketed Lyndon words of one homogeneous degree."""
    return [bracketing(w) for w in lyndon_words(n, degree) if len(w) == degree]


def expand_bracket(bracket, n, order):
    """Expansion of a bracket tree in the free associative algebra."""
    if isinstance(bracket, int):
        return generator(n, order, bracket)
    a = expand_bracket(bracket[0], n, order)
    b = expand_bracket(bracket[1], n, order)
    return a * b - b * a


def witt_dimensions(n, upto):
    """d_1..d_upto solved degree by degree from prod (1-q^m)^{d_m} = 1-nq."""
    poly = [1] + [0] * upto  # running product, coefficients of q^k
    dims = []
    for m in range(1, upto + 1):
        target = -n if m == 1 else 0
        d = poly[m] - target
        dims.append(d)
        if d:
            # multiply running product by (1 - q^m)^d
            for _ in range(d):
                for k in range(upto, m - 1, -1):
                    poly[k] -= poly[k - m]
    return dims


# ---------------------------------------------------------------------------
# primitivity via the coproduct


def coproduct(s):
    """Unshuffle coproduct into the two-sided tensor, as {(w1, w2): coeff}."""
    out = {}
    for w, c in s.terms.items():
        k = len(w)
        for mask in range(1 << k):
            left = tuple(w[i] for i in range(k) if mask >> i & 1)
            right = tuple(w[i] for i in range(k) if not mask >> i & 1)
            key = (left, right)
            v = out.get(key, Fraction(0)) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def is_primitive(s):
    """(flag, witness): witness is the first offending tensor term if any."""
    delta = coproduct(s)
    for w, c in s.terms.items():
        for key in ((w, ()), ((), w)):
            v = delta.get(key, Fraction(0)) - c
            if v:
                delta[key] = v
            else:
                delta.pop(key, None)
    if not delta:
        return True, None
    witness = min(delta, key=lambda k: (len(k[0]) + len(k[1]), k))
    return False, (witness, delta[witness])


# ---------------------------------------------------------------------------
# Lie decomposition and the BCH series


@dataclass
class LieElement:
    """Exact-rational coordinates over bracketed Lyndon words."""

    n: int
    order: int
    coords: dict  # bracket tree -> Fraction

    def degree_part(self, m):
        return LieElement(
            self.n,
            self.order,
            {b: c for b, c in self.coords.items() if len(bracket_word(b)) == m},
        )

    def expand(self):
        out = FreeSeries(self.n, self.order, {})
        for b, c in self.coords.items():
            out = out + expand_bracket(b, self.n, self.order).scale(c)
        return out


def lie_decompose(s):
    """Coordinates of a primitive series over the Lyndon bracket basis.

    Triangular rewriting: the expansion of a bracketed Lyndon word equals
    the word itself plus lexicographically larger words of the same degree,
    so eliminating Lyndon words in increasing order terminates with zero
    exactly when s is a Lie element.
    """
    ok, witness = is_primitive(s)
    if not ok:
        raise NotPrimitive(witness)
    rest = s.copy()
    coords = {}
    for degree in range(1, s.order + 1):
        for word in lyndon_words(s.n, degree):
            if len(word) != degree:
                continue
            c = rest.coefficient(word)
            if c:
                b = bracketing(word)
                coords[b] = c
                rest = rest - expand_bracket(b, s.n, s.order).scale(c)
    if not rest.is_zero():
        raise NotPrimitive(min(rest.terms), "series is not a Lie element")
    return LieElement(s.n, s.order, coords)


def bch(order, cap=DEFAULT_BCH_CAP):
    """The Baker-Campbell-Hausdorff Lie series log(exp x exp y) to a degree.

    Returns a LieElement over the two-letter alphabet (x = 0, y = 1).
    """
    if order > cap:
        raise TooDeep(f"BCH order {order} exceeds cap {cap}")
    x = generator(2, order, 0)
    y = generator(2, order, 1)
    series = log(exp(x) * exp(y))
    return lie_decompose(series)


def bch_degree_parts(order, cap=DEFAULT_BCH_CAP):
    """[(m, LieElement of degree m)] for the BCH series; the degree-m part
    equals mu_m / m! in the classical normalization."""
    full = bch(order, cap)
    return [(m, full.degree_part(m)) for m in range(1, order + 1)]
