"""Real forms of simple complex Lie algebras via Vogan diagrams.

A diagram is a Dynkin type, an involutive diagram automorphism, and a
black/white coloring of the involution-fixed vertices. The flip move at a
black vertex j toggles the color of every fixed vertex i with A[j][i] odd
(the index order matters for F4: a black short vertex does not toggle its
long neighbor across the double edge).

Inner-class dimensions are computed from the sign of theta on each root
space, (-1)^(sum of black coordinates); outer-class dimensions come from
tables transcribed from the classical and exceptional case analyses, since
extending the sign rule to non-simple fixed roots requires structure
constant conventions that are not pinned down here.
"""

from dataclasses import dataclass
from itertools import permutations

from . import rootsys
from .errors import (
    BadColoring,
    BadInvolution,
    NotBlack,
    OuterNotTabulated,
    Unclassified,
    UnsupportedType,
)


@dataclass(frozen=True)
class VoganDiagram:
    family: str
    rank: int
    involution: tuple  # 1-based permutation of vertices
    colors: frozenset  # black vertices, subset of the fixed vertices

    def fixed_vertices(self):
        return tuple(
            i for i in range(1, self.rank + 1) if self.involution[i - 1] == i
        )


@dataclass(frozen=True)
class RealFormDescriptor:
    name: str
    family: str
    rank: int
    inner: bool
    dim_k: int
    dim_p: int
    signature: tuple  # (dim p, dim k)
    rank_k: int | None
    k_description: str
    representative: tuple  # canonical black vertices


def _cartan(family, rank):
    return rootsys.standard_cartan(family, rank)


def diagram(family, rank, colors=(), involution=None):
    if involution is None:
        involution = tuple(range(1, rank + 1))
    vd = VoganDiagram(
        family.upper(), rank, tuple(involution), frozenset(int(c) for c in colors)
    )
    return validate(vd)


def validate(vd):
    A = _cartan(vd.family, vd.rank)
    r = vd.rank
    sigma = vd.involution
    if sorted(sigma) != list(range(1, r + 1)):
        raise BadInvolution("involution is not a permutation of the vertices")
    for i in range(r):
        if sigma[sigma[i] - 1] != i + 1:
            raise BadInvolution("involution is not of order <= 2")
        for j in range(r):
            if A[sigma[i] - 1][sigma[j] - 1] != A[i][j]:
                raise BadInvolution("involution does not preserve the Cartan matrix")
    fixed = set(vd.fixed_vertices())
    for c in vd.colors:
        if c not in fixed:
            raise BadColoring(f"vertex {c} is colored but not involution-fixed")
    return vd


def flip(vd, j):
    """Flip move at the black vertex j."""
    if j not in vd.colors:
        raise NotBlack(f"vertex {j} is not black")
    A = _cartan(vd.family, vd.rank)
    fixed = set(vd.fixed_vertices())
    colors = set(vd.colors)
    for i in fixed:
        if i != j and A[j - 1][i - 1] % 2 != 0:
            colors.symmetric_difference_update({i})
    return VoganDiagram(vd.family, vd.rank, vd.involution, frozenset(colors))


def flip_orbit(vd):
    seen = {vd.colors}
    queue = [vd]
    out = [vd]
    while queue:
        cur = queue.pop()
        for j in sorted(cur.colors):
            nxt = flip(cur, j)
            if nxt.colors not in seen:
                seen.add(nxt.colors)
                queue.append(nxt)
                out.append(nxt)
    return out


def canonical_form(vd):
    """(minimal flip-equivalent diagram, orbit size)."""
    vd = validate(vd)
    orbit = flip_orbit(vd)
    best = min(orbit, key=lambda d: sorted(d.colors))
    return best, len(orbit)


def diagram_automorphisms(family, rank):
    A = _cartan(family, rank)
    out = []
    for perm in permutations(range(rank)):
        if all(
            A[perm[i]][perm[j]] == A[i][j] for i in range(rank) for j in range(rank)
        ):
            out.append(tuple(p + 1 for p in perm))
    return out


def involution_classes(family, rank):
    """Involutive diagram automorphisms up to conjugation in Aut(diagram)."""
    autos = diagram_automorphisms(family, rank)
    invs = [
        s
        for s in autos
        if all(s[s[i] - 1] == i + 1 for i in range(rank))
    ]

    def compose(a, b):
        return tuple(a[b[i] - 1] for i in range(rank))

    def invert(a):
        out = [0] * rank
        for i in range(rank):
            out[a[i] - 1] = i + 1
        return tuple(out)

    classes = []
    seen = set()
    for s in invs:
        if s in seen:
            continue
        orbit = {compose(g, compose(s, invert(g))) for g in autos}
        seen.update(orbit)
        classes.append(min(orbit))
    return sorted(classes)


# ---------------------------------------------------------------------------
# dimensions


def _inner_dims(family, rank, colors):
    rs = rootsys.build((family, rank))
    even = 0
    for n in rs.positive_roots:
        parity = sum(n[i - 1] for i in colors) % 2
        if parity == 0:
            even += 1
    dim_k = rank + 2 * even
    dim_p = 2 * (len(rs.positive_roots) - even)
    return dim_k, dim_p


def _k_semisimple_rank_and_center(family, rank, colors):
    from . import linalg

    rs = rootsys.build((family, rank))
    kroots = [
        n
        for n in rs.positive_roots
        if sum(n[i - 1] for i in colors) % 2 == 0
    ]
    ss_rank = linalg.rank([list(n) for n in kroots]) if kroots else 0
    return ss_rank, rank - ss_rank


def fixed_subalgebra_dims(vd):
    """(dim k, dim p, rank of k) - rank only for the inner class."""
    vd = validate(vd)
    if vd.involution == tuple(range(1, vd.rank + 1)):
        dim_k, dim_p = _inner_dims(vd.family, vd.rank, vd.colors)
        return dim_k, dim_p, vd.rank
    desc = _classify_outer(vd)
    return desc.dim_k, desc.dim_p, desc.rank_k


# ---------------------------------------------------------------------------
# classification


def _named_inner_classical(family, n, dim_k, center):
    """Name of the inner-class real form from (dim k, center of k)."""
    if family == "A":
        size = n + 1  # su(p, q), p + q = size
        for q in range(size // 2 + 1):
            p = size - q
            if p * p + q * q - 1 == dim_k:
                return f"su({p},{q})" if q else f"su({p})", f"s(u({p})+u({q}))"
    elif family == "B":
        for q in range(n + 1):
            p = n - q
            if p * (2 * p + 1) + q * (2 * q - 1) == dim_k:
                a, b = sorted((2 * p + 1, 2 * q), reverse=True)
                name = f"so({a},{b})" if b else f"so({a})"
                return name, f"so({2 * p + 1})+so({2 * q})"
    elif family == "C":
        if dim_k == n * n and center == 1:
            return f"sp({2 * n},R)", f"gl({n})"
        for q in range(n // 2 + 1):
            p = n - q
            if p * (2 * p + 1) + q * (2 * q + 1) == dim_k:
                return (f"sp({p},{q})" if q else f"sp({p})"), f"sp({2 * p})+sp({2 * q})"
    elif family == "D":
        for q in range(n // 2 + 1):
            p = n - q
            pred_center = (1 if p == 1 else 0) + (1 if q == 1 else 0)
            if p * (2 * p - 1) + q * (2 * q - 1) == dim_k and pred_center == center:
                name = f"so({2 * p},{2 * q})" if q else f"so({2 * p})"
                return name, f"so({2 * p})+so({2 * q})"
        if dim_k == n * n and center == 1:
            return f"so*({2 * n})", f"gl({n})"
    raise Unclassified(f"no classical inner form with dim k = {dim_k}")


_EXCEPTIONAL_INNER = {
    # (family, rank): {dim_k: (label, k description)}
    ("G", 2): {14: ("G2 compact", "G2"), 6: ("G2 split", "sl(2)+sl(2)")},
    ("F", 4): {
        52: ("F4 compact", "F4"),
        36: ("F4^1", "so(9)"),
        24: ("F4 split", "sp(6)+sl(2)"),
    },
    ("E", 6): {
        78: ("E6 compact", "E6"),
        46: ("E6^2", "so(10)+so(2)"),
        38: ("E6^3", "sl(6)+sl(2)"),
    },
    ("E", 7): {
        133: ("E7 compact", "E7"),
        79: ("E7^1", "E6+so(2)"),
        69: ("E7^2", "so(12)+sl(2)"),
        63: ("E7 split", "sl(8)"),
    },
    ("E", 8): {
        248: ("E8 compact", "E8"),
        136: ("E8^1", "E7+sl(2)"),
        120: ("E8 split", "so(16)"),
    },
}


def _classify_inner(vd):
    family, n = vd.family, vd.rank
    dim_k, dim_p = _inner_dims(family, n, vd.colors)
    rep, _ = canonical_form(vd)
    if family in "ABCD":
        _, center = _k_semisimple_rank_and_center(family, n, vd.colors)
        name, kdesc = _named_inner_classical(family, n, dim_k, center)
    else:
        table = _EXCEPTIONAL_INNER[(family, n)]
        if dim_k not in table:
            raise Unclassified(f"unexpected inner dim k = {dim_k} for {family}{n}")
        name, kdesc = table[dim_k]
    return RealFormDescriptor(
        name,
        family,
        n,
        True,
        dim_k,
        dim_p,
        (dim_p, dim_k),
        n,
        kdesc,
        tuple(sorted(rep.colors)),
    )


def _dims_from_k(dim_g, dim_k):
    return dim_k, dim_g - dim_k


def _classify_outer(vd):
    family, n = vd.family, vd.rank
    rep, _ = canonical_form(vd)
    rep_colors = tuple(sorted(rep.colors))
    rs = rootsys.build((family, n))
    dim_g = len(rs.roots) + n
    if family == "A":
        size = n + 1
        if size % 2 == 0 and rep_colors:
            # black middle vertex: the split form
            dim_k = size * (size - 1) // 2
            name, kdesc, rank_k = f"sl({size},R)", f"so({size})", None
        elif size % 2 == 0:
            dim_k = size * (size + 1) // 2
            name, kdesc, rank_k = f"sl({size // 2},H)", f"sp({size})", None
        else:
            dim_k = size * (size - 1) // 2
            name, kdesc, rank_k = f"sl({size},R)", f"so({size})", None
        dim_k, dim_p = _dims_from_k(dim_g, dim_k)
        return RealFormDescriptor(
            name, family, n, False, dim_k, dim_p, (dim_p, dim_k), rank_k, kdesc, rep_colors
        )
    if family == "D":
        # so(2i+1, 2n-2i-1): all-white is i = 0; otherwise the orbit
        # contains a single-black diagram at chain position i
        if not rep_colors:
            i = 0
        else:
            singles = [
                sorted(d.colors)[0] for d in flip_orbit(rep) if len(d.colors) == 1
            ]
            if not singles:
                raise Unclassified("outer D orbit lacks a single-black diagram")
            i = min(singles)
        a, b = 2 * i + 1, 2 * n - 2 * i - 1
        p, q = max(a, b), min(a, b)
        dim_k = p * (p - 1) // 2 + q * (q - 1) // 2
        dim_k, dim_p = _dims_from_k(dim_g, dim_k)
        return RealFormDescriptor(
            f"so({p},{q})",
            family,
            n,
            False,
            dim_k,
            dim_p,
            (dim_p, dim_k),
            None,
            f"so({p})+so({q})",
            rep_colors,
        )
    if (family, n) == ("E", 6):
        if not rep_colors:
            dim_k = 52
            name, kdesc = "E6^1", "F4"
        else:
            dim_k = 36
            name, kdesc = "E6 split", "sp(8)"
        dim_k, dim_p = _dims_from_k(dim_g, dim_k)
        return RealFormDescriptor(
            name, family, n, False, dim_k, dim_p, (dim_p, dim_k), None, kdesc, rep_colors
        )
    raise OuterNotTabulated(f"no outer table for type {family}{n}")


def classify(vd):
    vd = validate(vd)
    if vd.involution == tuple(range(1, vd.rank + 1)):
        return _classify_inner(vd)
    return _classify_outer(vd)


def classify_classical(vd):
    if vd.family not in "ABCD":
        raise UnsupportedType("classify_classical expects types A-D")
    return classify(vd)


# ---------------------------------------------------------------------------
# enumeration


def _apply_auto(colors, auto):
    return frozenset(auto[c - 1] for c in colors)


def _classes(family, rank, involution, autos):
    """Equivalence classes of colorings under flips and diagram
    automorphisms commuting with the involution."""
    fixed = [
        i for i in range(1, rank + 1) if involution[i - 1] == i
    ]
    compatible = [
        a
        for a in autos
        if all(a[involution[i] - 1] == involution[a[i] - 1] for i in range(rank))
    ]
    seen = set()
    classes = []
    from itertools import combinations

    all_colorings = []
    for k in range(len(fixed) + 1):
        for combo in combinations(fixed, k):
            all_colorings.append(frozenset(combo))
    for colors in all_colorings:
        if colors in seen:
            continue
        stack = [colors]
        cls = set()
        while stack:
            cur = stack.pop()
            if cur in cls:
                continue
            cls.add(cur)
            vd = VoganDiagram(family, rank, involution, cur)
            for j in sorted(cur):
                stack.append(flip(vd, j).colors)
            for a in compatible:
                stack.append(_apply_auto(cur, a))
        seen.update(cls)
        classes.append(min(cls, key=sorted))
    return classes


def enumerate_real_forms(family, rank):
    """All real forms of the simple type, one descriptor per equivalence
    class of Vogan diagrams (flips plus diagram automorphisms)."""
    family = family.upper()
    rootsys.build((family, rank))._require_irreducible()
    autos = diagram_automorphisms(family, rank)
    out = []
    for sigma in involution_classes(family, rank):
        for colors in _classes(family, rank, sigma, autos):
            vd = VoganDiagram(family, rank, sigma, colors)
            out.append(classify(vd))
    # involution classes can yield coinciding forms only through the D4
    # triality identification so(2,6) = so*(8); descriptors carry distinct
    # representatives, so deduplicate by name
    dedup = {}
    for d in out:
        dedup.setdefault(d.name, d)
    return sorted(dedup.values(), key=lambda d: -d.dim_k)
