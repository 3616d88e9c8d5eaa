import random
from fractions import Fraction
from itertools import product

import pytest

from liekit import rootsys, weyl
from liekit.errors import IndexOutOfRange, OrbitTooLarge
from liekit.rootsys import build


def reflection_matrix(rs, i):
    """Matrix of s_i on fundamental coordinates, columns = images of e_j."""
    r = rs.rank
    cols = []
    for j in range(r):
        e_j = tuple(int(j == k) for k in range(r))
        cols.append(rs.reflect_weight(i, e_j))
    return [[cols[j][k] for j in range(r)] for k in range(r)]


def test_act_examples():
    rs = build("A2")
    rho = (1, 1)
    for i in (1, 2):
        expected = tuple(
            a - b for a, b in zip(rho, rs.root_to_weight(tuple(int(i - 1 == j) for j in range(2))))
        )
        assert weyl.act(rs, (i,), rho) == expected  # s_i rho = rho - alpha_i
    assert weyl.act(rs, (), (3, 4)) == (3, 4)
    # brute-force matrix product oracle for s1 s2 s1 acting on omega_1
    m1 = reflection_matrix(rs, 0)
    m2 = reflection_matrix(rs, 1)

    def matvec(m, v):
        return tuple(sum(m[i][j] * v[j] for j in range(2)) for i in range(2))

    expected = matvec(m1, matvec(m2, matvec(m1, (1, 0))))
    assert weyl.act(rs, (1, 2, 1), (1, 0)) == expected == (0, -1)  # = -omega_2


def test_act_involutive_isometry():
    rng = random.Random(3)
    for label in ["A2", "B2", "G2", "A3"]:
        rs = build(label)
        for _ in range(20):
            lam = tuple(rng.randint(-4, 4) for _ in range(rs.rank))
            mu = tuple(rng.randint(-4, 4) for _ in range(rs.rank))
            i = rng.randint(1, rs.rank)
            assert weyl.act(rs, (i, i), lam) == lam
            assert rs.pair(weyl.act(rs, (i,), lam), weyl.act(rs, (i,), mu)) == rs.pair(lam, mu)


def test_act_index_errors():
    rs = build("A2")
    with pytest.raises(IndexOutOfRange):
        weyl.act(rs, (3,), (1, 1))


def test_length():
    rs = build("A2")
    assert weyl.length(rs, (1,)) == 1
    assert weyl.length(rs, (1, 2)) == 2
    assert weyl.length(rs, ()) == 0
    for label in ["A2", "B2", "G2"]:
        rs = build(label)
        w0, _ = weyl.longest_element(rs)
        assert weyl.length(rs, w0) == rs.num_positive
        # l(w) = l(w^-1) on random words
        rng = random.Random(5)
        for _ in range(20):
            word = tuple(rng.randint(1, rs.rank) for _ in range(rng.randint(0, 6)))
            assert weyl.length(rs, word) == weyl.length(rs, tuple(reversed(word)))


def test_length_equals_min_word_length_bfs():
    # exhaustive: minimal word length reaching each element, rank <= 3
    for label in ["A2", "B2", "A3", "B3"]:
        rs = build(label)
        gens = list(range(1, rs.rank + 1))
        start = tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
        frontier = {start: ()}
        seen = {start: 0}
        current = [start]
        words = {start: ()}
        depth = 0
        while current:
            depth += 1
            nxt = []
            for m in current:
                for g in gens:
                    img = tuple(
                        tuple(rs.reflect_root(g - 1, row)) for row in m
                    )
                    # rows of m are images of simple roots; apply s_g after
                    if img not in seen:
                        seen[img] = depth
                        words[img] = (g,) + words[m]
                        nxt.append(img)
            current = nxt
        assert len(seen) == weyl.group_order(rs)
        for m, d in seen.items():
            assert weyl.length(rs, words[m]) == d
        # the production enumeration agrees with inversion counting
        for m, depth in weyl.elements(rs).items():
            assert depth == weyl.matrix_length(rs, m)


def test_longest_element():
    rs = build("B2")
    w0, perm = weyl.longest_element(rs)
    # exhaustive enumeration of the 8-element group: w0 = -1
    assert perm == (1, 2)
    for lam in product(range(-2, 3), repeat=2):
        assert weyl.act(rs, w0, lam) == tuple(-x for x in lam)
    assert weyl.length(rs, w0) == rs.num_positive
    assert weyl.act(rs, w0 + w0, (1, 2)) == (1, 2)  # involution
    for n in range(3, 7):
        rs = build(("A", n - 1))
        _, perm = weyl.longest_element(rs)
        assert perm == tuple(range(n - 1, 0, -1))  # chain flip
    rs = build("A1")
    w0, _ = weyl.longest_element(rs)
    assert w0 == (1,)


def test_orbit():
    for n in range(2, 7):
        rs = build(("A", n - 1))
        orb = weyl.orbit(rs, tuple(int(j == 0) for j in range(n - 1)))
        assert len(orb) == n
    rs = build("A2")
    assert weyl.orbit(rs, (0, 0)) == [(0, 0)]
    for n in range(2, 6):
        rs = build(("B", n))
        orb = weyl.orbit(rs, tuple(int(j == n - 1) for j in range(n)))
        assert len(orb) == 2**n  # spin weights (+-1/2, ..., +-1/2)
    for label in ["A2", "B2", "G2"]:
        rs = build(label)
        orb = weyl.orbit(rs, (1,) * rs.rank)
        assert weyl.group_order(rs) % len(orb) == 0
        assert sum(1 for w in orb if all(x >= 0 for x in w)) == 1


def test_orbit_cap():
    rs = build("B3")
    with pytest.raises(OrbitTooLarge):
        weyl.orbit(rs, (1, 1, 1), cap=10)


def test_to_dominant():
    rs = build("A2")
    assert weyl.to_dominant(rs, (2, 3)) == ((2, 3), (), 1)
    rs1 = build("A1")
    dom, word, sign = weyl.to_dominant(rs1, (-3,))
    assert dom == (3,) and word == (1,) and sign == -1
    # A2, lambda = (-1,-1): exhaustive oracle over the 6 group elements.
    # The unique element taking it to the dominant chamber is w0 with
    # length 3, so the sign is -1 (the weight is strictly anti-dominant).
    rs = build("A2")
    results = set()
    for m in weyl.elements(rs):
        lam_root = rs.weight_to_root((-1, -1))
        img = tuple(
            sum(m[i][j] * lam_root[j] for j in range(2)) for i in range(2)
        )
        fund = rs.root_to_weight(img)
        if all(x >= 0 for x in fund):
            results.add((fund, (-1) ** weyl.matrix_length(rs, m)))
    assert results == {((1, 1), -1)}
    dom, word, sign = weyl.to_dominant(rs, (-1, -1))
    assert dom == (1, 1) and sign == -1
    assert weyl.act(rs, word, (-1, -1)) == (1, 1)
    # random weights land in the dominant chamber with the stated sign
    rng = random.Random(9)
    for label in ["B2", "G2", "A3"]:
        rs = build(label)
        for _ in range(25):
            lam = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(rs.rank))
            dom, word, sign = weyl.to_dominant(rs, lam)
            assert all(x >= 0 for x in dom)
            assert weyl.act(rs, word, lam) == dom
            assert sign == (-1) ** len(word)


def test_group_order_and_generating_function():
    rs = build("A2")
    assert weyl.group_order(rs) == 6
    assert weyl.length_generating_function(rs) == [1, 2, 2, 1]
    rs = build("A1")
    assert weyl.length_generating_function(rs) == [1, 1]
    rs = build("G2")
    assert weyl.group_order(rs) == 12
    assert len(weyl.elements(rs)) == 12  # exhaustive closure agrees
    for label in ["A3", "B3", "B2", "G2", "D4"]:
        rs = build(label)
        lgf = weyl.length_generating_function(rs)
        assert sum(lgf) == weyl.group_order(rs)
        assert lgf == lgf[::-1]  # palindromic
        assert len(lgf) - 1 == rs.num_positive
        assert all(c > 0 for c in lgf)
    assert weyl.group_order(build("E8")) == 696729600


def test_sign_homomorphism_sampled():
    rng = random.Random(17)
    for label in ["A2", "B2", "G2"]:
        rs = build(label)
        for _ in range(20):
            u = tuple(rng.randint(1, rs.rank) for _ in range(rng.randint(0, 5)))
            v = tuple(rng.randint(1, rs.rank) for _ in range(rng.randint(0, 5)))
            assert weyl.sign(rs, u + v) == weyl.sign(rs, u) * weyl.sign(rs, v)


def test_every_root_reflection_permutes_roots():
    for label in ["A3", "B3", "G2"]:
        rs = build(label)
        roots = set(rs.roots)
        for alpha in rs.positive_roots:
            cor = rs.coroot(alpha)
            for beta in roots:
                pair = rs.pair_weight_coroot(rs.root_to_weight(beta), cor)
                img = tuple(b - int(pair) * a for b, a in zip(beta, alpha))
                assert img in roots
