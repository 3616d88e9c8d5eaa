#!/usr/bin/env python3
"""Generate data/g2.json: structure constants for the split Lie algebra of
type G2, realized as the derivation algebra of the split octonions (Zorn
vector matrices), in a weight basis for a split Cartan subalgebra.

The output is validated end to end: the octonion algebra is checked to be
alternative, the derivation space must come out 14-dimensional, the basis
closes under brackets with the Jacobi identity verified, and the recovered
Cartan matrix must classify as G2.
"""

import os
import sys
from fractions import Fraction
from itertools import product

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from liekit import linalg, rootsys
from liekit.liealg import _from_matrices, recovered_cartan_matrix, to_dict

# Zorn basis: u1, u2, e1, e2, e3, f1, f2, f3
# element ((a, v), (w, b)): a*u1 + b*u2 + sum v_i e_i + sum w_i f_i
N = 8


def cross(v, w):
    return (
        v[1] * w[2] - v[2] * w[1],
        v[2] * w[0] - v[0] * w[2],
        v[0] * w[1] - v[1] * w[0],
    )


def dot(v, w):
    return sum(x * y for x, y in zip(v, w))


def zorn_mul(x, y):
    a, v, w, b = x
    a2, v2, w2, b2 = y
    return (
        a * a2 + dot(v, w2),
        tuple(a * v2[i] + b2 * v[i] - cross(w, w2)[i] for i in range(3)),
        tuple(a2 * w[i] + b * w2[i] + cross(v, v2)[i] for i in range(3)),
        b * b2 + dot(w, v2),
    )


def basis_elt(i):
    a = 1 if i == 0 else 0
    b = 1 if i == 1 else 0
    v = tuple(1 if i == 2 + k else 0 for k in range(3))
    w = tuple(1 if i == 5 + k else 0 for k in range(3))
    return (a, v, w, b)


def to_coords(x):
    a, v, w, b = x
    return [a] + list(v) + list(w) + [b]


def reorder(coords):
    # internal tuple layout is (a, v, w, b) -> coordinates u1, e, f, u2
    a, v1, v2, v3, w1, w2, w3, b = coords
    return [a, b, v1, v2, v3, w1, w2, w3]


MULT = [[None] * N for _ in range(N)]
for i in range(N):
    for j in range(N):
        MULT[i][j] = reorder(to_coords(zorn_mul(basis_elt(i), basis_elt(j))))


def mul_coords(x, y):
    out = [0] * N
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                if yj:
                    for k in range(N):
                        out[k] += xi * yj * MULT[i][j][k]
    return out


def check_alternative():
    unit = [1, 1, 0, 0, 0, 0, 0, 0]  # u1 + u2
    for i in range(N):
        x = [int(i == k) for k in range(N)]
        assert mul_coords(unit, x) == x and mul_coords(x, unit) == x
    import random

    rng = random.Random(7)
    for _ in range(40):
        x = [rng.randint(-3, 3) for _ in range(N)]
        y = [rng.randint(-3, 3) for _ in range(N)]
        xx = mul_coords(x, x)
        assert mul_coords(x, mul_coords(x, y)) == mul_coords(xx, y)
        assert mul_coords(mul_coords(y, x), x) == mul_coords(y, xx)


def derivation_system(positions):
    """Rows of the linear system for derivations supported on given matrix
    positions (row, col)."""
    index = {p: i for i, p in enumerate(positions)}
    rows = []
    for a in range(N):
        for b in range(N):
            for r in range(N):
                # D(x_a x_b)_r - (D x_a . x_b)_r - (x_a . D x_b)_r = 0
                row = {}
                for c in range(N):
                    if MULT[a][b][c] and (r, c) in index:
                        row[index[(r, c)]] = row.get(index[(r, c)], 0) + MULT[a][b][c]
                for rp in range(N):
                    if (rp, a) in index and MULT[rp][b][r]:
                        row[index[(rp, a)]] = row.get(index[(rp, a)], 0) - MULT[rp][b][r]
                    if (rp, b) in index and MULT[a][rp][r]:
                        row[index[(rp, b)]] = row.get(index[(rp, b)], 0) - MULT[a][rp][r]
                if row:
                    dense = [0] * len(positions)
                    for k, v in row.items():
                        dense[k] = v
                    rows.append(dense)
    return rows


def main():
    check_alternative()
    allpos = [(r, c) for r in range(N) for c in range(N)]
    rows = derivation_system(allpos)
    der_dim = 64 - linalg.rank(rows)
    assert der_dim == 14, der_dim

    # weights of the Zorn basis under the diagonal torus (two coordinates)
    tA = (1, -1, 0)
    tB = (0, 1, -1)
    wt = [(0, 0), (0, 0)] + [(tA[i], tB[i]) for i in range(3)] + [
        (-tA[i], -tB[i]) for i in range(3)
    ]
    hA = {(2 + i, 2 + i): Fraction(tA[i]) for i in range(3) if tA[i]}
    hA.update({(5 + i, 5 + i): Fraction(-tA[i]) for i in range(3) if tA[i]})
    hB = {(2 + i, 2 + i): Fraction(tB[i]) for i in range(3) if tB[i]}
    hB.update({(5 + i, 5 + i): Fraction(-tB[i]) for i in range(3) if tB[i]})

    weights = sorted(
        {
            (wt[r][0] - wt[c][0], wt[r][1] - wt[c][1])
            for r in range(N)
            for c in range(N)
        }
    )
    root_vectors = []
    for mu in weights:
        if mu == (0, 0):
            continue
        positions = [
            (r, c)
            for r in range(N)
            for c in range(N)
            if (wt[r][0] - wt[c][0], wt[r][1] - wt[c][1]) == mu
        ]
        rows = derivation_system(positions)
        basis = linalg.nullspace(rows, ncols=len(positions))
        for vec in basis:
            # scale to a primitive integer matrix
            from math import gcd

            den = 1
            for x in vec:
                den = den * x.denominator // gcd(den, x.denominator)
            ints = [int(x * den) for x in vec]
            g = 0
            for v in ints:
                g = gcd(g, v)
            ints = [v // g for v in ints]
            mat = {p: Fraction(v) for p, v in zip(positions, ints) if v}
            root_vectors.append((mu, mat))
    assert len(root_vectors) == 12, len(root_vectors)

    root_vectors.sort(key=lambda t: (-sum(t[0]), t[0]))
    labels = ["h1", "h2"] + [f"x{mu[0]},{mu[1]}" for mu, _ in root_vectors]
    mats = [hA, hB] + [m for _, m in root_vectors]
    g2 = _from_matrices(labels, mats, cartan=(0, 1))
    assert g2.is_semisimple()
    cartan_matrix, _, _ = recovered_cartan_matrix(g2)
    types = rootsys.validate_cartan(cartan_matrix)
    assert types == [("G", 2)], types

    import json

    out = os.path.join(
        os.path.dirname(__file__), "..", "src", "liekit", "data", "g2.json"
    )
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w") as fh:
        json.dump(to_dict(g2), fh, indent=1)
    print(f"wrote {out}: dim {g2.dim}, types {types}")


if __name__ == "__main__":
    main()
