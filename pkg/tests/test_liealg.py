import json
import random
from fractions import Fraction

import pytest

from liekit import liealg, rootsys
from liekit.errors import (
    InvalidFile,
    JacobiFailure,
    NotDiagonalizable,
    ValidationError,
)
from liekit.selftest import random_algebra, sl2_module


def test_sl2_structure():
    g = liealg.sl(2)
    assert g.dim == 3
    h, e, f = 0, 1, 2
    assert g.bracket_basis(e, f) == {h: 1}
    assert g.bracket_basis(h, e) == {e: 2}
    assert g.bracket_basis(h, f) == {f: -2}


def test_constructor_dimensions():
    assert liealg.sp(4).dim == 10
    assert liealg.sp(12).dim == 78  # n(2n+1), n = 6
    assert liealg.so(5).dim == 10
    assert liealg.so(8).dim == 28
    assert liealg.sl(4).dim == 15
    assert liealg.upper_triangular(3).dim == 6
    assert liealg.strictly_upper_triangular(4).dim == 6
    assert liealg.heisenberg().dim == 3
    assert liealg.abelian(5).dim == 5


def test_heisenberg():
    g = liealg.heisenberg()
    assert g.bracket_basis(0, 1) == {2: 1}
    assert g.bracket_basis(0, 2) == {}
    assert g.bracket_basis(1, 2) == {}
    assert g.series("lower_central") == [3, 1, 0]
    K = g.killing_form()
    assert all(all(x == 0 for x in row) for row in K)


def test_killing_sl2():
    g = liealg.sl(2)
    K = g.killing_form()
    assert K[0][0] == 8
    assert K[1][2] == K[2][1] == 4
    assert K[0][1] == K[0][2] == 0


def test_killing_invariance():
    rng = random.Random(4)
    for g in [liealg.sl(3), liealg.so(5), liealg.heisenberg(), liealg.upper_triangular(3)]:
        K = g.killing_form()
        for _ in range(20):
            i, j, k = (rng.randrange(g.dim) for _ in range(3))
            lhs = sum(
                c * K[m][k] for m, c in g.bracket_basis(i, j).items()
            )
            rhs = sum(
                c * K[i][m] for m, c in g.bracket_basis(j, k).items()
            )
            assert lhs == rhs


def test_killing_abelian_zero():
    g = liealg.abelian(4)
    assert all(all(x == 0 for x in row) for row in g.killing_form())


def test_predicates():
    assert liealg.upper_triangular(3).is_solvable()
    assert not liealg.upper_triangular(3).is_nilpotent()
    assert liealg.strictly_upper_triangular(3).is_nilpotent()
    assert liealg.strictly_upper_triangular(5).is_nilpotent()
    for n in (2, 3, 4):
        assert liealg.sl(n).is_semisimple()
    for n in (5, 6, 8):
        assert liealg.so(n).is_semisimple()
    for n in (4, 6):
        assert liealg.sp(n).is_semisimple()
    assert not liealg.sl(2).is_solvable()
    assert not liealg.heisenberg().is_semisimple()
    assert liealg.heisenberg().is_solvable()


def test_series():
    assert liealg.abelian(4).series("derived") == [4, 0]
    assert liealg.sl(2).series("derived") == [3, 3]
    ut = liealg.upper_triangular(3)
    der = ut.series("derived")
    assert der[-1] == 0 and der[0] == 6
    lc = ut.series("lower_central")
    assert lc[-1] == lc[-2] != 0
    for g in [liealg.sl(3), liealg.heisenberg(), ut]:
        for kind in ("derived", "lower_central"):
            dims = g.series(kind)
            assert all(a >= b for a, b in zip(dims, dims[1:]))


def test_randomized_solvability_agreement():
    # is_solvable internally computes the derived series and the Cartan
    # criterion and asserts they agree
    rng = random.Random(2024)
    for _ in range(100):
        g = random_algebra(rng)
        assert g.dim <= 8
        g.is_solvable()


def test_root_decomposition_counts():
    assert len(liealg.sl(3).root_decomposition()) == 6
    assert len(liealg.sp(4).root_decomposition()) == 8
    assert len(liealg.so(5).root_decomposition()) == 8
    for f, dim in liealg.sl(4).root_decomposition():
        assert dim == 1


def test_root_decomposition_requires_marker():
    g = liealg.heisenberg()
    with pytest.raises(NotDiagonalizable):
        g.root_decomposition()


def test_concordance_with_abstract_systems():
    cases = [
        (liealg.sl(2), [("A", 1)]),
        (liealg.sl(4), [("A", 3)]),
        (liealg.sp(6), [("C", 3)]),
        (liealg.sp(10), [("C", 5)]),
        (liealg.so(9), [("B", 4)]),
        (liealg.so(11), [("B", 5)]),
        (liealg.so(8), [("D", 4)]),
        (liealg.so(10), [("D", 5)]),
    ]
    for g, expected in cases:
        A, simple, roots = liealg.recovered_cartan_matrix(g)
        assert rootsys.validate_cartan(A) == expected
        coords = liealg.root_coordinates(simple, roots)
        abstract = rootsys.RootSystem(tuple(tuple(r) for r in A))
        assert sorted(coords) == sorted(abstract.roots)


def test_jacobi_validation():
    with pytest.raises(JacobiFailure):
        liealg.StructureLieAlgebra(
            ["x", "y", "z"],
            {(0, 1): {2: 1}, (0, 2): {0: 1}, (1, 2): {1: 1}},
        )


def test_antisymmetry_normalization():
    g = liealg.StructureLieAlgebra(["x", "y", "z"], {(1, 0): {2: -1}})
    assert g.bracket_basis(0, 1) == {2: 1}
    with pytest.raises(ValidationError):
        liealg.StructureLieAlgebra(["x"], {(0, 0): {0: 1}})


def test_module_validation():
    g = liealg.sl(2)
    for n in range(0, 5):
        sl2_module(g, n)  # validates the bracket relation internally
    bad = [[[Fraction(1)]], [[Fraction(0)]], [[Fraction(0)]]]
    with pytest.raises(ValidationError):
        liealg.LieModule(g, bad)


def test_file_round_trip(tmp_path):
    g = liealg.sl(2)
    path = tmp_path / "sl2.json"
    path.write_text(json.dumps(liealg.to_dict(g)))
    g2 = liealg.from_file(str(path))
    assert g2.dim == g.dim
    assert g2.table == g.table
    assert g2.cartan == g.cartan


def test_g2_file_ships_and_validates():
    import importlib.resources

    path = importlib.resources.files("liekit") / "data" / "g2.json"
    g = liealg.from_file(str(path))
    assert g.dim == 14
    assert g.is_semisimple()
    assert g.cartan == (0, 1)
    A, _, _ = liealg.recovered_cartan_matrix(g)
    assert rootsys.validate_cartan(A) == [("G", 2)]
    decomp = g.root_decomposition()
    assert len(decomp) == 12 and all(d == 1 for _, d in decomp)


def test_from_file_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InvalidFile):
        liealg.from_file(str(bad))
    bad.write_text(json.dumps({"dim": 2, "brackets": [{"i": 0, "j": 5, "coeffs": {"0": "1"}}]}))
    with pytest.raises(InvalidFile):
        liealg.from_file(str(bad))
    # corrupt structure constants must fail the Jacobi validation
    corrupt = {
        "dim": 3,
        "basis": ["x", "y", "z"],
        "brackets": [
            {"i": 0, "j": 1, "coeffs": {"2": "1"}},
            {"i": 0, "j": 2, "coeffs": {"0": "1"}},
            {"i": 1, "j": 2, "coeffs": {"1": "1"}},
        ],
    }
    bad.write_text(json.dumps(corrupt))
    with pytest.raises(JacobiFailure):
        liealg.from_file(str(bad))


def test_change_basis_preserves_invariants():
    rng = random.Random(8)
    for g in [liealg.sl(2), liealg.heisenberg(), liealg.upper_triangular(3)]:
        n = g.dim
        p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for _ in range(3 * n):
            i, j = rng.randrange(n), rng.randrange(n)
            if i != j:
                c = rng.randint(-2, 2)
                for k in range(n):
                    p[k][i] += c * p[k][j]
        h = liealg.change_basis(g, p)
        assert h.is_solvable() == g.is_solvable()
        assert h.is_nilpotent() == g.is_nilpotent()
        assert h.is_semisimple() == g.is_semisimple()
        assert h.series("derived") == g.series("derived")


def test_direct_sum():
    g = liealg.direct_sum(liealg.sl(2), liealg.abelian(2))
    assert g.dim == 5
    assert g.is_solvable() is False
    assert g.is_semisimple() is False  # abelian summand kills the Killing form
    assert liealg.direct_sum(liealg.sl(2), liealg.sl(2)).is_semisimple()
