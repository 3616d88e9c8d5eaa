import importlib.resources
from fractions import Fraction

import pytest

from liekit import cohomology as coh
from liekit import liealg, linalg, rootsys
from liekit.errors import TooLarge
from liekit.selftest import sl2_module


def poly_of(betti):
    return [betti[k] for k in range(max(betti) + 1)]


def test_sl2_trivial():
    assert poly_of(coh.ce_cohomology(liealg.sl(2))) == [1, 0, 0, 1]


def test_abelian2():
    assert poly_of(coh.ce_cohomology(liealg.abelian(2))) == [1, 2, 1]


def test_sl3_so5_sp4():
    assert poly_of(coh.ce_cohomology(liealg.sl(3))) == [1, 0, 0, 1, 0, 1, 0, 0, 1]
    expected_b2 = [1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1]  # (1+q^3)(1+q^7)
    assert poly_of(coh.ce_cohomology(liealg.so(5))) == expected_b2
    assert poly_of(coh.ce_cohomology(liealg.sp(4))) == expected_b2


def test_g2_from_file():
    path = importlib.resources.files("liekit") / "data" / "g2.json"
    g = liealg.from_file(str(path))
    betti = coh.ce_cohomology(g)
    expected = [0] * 15
    for k in (0, 3, 11, 14):
        expected[k] = 1  # (1+q^3)(1+q^11)
    assert poly_of(betti) == expected


def test_whitehead_vanishing():
    g = liealg.sl(2)
    for n in range(1, 7):
        betti = coh.ce_cohomology(g, module=sl2_module(g, n))
        assert betti[1] == 0 and betti[2] == 0
        # nontrivial irreducible coefficients kill all cohomology
        assert all(v == 0 for v in betti.values())


def test_h0_is_invariants():
    g = liealg.sl(2)
    assert coh.ce_cohomology(g, module=sl2_module(g, 0), degrees=[0])[0] == 1
    assert coh.ce_cohomology(g, module=sl2_module(g, 2), degrees=[0])[0] == 0


def test_invariant_forms_match_cohomology_two_paths():
    for g in [liealg.sl(2), liealg.sl(3), liealg.so(5), liealg.sp(4)]:
        inv = coh.invariant_forms_poincare(g)
        betti = coh.ce_cohomology(g)
        assert inv == poly_of(betti)


def test_invariant_total_dimension_is_2_to_rank():
    for g, rank in [(liealg.sl(2), 1), (liealg.sl(3), 2), (liealg.so(5), 2), (liealg.sp(4), 2)]:
        assert sum(coh.invariant_forms_poincare(g)) == 2**rank


def test_exponents_from_invariant_degrees():
    cases = [
        (liealg.sl(2), "A1"),
        (liealg.sl(3), "A2"),
        (liealg.sl(4), "A3"),
        (liealg.so(5), "B2"),
        (liealg.so(6), "A3"),  # D3 = A3
    ]
    for g, label in cases:
        degrees = coh.exterior_generator_degrees(coh.invariant_forms_poincare(g))
        exps = rootsys.build(label).exponents()
        assert degrees == [2 * m + 1 for m in exps]


def test_euler_characteristic_vanishes():
    for g in [liealg.sl(2), liealg.heisenberg(), liealg.abelian(3), liealg.upper_triangular(3)]:
        betti = coh.ce_cohomology(g)
        assert sum((-1) ** k * v for k, v in betti.items()) == 0


def test_heisenberg_betti():
    betti = coh.ce_cohomology(liealg.heisenberg())
    assert poly_of(betti) == [1, 2, 2, 1]


def test_central_extension_integrates_to_heisenberg():
    g = liealg.abelian(2)
    betti = coh.ce_cohomology(g)
    assert betti[2] == 1
    # the unique 2-cocycle up to scale is omega(x, y) = 1; the extension
    # bracket [x, y] = omega(x, y) c reproduces the heisenberg table
    omega = {(0, 1): Fraction(1)}
    table = {(i, j): {2: c} for (i, j), c in omega.items()}
    extension = liealg.StructureLieAlgebra(["x", "y", "c"], table)
    assert extension.table == liealg.heisenberg().table
    assert extension.series("lower_central") == [3, 1, 0]


def test_triple_product_invariant():
    assert coh.triple_product_invariant(liealg.sl(2)) == 1
    assert coh.triple_product_invariant(liealg.sl(3)) == 1
    assert coh.triple_product_invariant(liealg.so(5)) == 1
    # abelian(3): all of Lambda^3 is invariant, C(3,3) = 1, but the algebra
    # is not simple - this is why simplicity is the stated precondition
    g3 = liealg.abelian(3)
    assert coh.triple_product_invariant(g3) == 1
    assert not g3.is_semisimple()


def test_killing_positive_on_coroot_span():
    # positivity via leading principal minors on the diagonal Cartan
    for g in [liealg.sl(3), liealg.sl(4), liealg.sp(6), liealg.so(7)]:
        K = g.killing_form()
        sub = [[K[i][j] for j in g.cartan] for i in g.cartan]
        minors = linalg.leading_principal_minors(sub)
        assert all(m > 0 for m in minors)


def test_cap():
    with pytest.raises(TooLarge):
        coh.ce_cohomology(liealg.abelian(25))


def test_degree_selection():
    g = liealg.sl(3)
    partial = coh.ce_cohomology(g, degrees=[3])
    assert partial == {3: 1}
