import pytest

from liekit import rootsys, voganforms as vf
from liekit.errors import BadColoring, BadInvolution, NotBlack


def test_validate():
    # A3 with the chain flip and the middle vertex colorable
    vd = vf.diagram("A", 3, colors=[2], involution=(3, 2, 1))
    assert vd.fixed_vertices() == (2,)
    with pytest.raises(BadInvolution):
        vf.diagram("B", 3, involution=(3, 2, 1))  # B admits only the identity
    with pytest.raises(BadInvolution):
        vf.diagram("A", 3, involution=(2, 3, 1))  # not an involution
    with pytest.raises(BadColoring):
        vf.diagram("A", 3, colors=[1], involution=(3, 2, 1))  # swapped vertex


def test_b_series_has_no_nontrivial_automorphism():
    for n in (2, 3, 4, 5):
        assert vf.diagram_automorphisms("B", n) == [tuple(range(1, n + 1))]
        assert vf.diagram_automorphisms("C", n) == [tuple(range(1, n + 1))]
    assert len(vf.diagram_automorphisms("A", 3)) == 2
    assert len(vf.diagram_automorphisms("D", 4)) == 6  # triality
    assert len(vf.diagram_automorphisms("D", 5)) == 2
    assert len(vf.diagram_automorphisms("E", 6)) == 2
    assert len(vf.diagram_automorphisms("E", 7)) == 1
    assert len(vf.diagram_automorphisms("G", 2)) == 1


def test_involution_classes():
    # 1 class for B, C, E7, E8, F4, G2; 2 for A (n >= 2), D, E6
    for fam, rank in [("B", 4), ("C", 4), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]:
        assert len(vf.involution_classes(fam, rank)) == 1
    for fam, rank in [("A", 3), ("A", 5), ("D", 4), ("D", 5), ("E", 6)]:
        assert len(vf.involution_classes(fam, rank)) == 2


def test_flip_moves():
    # A1: flipping the single black vertex changes nothing
    vd = vf.diagram("A", 1, colors=[1])
    assert vf.flip(vd, 1).colors == frozenset([1])
    # A2: flipping at black vertex 1 toggles vertex 2
    vd = vf.diagram("A", 2, colors=[1])
    assert vf.flip(vd, 1).colors == frozenset([1, 2])
    with pytest.raises(NotBlack):
        vf.flip(vd, 2)
    # F4 parity rule: black vertex 2 does not toggle vertex 3 (a_23 = -2)
    vd = vf.diagram("F", 4, colors=[2])
    assert vf.flip(vd, 2).colors == frozenset([1, 2])
    # but black vertex 3 does toggle vertex 2 (a_32 = -1)
    vd = vf.diagram("F", 4, colors=[3])
    assert vf.flip(vd, 3).colors == frozenset([2, 3, 4])


def test_f4_equivalence_chain():
    # the six-step chain: each consecutive pair is flip-equivalent, and the
    # last diagram collapses to the third
    chain = [
        [4], [3, 4], [2, 3], [1, 3], [1, 2, 3, 4], [1, 2, 4], [1, 4],
    ]
    canon = [vf.canonical_form(vf.diagram("F", 4, colors=c))[0] for c in chain]
    assert all(c == canon[0] for c in canon)
    third = vf.canonical_form(vf.diagram("F", 4, colors=[4]))[0]
    last = vf.canonical_form(vf.diagram("F", 4, colors=[1, 4]))[0]
    assert third == last


def test_canonical_form_class_counts():
    # F4 inner colorings fall into exactly 3 classes
    from itertools import combinations

    def inner_classes(family, rank):
        reps = set()
        for k in range(rank + 1):
            for combo in combinations(range(1, rank + 1), k):
                vd = vf.diagram(family, rank, colors=combo)
                rep, _ = vf.canonical_form(vd)
                reps.add(rep.colors)
        return reps

    assert len(inner_classes("F", 4)) == 3
    assert len(inner_classes("G", 2)) == 2
    # G2: all-white alone; everything else equivalent
    assert inner_classes("G", 2) == {frozenset(), frozenset([1])} or inner_classes(
        "G", 2
    ) == {frozenset(), frozenset([2])}


def test_e6_outer_classes():
    sigma = (6, 2, 5, 4, 3, 1)
    reps = set()
    from itertools import combinations

    for k in range(3):
        for combo in combinations([2, 4], k):
            vd = vf.diagram("E", 6, colors=combo, involution=sigma)
            rep, _ = vf.canonical_form(vd)
            reps.add(rep.colors)
    assert len(reps) == 2


def test_fixed_subalgebra_dims():
    # all-white inner diagram: the compact form, dim p = 0
    for fam, rank in [("A", 3), ("B", 4), ("G", 2), ("F", 4)]:
        vd = vf.diagram(fam, rank)
        dim_k, dim_p, rank_k = vf.fixed_subalgebra_dims(vd)
        assert dim_p == 0 and rank_k == rank
    # F4 with the first (short) vertex black: k = so(9), dim 36
    vd = vf.diagram("F", 4, colors=[1])
    assert vf.fixed_subalgebra_dims(vd) == (36, 16, 4)
    desc = vf.classify(vd)
    assert desc.k_description == "so(9)"
    assert desc.signature == (16, 36)


def test_split_dims():
    for label in ["A2", "A4", "B3", "B4", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"]:
        rs = rootsys.build(label)
        fam, rank = rs.types()[0]
        forms = vf.enumerate_real_forms(fam, rank)
        split = [f for f in forms if f.dim_k == rs.num_positive]
        assert len(split) == 1, label
        # the compact form is the unique one with dim p = 0
        compact = [f for f in forms if f.dim_p == 0]
        assert len(compact) == 1


def test_flip_preserves_dims_on_orbit():
    from itertools import combinations

    for fam, rank in [("F", 4), ("B", 3), ("G", 2), ("D", 4)]:
        for k in range(rank + 1):
            for combo in combinations(range(1, rank + 1), k):
                vd = vf.diagram(fam, rank, colors=combo)
                dims = vf.fixed_subalgebra_dims(vd)
                for other in vf.flip_orbit(vd):
                    assert vf.fixed_subalgebra_dims(other) == dims


def test_exceptional_counts():
    assert len(vf.enumerate_real_forms("G", 2)) == 2
    assert len(vf.enumerate_real_forms("F", 4)) == 3
    assert len(vf.enumerate_real_forms("E", 6)) == 5
    assert len(vf.enumerate_real_forms("E", 7)) == 4
    assert len(vf.enumerate_real_forms("E", 8)) == 3
    e6 = vf.enumerate_real_forms("E", 6)
    assert sum(1 for f in e6 if f.inner) == 3
    assert sum(1 for f in e6 if not f.inner) == 2


def test_exceptional_k_descriptions():
    e8 = {f.name: f for f in vf.enumerate_real_forms("E", 8)}
    assert e8["E8^1"].k_description == "E7+sl(2)"
    assert e8["E8 split"].k_description == "so(16)"
    f4 = {f.name: f for f in vf.enumerate_real_forms("F", 4)}
    assert f4["F4^1"].k_description == "so(9)"
    assert f4["F4 split"].k_description == "sp(6)+sl(2)"
    e6 = {f.name: f for f in vf.enumerate_real_forms("E", 6)}
    assert e6["E6^1"].k_description == "F4"
    assert e6["E6 split"].k_description == "sp(8)"
    e7 = {f.name: f for f in vf.enumerate_real_forms("E", 7)}
    assert e7["E7 split"].k_description == "sl(8)"
    g2 = {f.name: f for f in vf.enumerate_real_forms("G", 2)}
    assert g2["G2 split"].k_description == "sl(2)+sl(2)"


def test_a_series_counts():
    for n in range(2, 11):
        forms = vf.enumerate_real_forms("A", n - 1)
        inner = [f for f in forms if f.inner]
        assert len(inner) == n // 2 + 1
        names = {f.name for f in inner}
        assert f"su({n})" in names or n == 2 and "su(2)" in names
        outer = [f for f in forms if not f.inner]
        if n == 2:
            assert not outer
        elif n % 2 == 1:
            assert {f.name for f in outer} == {f"sl({n},R)"}
        else:
            assert {f.name for f in outer} == {f"sl({n},R)", f"sl({n // 2},H)"}


def test_classify_classical_names():
    # B series: so(2p+1, 2q)
    desc = vf.classify_classical(vf.diagram("B", 3, colors=[1]))
    assert desc.name == "so(5,2)"
    # C series: theta^2 = -1 gives the split form with k = gl(n)
    forms = {f.name: f for f in vf.enumerate_real_forms("C", 3)}
    assert forms["sp(6,R)"].k_description == "gl(3)"
    # compact inner forms
    assert vf.classify_classical(vf.diagram("A", 3)).name == "su(4)"
    assert vf.classify_classical(vf.diagram("C", 3)).name == "sp(3)"
    # D series: so* shows up with k = gl(n)
    d5 = {f.name: f for f in vf.enumerate_real_forms("D", 5)}
    assert "so*(10)" in d5 and d5["so*(10)"].k_description == "gl(5)"


def test_d3_a3_exceptional_isomorphism():
    # so(6) = sl(4): the outer real forms must match through the dictionary
    a3 = {f.name for f in vf.enumerate_real_forms("A", 3)}
    d3_outer_dims = set()
    # D3 outer: so(5,1) = sl(2,H) and so(3,3) = sl(4,R)
    assert "sl(2,H)" in a3 and "sl(4,R)" in a3
    a3_forms = {f.name: f for f in vf.enumerate_real_forms("A", 3)}
    assert a3_forms["sl(2,H)"].dim_k == 10  # sp(4) = so(5) x nothing
    assert a3_forms["sl(4,R)"].dim_k == 6  # so(4) = so(3) + so(3)


def test_b4_counts_and_descriptor_fields():
    forms = vf.enumerate_real_forms("B", 4)
    assert len(forms) == 5
    for f in forms:
        assert f.dim_k + f.dim_p == 36  # dim so(9)
        assert f.signature == (f.dim_p, f.dim_k)
        assert f.rank_k == 4  # inner class: equal ranks
