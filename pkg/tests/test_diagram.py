import pytest
from hypothesis import given, strategies as st

from heegaardrect.diagram import Diagram, DiagramError, intersection_number

from conftest import (
    hexagon_diagram,
    reducible_torus,
    split_components_diagram,
    sphere_bigons,
    torus_one,
    torus_two,
)


def test_single_crossing_torus():
    """One crossing forces V=1, E=2, F=1 and genus 1 by the Euler formula."""
    d = torus_one()
    assert d.num_crossings == 1
    assert d.genus == 1
    assert len(d.faces) == 1
    face = d.faces[0]
    assert face.degree == 4
    sides = {(s.curve, s.side) for s in face.sides}
    assert sides == {("a", 1), ("a", -1), ("b", 1), ("b", -1)}


def test_two_crossing_torus_faces():
    d = torus_two()
    assert d.genus == 1
    assert sorted(f.degree for f in d.faces) == [4, 4]


def test_sphere_bigons_faces():
    d = sphere_bigons()
    assert d.genus == 0
    assert sorted(f.degree for f in d.faces) == [2, 2, 2, 2]


def test_duplicate_crossing_in_family_rejected():
    with pytest.raises(DiagramError, match="twice"):
        Diagram({"a": ["x", "x"]}, {"b": ["x"]}, {"x": 1})


def test_mismatched_occurrences_rejected():
    with pytest.raises(DiagramError, match="match up"):
        Diagram({"a": ["x", "y"]}, {"b": ["x"]}, {"x": 1, "y": 1})


def test_disconnected_rejected():
    with pytest.raises(DiagramError, match="disconnected"):
        Diagram(
            {"a1": ["x"], "a2": ["y"]},
            {"b1": ["x"], "b2": ["y"]},
            {"x": 1, "y": 1},
        )


def test_empty_family_rejected():
    with pytest.raises(DiagramError, match="empty"):
        Diagram({}, {"b": ["x"]}, {"x": 1})
    with pytest.raises(DiagramError, match="empty"):
        Diagram({"a": []}, {"b": []}, {})


ALL_FIXTURES = [
    torus_one,
    torus_two,
    sphere_bigons,
    reducible_torus,
    hexagon_diagram,
    split_components_diagram,
]


@pytest.mark.parametrize("make", ALL_FIXTURES)
def test_euler_identity(make):
    """F - V = 2 - 2g on every fixture (E = 2V is implicit)."""
    d = make()
    assert len(d.faces) - d.num_crossings == 2 - 2 * d.genus


@pytest.mark.parametrize("make", ALL_FIXTURES)
def test_faces_alternate_families(make):
    d = make()
    for f in d.faces:
        assert f.degree % 2 == 0
        fams = [s.family for s in f.sides]
        for i, fam in enumerate(fams):
            assert fam != fams[(i + 1) % len(fams)]


@pytest.mark.parametrize("make", ALL_FIXTURES)
def test_face_degree_sum(make):
    d = make()
    assert sum(f.degree for f in d.faces) == 4 * d.num_crossings


@pytest.mark.parametrize("make", ALL_FIXTURES)
def test_orientation_reversal_preserves_faces(make):
    """Reversing one curve flips its signs but not the face structure."""
    d = make()
    for curve in d.a_curve_ids() + d.b_curve_ids():
        r = d.reverse_curve(curve)
        assert r.genus == d.genus
        assert sorted(f.degree for f in r.faces) == sorted(f.degree for f in d.faces)
        for x, cr in d.crossings.items():
            flipped = curve in (cr.a_curve, cr.b_curve)
            assert r.crossings[x].sign == (-cr.sign if flipped else cr.sign)


def test_swap_roles_exchanges_families():
    d = torus_one().swap_roles()
    assert d.a_curve_ids() == ("b",)
    assert d.b_curve_ids() == ("a",)
    assert d.genus == 1


@pytest.mark.parametrize("make", [torus_one, torus_two, hexagon_diagram,
                                  split_components_diagram])
def test_swap_roles_involution(make):
    d = make()
    dd = d.swap_roles().swap_roles()
    assert dd.a_words == d.a_words
    assert dd.b_words == d.b_words
    assert {x: c.sign for x, c in dd.crossings.items()} == {
        x: c.sign for x, c in d.crossings.items()
    }


def test_swap_aux_map_rejected():
    from heegaardrect.twist import chain_base

    with pytest.raises(DiagramError, match="multicurve"):
        chain_base(2).swap_roles()


def test_reduce_bigons_removes_and_preserves_genus():
    d = reducible_torus()
    assert not d.is_bigon_free()
    r = d.reduce_bigons()
    assert r.is_bigon_free()
    assert r.genus == d.genus == 1
    assert r.num_crossings == 2


def test_reduce_bigons_idempotent_on_clean_input():
    d = torus_two()
    r = d.reduce_bigons()
    assert r is d


def test_reduce_bigons_curve_elimination():
    """Curves meeting only in bigons are disjoint up to isotopy: an error."""
    with pytest.raises(DiagramError, match="eliminated"):
        sphere_bigons().reduce_bigons()


def test_relabeling_gives_isomorphic_diagram():
    d = hexagon_diagram()
    mapping = {f"x{i}": f"y{9 - i}" for i in range(6)}
    r = d.relabel_crossings(mapping)
    assert r.is_isomorphic(d)
    assert d.is_isomorphic(r)


def test_certificate_distinguishes_sign_change():
    d = torus_two()
    other = Diagram({"a": ["x", "y"]}, {"b": ["x", "y"]}, {"x": 1, "y": -1})
    assert not d.is_isomorphic(other)


@given(st.integers(0, 2), st.integers(0, 2))
def test_word_rotation_gives_same_diagram(i, j):
    """A cyclic word has no distinguished starting point."""
    a1 = ["x0", "x1", "x2"]
    b2 = ["x2", "x4", "x5"]
    d2 = Diagram(
        {"a1": a1[i:] + a1[:i], "a2": ["x3", "x4", "x5"]},
        {"b1": ["x0", "x1", "x3"], "b2": b2[j:] + b2[:j]},
        {"x0": 1, "x1": 1, "x2": 1, "x3": 1, "x4": -1, "x5": -1},
    )
    assert hexagon_diagram().is_isomorphic(d2)


def test_intersection_number():
    d = torus_one()
    assert intersection_number(d, "a", "b") == 1
    h = hexagon_diagram()
    assert intersection_number(h, "a1", "a2") == 0
    assert intersection_number(h, "a1", "b1") == 2
    assert intersection_number(h, "a1", "b2") == 1
    with pytest.raises(DiagramError, match="unknown curve"):
        intersection_number(d, "a", "nope")
