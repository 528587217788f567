"""Squares (3x3 double cospans), their composition, classes, and cylinders."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from dcospan import (
    FINSET,
    Cospan,
    Cylinder,
    DoubleCell,
    FiniteFunction,
    FiniteSet,
    MismatchError,
    SquareClass,
    ValidationError,
    act_h,
    act_square,
    act_v,
    check_interchange,
    compose_cospans,
    compose_cylinders,
    h_identity,
    hcompose,
    identity_cylinder,
    identity_map,
    right_unitor,
    square_iso,
    squares_isomorphic,
    v_identity,
    validate_double_cospan,
    vcompose,
)
from dcospan.double import DoubleCospan, signature
from dcospan.generate import (
    random_bigon_onto,
    random_grid,
    random_h_pair,
    random_h_triple,
    random_permuted,
    random_square,
    random_v_pair,
)

from helpers import square_fields, unchecked_square


def ff(a, b, table):
    return FiniteFunction(FiniteSet(a), FiniteSet(b), tuple(table))


def edge_cospan():
    return Cospan(ff(1, 2, [0]), ff(1, 2, [1]))


def sheet():
    # four edge cospans around a 2x2 center, one point per corner region
    e = edge_cospan()
    return DoubleCospan(
        top=e,
        bottom=e,
        left=e,
        right=e,
        center=FiniteSet(4),
        from_top=ff(2, 4, [0, 1]),
        from_bottom=ff(2, 4, [2, 3]),
        from_left=ff(2, 4, [0, 2]),
        from_right=ff(2, 4, [1, 3]),
    )


# --- validation ---


def test_sheet_is_valid():
    validate_double_cospan(sheet())


def test_noncommuting_corner_rejected_with_witness():
    fields = square_fields(sheet())
    fields["from_top"] = ff(2, 4, [0, 0])
    broken = unchecked_square(**fields)
    with pytest.raises(ValidationError) as err:
        validate_double_cospan(broken)
    assert err.value.location == "top-right"
    assert err.value.witness == ("element", 0, 0, 1)


def test_foot_disagreement_rejected():
    fields = square_fields(sheet())
    fields["top"] = Cospan(ff(0, 2, []), ff(1, 2, [1]))
    with pytest.raises(ValidationError) as err:
        validate_double_cospan(unchecked_square(**fields))
    assert err.value.location == "top-left"


def test_wrong_center_codomain_rejected():
    fields = square_fields(sheet())
    fields["from_left"] = ff(2, 5, [0, 2])
    with pytest.raises(ValidationError) as err:
        validate_double_cospan(unchecked_square(**fields))
    assert err.value.location == "from_left"


# --- transpose and identities ---


def test_transpose_is_an_involution():
    s = sheet()
    assert s.transpose().transpose() == s
    assert s.transpose().top == s.left


def test_identity_squares_are_transposes():
    v = edge_cospan()
    assert h_identity(v).transpose() == v_identity(v)


def test_h_identity_edges():
    v = edge_cospan()
    d = h_identity(v)
    assert d.left == v == d.right
    assert d.top.is_identity() and d.bottom.is_identity()
    assert d.center == v.apex


# --- composition ---


def test_hcompose_boundary_and_center():
    s = sheet()
    c = hcompose(s, s)
    assert c.top == compose_cospans(s.top, s.top)
    assert c.bottom == compose_cospans(s.bottom, s.bottom)
    assert c.left == s.left and c.right == s.right
    # two 4-point centers glued along a shared 2-point column apex
    assert c.center == FiniteSet(6)
    assert c.from_top.table == (0, 1, 4)


def test_vcompose_boundary():
    s = sheet()
    c = vcompose(s, s)
    assert c.left == compose_cospans(s.left, s.left)
    assert c.right == compose_cospans(s.right, s.right)
    assert c.top == s.top and c.bottom == s.bottom
    assert c.center == FiniteSet(6)


def test_compose_requires_shared_edge():
    s = sheet()
    with pytest.raises(MismatchError):
        hcompose(s, h_identity(Cospan(ff(1, 1, [0]), ff(1, 1, [0]))))


def test_strict_units_for_square_composition():
    s = sheet()
    assert hcompose(s, h_identity(s.right)) == s
    assert vcompose(s, v_identity(s.bottom)) == s


def test_left_unit_recovers_class_after_unitor_action():
    s = sheet()
    comp = hcompose(h_identity(s.left), s)
    fixed = act_h(right_unitor(s.top).inverse(), comp, "left")
    fixed = act_h(right_unitor(s.bottom).inverse(), fixed, "right")
    assert fixed.boundary() == s.boundary()
    assert SquareClass(fixed) == SquareClass(s)


@settings(deadline=None, max_examples=30)
@given(st.integers(0, 10_000))
def test_hcompose_associative_up_to_class(seed):
    a, b, c = random_h_triple(random.Random(seed), FINSET)
    left = hcompose(hcompose(a, b), c)
    right = hcompose(a, hcompose(b, c))
    assert left.boundary() == right.boundary()
    assert SquareClass(left) == SquareClass(right)


@settings(deadline=None, max_examples=30)
@given(st.integers(0, 10_000))
def test_vcompose_matches_transposed_hcompose(seed):
    a, b = random_v_pair(random.Random(seed), FINSET)
    direct = vcompose(a, b)
    via = hcompose(a.transpose(), b.transpose()).transpose()
    assert direct == via


# --- isomorphism rel boundary ---


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10_000))
def test_square_iso_recovers_center_permutation(seed):
    rng = random.Random(seed)
    d = random_square(rng, FINSET)
    p = random_permuted(rng, d)
    assert d.boundary() == p.boundary()
    phi = square_iso(d, p)
    assert phi is not None and phi.is_iso()
    base = d.base
    for name in ("top", "bottom", "left", "right"):
        assert base.equal(base.compose(d.edge_map(name), phi), p.edge_map(name))


def test_square_iso_needs_equal_frames():
    v = edge_cospan()
    with pytest.raises(MismatchError):
        square_iso(sheet(), h_identity(v))
    assert not squares_isomorphic(sheet(), h_identity(v))


def test_center_size_separates_classes():
    empty = Cospan(ff(0, 0, []), ff(0, 0, []))
    small = DoubleCospan(
        empty, empty, empty, empty, FiniteSet(0),
        ff(0, 0, []), ff(0, 0, []), ff(0, 0, []), ff(0, 0, []),
    )
    padded = DoubleCospan(
        empty, empty, empty, empty, FiniteSet(1),
        ff(0, 1, []), ff(0, 1, []), ff(0, 1, []), ff(0, 1, []),
    )
    assert square_iso(small, padded) is None
    assert SquareClass(small) != SquareClass(padded)


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10_000))
def test_signature_is_iso_invariant(seed):
    rng = random.Random(seed)
    d = random_square(rng, FINSET)
    p = random_permuted(rng, d)
    assert signature(d) == signature(p)
    assert hash(SquareClass(d)) == hash(SquareClass(p))
    assert SquareClass(d) == SquareClass(p)


# --- edge actions ---


def test_act_identity_is_identity():
    s = sheet()
    assert act_h(identity_map(s.top), s, "left") == s
    assert act_v(identity_map(s.left), s, "left") == s


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10_000))
def test_act_inverse_roundtrip(seed):
    rng = random.Random(seed)
    d = random_square(rng, FINSET)
    alpha = random_bigon_onto(rng, d.top)
    moved = act_h(alpha, d, "left")
    assert moved.top == alpha.source
    assert act_h(alpha.inverse(), moved, "left") == d


def test_act_rejects_noninvertible_map():
    wide = Cospan(ff(1, 2, [0]), ff(1, 2, [0]))
    narrow = Cospan(ff(1, 1, [0]), ff(1, 1, [0]))
    fold = FiniteFunction(FiniteSet(1), FiniteSet(2), (0,))
    from dcospan import CospanMap

    m = CospanMap(narrow, wide, fold)
    with pytest.raises(MismatchError):
        act_h(m, v_identity(wide), "left")


def test_act_rejects_unknown_edge():
    with pytest.raises(MismatchError):
        act_square(sheet(), identity_map(sheet().top), "middle")


def test_act_requires_matching_edge():
    s = sheet()
    with pytest.raises(MismatchError):
        act_h(identity_map(Cospan(ff(1, 1, [0]), ff(1, 1, [0]))), s, "left")


# --- interchange ---


def test_interchange_on_constant_grid():
    s = sheet()
    v = check_interchange(s, s, s, s)
    assert v.ok
    w = v.witness
    assert isinstance(w, Cylinder) and w.is_invertible()
    assert w.source == vcompose(hcompose(s, s), hcompose(s, s))
    assert w.target == hcompose(vcompose(s, s), vcompose(s, s))


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 10_000))
def test_interchange_random_grids(seed):
    a, b, c, d = random_grid(random.Random(seed), FINSET)
    v = check_interchange(a, b, c, d)
    assert v.ok, v.detail
    assert v.witness.is_invertible()


@settings(deadline=None, max_examples=20)
@given(st.integers(0, 10_000))
def test_interchange_survives_permuting_an_entry(seed):
    rng = random.Random(seed)
    a, b, c, d = random_grid(rng, FINSET)
    a2 = random_permuted(rng, a)
    v = check_interchange(a2, b, c, d)
    assert v.ok, v.detail
    rows = vcompose(hcompose(a, b), hcompose(c, d))
    rows2 = vcompose(hcompose(a2, b), hcompose(c, d))
    assert SquareClass(rows) == SquareClass(rows2)


# --- cylinders ---


def iso_cylinder(p, q, orientation="h"):
    phi = square_iso(p, q)
    assert phi is not None
    edges = ("top", "bottom") if orientation == "h" else ("left", "right")
    return Cylinder(
        orientation,
        p,
        q,
        identity_map(p.edge(edges[0])),
        identity_map(p.edge(edges[1])),
        phi,
    )


def test_identity_cylinder_is_invertible():
    s = sheet()
    for orientation in ("h", "v"):
        c = identity_cylinder(s, orientation)
        assert c.is_invertible()
        assert c.source == s == c.target


def test_cylinder_roundtrip_composes_to_identity():
    rng = random.Random(7)
    d = random_square(rng, FINSET)
    p = random_permuted(rng, d)
    there = iso_cylinder(d, p)
    back = iso_cylinder(p, d)
    assert compose_cylinders(there, back, "along") == identity_cylinder(d, "h")


def test_transverse_composition_of_identity_cylinders():
    s = sheet()
    c = compose_cylinders(identity_cylinder(s), identity_cylinder(s), "transverse")
    assert c == identity_cylinder(hcompose(s, s))


def test_cylinder_axis_and_orientation_checks():
    s = sheet()
    with pytest.raises(MismatchError):
        compose_cylinders(identity_cylinder(s, "h"), identity_cylinder(s, "v"), "along")
    with pytest.raises(MismatchError):
        compose_cylinders(identity_cylinder(s), identity_cylinder(s), "diagonal")


def test_cylinder_rejects_core_that_moves_a_fixed_edge():
    v = edge_cospan()
    d = h_identity(v)
    swap = ff(2, 2, [1, 0])
    with pytest.raises(ValidationError) as err:
        Cylinder("h", d, d, identity_map(d.top), identity_map(d.bottom), swap)
    assert err.value.location == "left"


def test_cylinder_transpose_swaps_orientation():
    s = sheet()
    c = identity_cylinder(s, "h").transpose()
    assert c.orientation == "v"
    assert c.source == s.transpose()


# --- double cells ---


def test_double_cell_of_identity_cylinders():
    s = sheet()
    cell = DoubleCell(
        row1=identity_cylinder(s, "h"),
        row2=identity_cylinder(s, "h"),
        col1=identity_cylinder(s, "v"),
        col2=identity_cylinder(s, "v"),
    )
    assert cell.source == s == cell.target
    assert s.base.equal(cell.core, s.base.identity(s.center))


def test_double_cell_over_a_center_permutation():
    rng = random.Random(11)
    d = random_square(rng, FINSET)
    p = random_permuted(rng, d)
    vcyl = iso_cylinder(d, p, "v")
    cell = DoubleCell(
        row1=identity_cylinder(d, "h"),
        row2=identity_cylinder(p, "h"),
        col1=vcyl,
        col2=vcyl,
    )
    assert cell.source == d and cell.target == p


def test_double_cell_rejects_misoriented_rows():
    s = sheet()
    with pytest.raises(ValidationError):
        DoubleCell(
            row1=identity_cylinder(s, "v"),
            row2=identity_cylinder(s, "v"),
            col1=identity_cylinder(s, "v"),
            col2=identity_cylinder(s, "v"),
        )


def test_double_cell_rejects_mismatched_corners():
    s = sheet()
    other = h_identity(s.left)
    with pytest.raises(ValidationError):
        DoubleCell(
            row1=identity_cylinder(s, "h"),
            row2=identity_cylinder(other, "h"),
            col1=identity_cylinder(s, "v"),
            col2=identity_cylinder(s, "v"),
        )
