"""Combinatorial cobordism squares: validation, catalog, gluing, Euler counts."""

import pytest

from dcospan import (
    CombCobordism,
    Cospan,
    FINGRAPH,
    FiniteGraph,
    FiniteSet,
    FiniteFunction,
    GraphHom,
    MismatchError,
    ValidationError,
    build_2cosp0,
    catalog,
    check_verity_axioms,
    euler_characteristic,
    glue,
    glue_h,
    glue_v,
    gluing_pairs,
    h_identity,
    identity_cospan,
    standard_library,
    validate_cobordism,
)
from dcospan.cobordism import INTERVAL, POINT

from helpers import CatalogSampler

EXPECTED_CHI = {
    "point-square": 1,
    "h-strip": 1,
    "v-strip": 1,
    "sheet": 0,
    "cup": 0,
    "elbow": 0,
    "elbow2": 0,
    "tube": 0,
    "pants": -2,
}


def test_euler_characteristic_examples():
    assert euler_characteristic(FiniteGraph(0, 0, (), ())) == 0
    assert euler_characteristic(INTERVAL) == 1
    three_cycle = FiniteGraph(3, 3, (0, 1, 2), (1, 2, 0))
    assert euler_characteristic(three_cycle) == 0


def test_catalog_chi_values():
    entries = catalog()
    assert set(entries) == set(EXPECTED_CHI)
    for name, cob in entries.items():
        assert cob.chi() == EXPECTED_CHI[name], name
        assert cob.dimension == 2


def test_standard_library_is_the_catalog():
    assert standard_library is catalog
    # construction is deterministic
    assert catalog() == catalog()


def test_gluing_pairs_cover_the_catalog():
    pairs = gluing_pairs(catalog())
    assert len(pairs) == 55
    assert ("elbow", "elbow2", "h") in pairs
    assert ("tube", "tube", "v") in pairs
    assert ("sheet", "sheet", "h") in pairs


def test_chi_additive_over_every_catalog_gluing():
    entries = catalog()
    for na, nb, direction in gluing_pairs(entries):
        a, b = entries[na], entries[nb]
        shared = a.square.right.apex if direction == "h" else a.square.bottom.apex
        glued = glue(a, b, direction)
        assert glued.chi() == a.chi() + b.chi() - euler_characteristic(shared), (
            na,
            nb,
            direction,
        )


def test_elbows_glue_into_a_bent_strip():
    entries = catalog()
    bent = glue_h(entries["elbow"], entries["elbow2"])
    assert bent.chi() == -1  # 0 + 0 - chi(interval)


def test_pants_narrow_the_double_circle():
    entries = catalog()
    stack = glue_v(entries["pants"], entries["tube"])
    assert stack.chi() == -2
    assert stack.square.top == entries["pants"].square.top


def test_glue_dispatch():
    entries = catalog()
    a, b = entries["sheet"], entries["sheet"]
    assert glue(a, b, "h") == glue_h(a, b)
    assert glue(a, b, "v") == glue_v(a, b)
    with pytest.raises(MismatchError):
        glue(a, b, "diagonal")


def test_transpose_swaps_the_strips():
    entries = catalog()
    assert entries["h-strip"].transpose() == entries["v-strip"]
    assert entries["sheet"].transpose().chi() == 0


def test_feet_overlap_is_rejected():
    both_ends_at_zero = Cospan(
        GraphHom(POINT, INTERVAL, (0,), ()),
        GraphHom(POINT, INTERVAL, (0,), ()),
    )
    with pytest.raises(ValidationError) as err:
        CombCobordism(h_identity(both_ends_at_zero))
    assert err.value.location == "left"
    assert err.value.witness == ("vertex", 0)


def test_noninjective_leg_is_rejected():
    two_points = FiniteGraph(2, 0, (), ())
    folded = Cospan(
        GraphHom(two_points, POINT, (0, 0), ()),
        GraphHom(two_points, POINT, (0, 0), ()),
    )
    with pytest.raises(ValidationError) as err:
        CombCobordism(h_identity(folded))
    assert "not injective" in str(err.value)


def test_noninjective_center_map_is_rejected():
    loop = FiniteGraph(1, 1, (0,), (0,))
    pt = identity_cospan(POINT)
    iv = Cospan(GraphHom(POINT, INTERVAL, (0,), ()), GraphHom(POINT, INTERVAL, (1,), ()))
    from dcospan import DoubleCospan

    collapse = DoubleCospan(
        top=iv,
        bottom=pt,
        left=pt,
        right=pt,
        center=loop,
        from_top=GraphHom(INTERVAL, loop, (0, 0), (0,)),
        from_bottom=GraphHom(POINT, loop, (0,), ()),
        from_left=GraphHom(POINT, loop, (0,), ()),
        from_right=GraphHom(POINT, loop, (0,), ()),
    )
    with pytest.raises(ValidationError) as err:
        validate_cobordism(collapse)
    assert err.value.location == "from_top"


def test_cobordisms_must_live_over_graphs():
    i = identity_cospan(FiniteSet(1))
    with pytest.raises(ValidationError):
        CombCobordism(h_identity(i))


def test_catalog_squares_pass_the_law_battery():
    report = check_verity_axioms(
        build_2cosp0(FINGRAPH), CatalogSampler(seed=0), rounds=20
    )
    assert report.ok, [v.detail for v in report.failures()]
