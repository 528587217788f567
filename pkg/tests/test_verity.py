"""The square-calculus law battery and fragment action conditions."""

import random

import pytest

from dcospan import (
    FINGRAPH,
    FINSET,
    Fragment,
    FillerRecord,
    MismatchError,
    SquareClass,
    ValidationError,
    act_h,
    build_2cosp0,
    build_VD,
    check_action_conditions,
    check_verity_axioms,
    class_hcompose,
    class_vcompose,
    hcompose,
    identity_map,
    vcompose,
)
from dcospan.verity import find_filler_core
from dcospan.generate import (
    DiagramSampler,
    random_bigon_onto,
    random_h_pair,
    random_permuted,
    random_square,
)

LAWS = {
    "action-composition",
    "action-independence",
    "action-interchange",
    "associator-action",
    "corner-compatibility",
    "interchange",
    "representative-independence",
    "row-column-coherence",
    "star-associativity",
    "strict-associativity",
    "strict-units",
    "unitor-action",
}


def test_law_battery_names():
    report = check_verity_axioms(build_2cosp0(FINSET), DiagramSampler(seed=1), rounds=3)
    assert set(report.results) == LAWS
    assert report.ok


def test_law_battery_finset():
    V = build_2cosp0(FINSET)
    report = check_verity_axioms(V, DiagramSampler(base=FINSET, seed=2), rounds=40)
    assert report.ok, [v.detail for v in report.failures()]
    for name in LAWS:
        assert report.results[name].checked >= 1


def test_law_battery_fingraph():
    V = build_2cosp0(FINGRAPH)
    sampler = DiagramSampler(base=FINGRAPH, seed=3, max_size=2, pad=1)
    report = check_verity_axioms(V, sampler, rounds=15)
    assert report.ok, [v.detail for v in report.failures()]


def test_structure_ops_agree_with_module_level():
    V = build_2cosp0(FINSET)
    rng = random.Random(4)
    a, b = random_h_pair(rng, FINSET)
    A, B = V.square(a), V.square(b)
    assert V.hcomp_sq(A, B) == class_hcompose(A, B) == SquareClass(hcompose(a, b))
    alpha = random_bigon_onto(rng, a.top)
    assert V.act_h(alpha, A, "left") == SquareClass(act_h(alpha, a, "left"))
    assert V.h_unit(a.left).rep.left == a.left
    assert V.v_unit(a.top).rep.top == a.top


def test_composition_ignores_choice_of_representative():
    rng = random.Random(5)
    for _ in range(10):
        a, b = random_h_pair(rng, FINSET)
        a2, b2 = random_permuted(rng, a), random_permuted(rng, b)
        assert class_hcompose(SquareClass(a2), SquareClass(b2)) == class_hcompose(
            SquareClass(a), SquareClass(b)
        )


def test_vertical_class_composition():
    rng = random.Random(6)
    d = random_square(rng, FINSET)
    from dcospan import v_identity

    unit = SquareClass(v_identity(d.bottom))
    assert class_vcompose(SquareClass(d), unit) == SquareClass(d)
    assert class_vcompose(SquareClass(d), unit).rep == vcompose(d, unit.rep)


# --- fragments and the action conditions ---


def test_generated_fragment_passes_action_conditions():
    frag = DiagramSampler(seed=7).fragment()
    report = check_action_conditions(frag)
    assert report.ok, [v.detail for v in report.failures()]
    assert {"filler-existence", "filler-uniqueness", "declared-fillers"} <= set(
        report.results
    )


def test_generated_fragment_on_graphs():
    frag = DiagramSampler(base=FINGRAPH, seed=8, max_size=2, pad=1).fragment(
        n_squares=1
    )
    assert check_action_conditions(frag).ok


def test_fragment_without_actions_is_noted():
    s = random_square(random.Random(9), FINSET)
    report = check_action_conditions(Fragment.of([s], []))
    assert report.ok
    assert "fragment admits no actions; nothing to check" in report.notes


def test_identity_bigon_fragment():
    s = random_square(random.Random(10), FINSET)
    alpha = identity_map(s.top)
    filler = FillerRecord(s, alpha, "top", s, s.base.identity(s.center))
    report = check_action_conditions(Fragment.of([s], [alpha], [filler]))
    assert report.ok
    assert report.results["declared-fillers"].checked == 1


def test_find_filler_core_solves_substitution():
    rng = random.Random(11)
    s = random_square(rng, FINSET)
    alpha = random_bigon_onto(rng, s.left)
    acted = act_h(identity_map(s.top), s, "left")  # sanity: identity action
    assert acted == s
    from dcospan import act_v

    g = act_v(alpha, s, "left")
    core = find_filler_core(g, s, alpha, "left")
    assert core is not None and core.is_iso()
    assert find_filler_core(s, s, alpha, "left") is None  # boundary not acted


def test_build_VD_resolves_actions_through_fillers():
    sampler = DiagramSampler(seed=12)
    frag = sampler.fragment()
    VD = build_VD(frag)
    V = build_2cosp0(FINSET)
    for record in frag.fillers:
        looked_up = VD._act(record.square, record.alpha, record.edge)
        assert looked_up in frag.squares
        assert VD.act(
            SquareClass(record.square), record.alpha, record.edge
        ) == V.act(SquareClass(record.square), record.alpha, record.edge)


def test_build_VD_rejects_fragment_missing_a_filler():
    rng = random.Random(13)
    while True:
        s = random_square(rng, FINSET)
        alpha = random_bigon_onto(rng, s.top)
        if alpha.source != s.top:
            break
    with pytest.raises(ValidationError) as err:
        build_VD(Fragment.of([s], [alpha]))
    assert err.value.location == "filler-existence"


def test_build_VD_needs_a_base_for_empty_fragments():
    with pytest.raises(MismatchError):
        build_VD(Fragment.of([], []))


def test_fragment_verity_passes_battery_on_its_own_squares():
    # closure under the declared bigons makes every sampled action resolvable
    sampler = DiagramSampler(seed=14)
    frag = sampler.fragment(n_squares=1, bigons_per_square=2)
    VD = build_VD(frag)
    record = frag.fillers[0]
    A = SquareClass(record.square)
    acted = VD.act(A, record.alpha, record.edge)
    # acting back along the inverse returns to the original class
    back = VD.act(acted, record.alpha.inverse(), record.edge)
    assert back == A
