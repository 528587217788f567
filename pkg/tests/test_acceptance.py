"""End-to-end acceptance battery.

One test per numbered criterion; each wraps its body in the criterion
context manager from conftest so the terminal summary carries one
PASS/FAIL line per criterion, and asserts its own wall-clock budget.
"""

import itertools
import random
import time

import dcospan.cospans as cospans_mod
from dcospan import (
    FINGRAPH,
    FINSET,
    Cospan,
    CospanMap,
    Cylinder,
    FiniteFunction,
    FiniteSet,
    SquareClass,
    ValidationError,
    VerityStructure,
    catalog,
    check_bicat_axioms,
    check_composability_condition,
    check_interchange,
    check_verity_axioms,
    class_hcompose,
    build_2cosp0,
    build_DC0,
    compose_cospans,
    euler_characteristic,
    extract_bicategory,
    generate,
    glue,
    gluing_pairs,
    load,
    pentagon,
    save,
    triangle,
    validate_double_cospan,
    vcomp,
)
from dcospan.double import DoubleCospan
from dcospan.generate import (
    DiagramSampler,
    chain_poset_presentation,
    cyclic_bicat_presentation,
    random_cospan_chain,
    random_grid,
    random_h_pair,
    random_permuted,
)

from conftest import criterion
from helpers import CatalogSampler, square_fields, unchecked_square

import pytest


def ff(a, b, table):
    return FiniteFunction(FiniteSet(a), FiniteSet(b), tuple(table))


def empty_feet(apex):
    return Cospan(ff(0, apex, []), ff(0, apex, []))


def sheet():
    e = Cospan(ff(1, 2, [0]), ff(1, 2, [1]))
    return DoubleCospan(
        e, e, e, e, FiniteSet(4),
        ff(2, 4, [0, 1]), ff(2, 4, [2, 3]), ff(2, 4, [0, 2]), ff(2, 4, [1, 3]),
    )


def test_criterion_01_pushout_universal_property():
    with criterion(1, "pushout universal property"):
        t0 = time.perf_counter()
        spans = cocones = 0
        for a in range(4):
            for b in range(4):
                for c in range(4):
                    for ftab in itertools.product(range(b), repeat=a):
                        f = ff(a, b, ftab)
                        for gtab in itertools.product(range(c), repeat=a):
                            g = ff(a, c, gtab)
                            spans += 1
                            po = FINSET.pushout(f, g)
                            li, ri = po.left_inj.table, po.right_inj.table
                            n = po.apex.size
                            for q in range(4):
                                # bucket every map out of the apex by the
                                # cocone it induces: existence and
                                # uniqueness become bucket size == 1
                                buckets = {}
                                for mtab in itertools.product(range(q), repeat=n):
                                    key = (
                                        tuple(mtab[x] for x in li),
                                        tuple(mtab[x] for x in ri),
                                    )
                                    buckets.setdefault(key, []).append(mtab)
                                for utab in itertools.product(range(q), repeat=b):
                                    fu = tuple(utab[ftab[i]] for i in range(a))
                                    for vtab in itertools.product(range(q), repeat=c):
                                        if fu != tuple(vtab[gtab[i]] for i in range(a)):
                                            continue
                                        cocones += 1
                                        sols = buckets.get((utab, vtab), ())
                                        assert len(sols) == 1, (ftab, gtab, utab, vtab)
                                        m = FINSET.mediating(
                                            po, ff(b, q, utab), ff(c, q, vtab)
                                        )
                                        assert m.table == sols[0]
        assert spans == 1544 and cocones > 50_000
        assert time.perf_counter() - t0 < 10


def test_criterion_02_pentagon():
    with criterion(2, "pentagon"):
        t0 = time.perf_counter()
        for seed in range(500):
            f, g, h, j = random_cospan_chain(random.Random(seed), FINSET, 4, max_size=4)
            v = pentagon(f, g, h, j)
            assert v.ok, (seed, v.detail)
        assert time.perf_counter() - t0 < 30


def test_criterion_03_unitor_triangle():
    with criterion(3, "unitor triangle"):
        t0 = time.perf_counter()
        for seed in range(500):
            f, g = random_cospan_chain(random.Random(seed), FINSET, 2, max_size=4)
            v = triangle(f, g)
            assert v.ok, (seed, v.detail)
        assert time.perf_counter() - t0 < 10


def test_criterion_04_interchange():
    with criterion(4, "interchange"):
        t0 = time.perf_counter()
        for seed in range(200):
            a, b, c, d = random_grid(random.Random(seed), FINSET, max_size=3)
            v = check_interchange(a, b, c, d)
            assert v.ok, (seed, v.detail)
            w = v.witness
            assert isinstance(w, Cylinder) and w.is_invertible(), seed
            assert SquareClass(w.source) == SquareClass(w.target), seed
        assert time.perf_counter() - t0 < 60


def test_criterion_05_representative_independence():
    with criterion(5, "representative independence"):
        t0 = time.perf_counter()
        agreed = 0
        for seed in range(100):
            rng = random.Random(seed)
            a, b = random_h_pair(rng, FINSET)
            a2 = random_permuted(rng, a)
            assert a2.boundary() == a.boundary()
            lhs = class_hcompose(SquareClass(a2), SquareClass(b))
            rhs = class_hcompose(SquareClass(a), SquareClass(b))
            assert lhs == rhs, seed
            agreed += 1
        assert agreed == 100
        assert time.perf_counter() - t0 < 30


LAWS_UNDER_TEST = (
    "corner-compatibility",
    "interchange",
    "action-interchange",
    "action-composition",
    "action-independence",
    "associator-action",
    "unitor-action",
)


def test_criterion_06_square_calculus_laws():
    with criterion(6, "square-calculus laws"):
        t0 = time.perf_counter()
        batteries = (
            (FINSET, DiagramSampler(base=FINSET, seed=0)),
            (FINGRAPH, DiagramSampler(base=FINGRAPH, seed=0, max_size=2, pad=1)),
        )
        for base, sampler in batteries:
            report = check_verity_axioms(build_2cosp0(base), sampler, rounds=200)
            for law in LAWS_UNDER_TEST:
                result = report.results[law]
                assert result.checked >= 200, (base.name, law, result.checked)
                assert not result.failures, (base.name, law, result.failures[0].detail)
        assert time.perf_counter() - t0 < 120


def test_criterion_07_miswiring_detection(monkeypatch):
    with criterion(7, "miswiring detection"):
        t0 = time.perf_counter()

        # 1. an associator that silently swaps two apex points in one entry
        f = g = empty_feet(1)
        h, j = empty_feet(1), empty_feet(2)
        hj = compose_cospans(h, j)
        honest = cospans_mod.associator

        def crooked(x, y, z):
            cell = honest(x, y, z)
            if (x, y, z) == (f, g, hj):
                n = cell.target.apex.size
                tab = list(range(n))
                tab[0], tab[1] = tab[1], tab[0]
                cell = vcomp(cell, CospanMap(cell.target, cell.target, ff(n, n, tab)))
            return cell

        monkeypatch.setattr(cospans_mod, "associator", crooked)
        verdict = pentagon(f, g, h, j)
        monkeypatch.undo()
        assert not verdict.ok
        two_step, three_step = verdict.witness
        diffs = [
            (i, x, y)
            for i, (x, y) in enumerate(zip(two_step.map.table, three_step.map.table))
            if x != y
        ]
        assert diffs, "paths must disagree on a concrete apex point"

        # 2. an action that replaces the edge but forgets to rewrite its map
        class SkipsSubstitution(VerityStructure):
            def _act(self, rep, alpha, edge):
                fields = square_fields(rep)
                fields[edge] = alpha.source
                return unchecked_square(**fields)

        report = check_verity_axioms(
            SkipsSubstitution(FINSET), DiagramSampler(seed=0), rounds=12
        )
        corner_fails = report.results["corner-compatibility"].failures
        assert corner_fails
        location, disagreement = corner_fails[0].witness
        assert disagreement[0] == "element" and len(disagreement) == 4

        # 3. a square assembled without the commuting check
        fields = square_fields(sheet())
        fields["from_top"] = ff(2, 4, [0, 0])
        broken = unchecked_square(**fields)
        with pytest.raises(ValidationError) as err:
            validate_double_cospan(broken)
        assert err.value.location == "top-right"
        assert err.value.witness == ("element", 0, 0, 1)

        # 4. a duplicated degenerate filler
        p = chain_poset_presentation(3)
        h_ids = set(p.h_id.values())
        victim = next(
            square
            for square in p.squares.values()
            if square[1] in h_ids and square[0] not in h_ids
        )
        p.squares["dup"] = victim
        audit = check_composability_condition(p)
        assert not audit.ok
        bad = audit.failures()[0]
        assert "2 fillers" in bad.detail
        assert "dup" in bad.witness[2]

        # 5. a unit cell whose inverse was dropped
        q = cyclic_bicat_presentation(3)
        q.inv_cell.pop(q.lunit["g1"])
        report = check_bicat_axioms(q)
        assert not report.ok
        unit_fails = report.results["unit-laws"].failures
        assert unit_fails and unit_fails[0].witness == "g1"
        assert "has no recorded inverse" in unit_fails[0].detail

        assert time.perf_counter() - t0 < 60


def test_criterion_08_globular_extraction():
    with criterion(8, "globular extraction"):
        t0 = time.perf_counter()
        res = extract_bicategory(max_object=2, max_apex=3, seed=0)
        report = check_bicat_axioms(res.presentation)
        assert report.ok, [v.detail for v in report.failures()]
        p = res.presentation
        assert len(res.cells) > 0
        for name, cls in res.cells.items():
            assert res.morphisms[p.cell_src[name]] == cls.rep.top, name
            assert res.morphisms[p.cell_tgt[name]] == cls.rep.bottom, name
        assert time.perf_counter() - t0 < 120


def test_criterion_09_poset_one_category():
    with criterion(9, "poset one-category"):
        t0 = time.perf_counter()
        p = chain_poset_presentation(3)
        assert check_composability_condition(p).ok
        cat, report = build_DC0(p)
        assert report.ok, [v.detail for v in report.failures()]
        assert len(cat.objects) == 3 and len(cat.morphisms) == 9
        # mixed composites and mixed associativity, spot-checked on top of
        # the report's exhaustive triple sweep
        assert cat.comp[("h:0<=1", "v:1<=2")] == "v:0<=2"
        assert cat.comp[("v:0<=1", "h:1<=2")] == "h:0<=2"
        left = cat.comp[(cat.comp[("1_0", "h:0<=1")], "v:1<=2")]
        right = cat.comp[("1_0", cat.comp[("h:0<=1", "v:1<=2")])]
        assert left == right == "v:0<=2"
        assert time.perf_counter() - t0 < 10


def test_criterion_10_cobordism_gluing():
    with criterion(10, "cobordism gluing"):
        t0 = time.perf_counter()
        entries = catalog()
        pairs = gluing_pairs(entries)
        assert len(pairs) >= 10
        for na, nb, direction in pairs:
            a, b = entries[na], entries[nb]
            shared = a.square.right.apex if direction == "h" else a.square.bottom.apex
            glued = glue(a, b, direction)
            assert glued.chi() == a.chi() + b.chi() - euler_characteristic(shared), (
                na,
                nb,
                direction,
            )
        report = check_verity_axioms(
            build_2cosp0(FINGRAPH), CatalogSampler(seed=0), rounds=25
        )
        assert report.ok, [v.detail for v in report.failures()]
        assert time.perf_counter() - t0 < 30


DOCUMENT_KINDS = (
    "cospan",
    "cospan_map",
    "double_cospan",
    "cylinder",
    "double_cell",
    "bicat_presentation",
    "doublecat_presentation",
)


def test_criterion_11_document_round_trip(tmp_path):
    with criterion(11, "document round-trip"):
        t0 = time.perf_counter()
        written = 0
        for kind in DOCUMENT_KINDS:
            for seed in range(15):
                base = FINSET if seed % 2 == 0 else FINGRAPH
                value = generate(kind, base=base, seed=seed)
                path = tmp_path / f"{kind}-{seed}.json"
                save(value, path)
                assert load(path) == value, (kind, seed)
                written += 1
        assert written == 105
        assert time.perf_counter() - t0 < 10
