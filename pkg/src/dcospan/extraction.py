"""Flattening the square calculus into one-directional structures.

Squares with identity columns are globular: 2-cells between parallel
cospans. Every square folds into one by composing its top row with its
right column and its left column with its bottom row; invertible cospan
maps embed as globular squares. extract_bicategory enumerates the
cospans under a size bound, builds the globular cells reachable there,
and tabulates the operations as a string-keyed presentation whose
axioms are then checked over the declared entries.

The second half implements the mixed one-category construction: a
double-category presentation whose square table has unique fillers
turns its horizontal and vertical morphisms into a single category.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .base import FINSET, FiniteFunction, FiniteSet
from .cospans import (
    Cospan,
    CospanMap,
    associator,
    compose_cospans,
    composition_pushout,
    identity_cospan,
    left_unitor,
    right_unitor,
)
from .double import (
    DoubleCospan,
    SquareClass,
    hcompose,
    v_identity,
    vcompose,
)
from .errors import ValidationError
from .report import AxiomReport, Verdict


def is_globular(d: DoubleCospan) -> bool:
    """True when both columns are identity cospans."""
    return d.left.is_identity() and d.right.is_identity()


def cell_of_map(gamma: CospanMap) -> DoubleCospan:
    """Embed a cospan map u => v as a globular square.

    The center is v's apex; the top map is gamma itself and the bottom
    the identity, so the class remembers exactly the map.
    """
    base = gamma.base
    v = gamma.target
    return DoubleCospan(
        top=gamma.source,
        bottom=v,
        left=identity_cospan(v.left_foot),
        right=identity_cospan(v.right_foot),
        center=v.apex,
        from_top=gamma.map,
        from_bottom=base.identity(v.apex),
        from_left=v.left_leg,
        from_right=v.right_leg,
    )


def fold(d: DoubleCospan) -> DoubleCospan:
    """Fold a square into a globular one between its two corner paths.

    The result's top is top;right, its bottom is left;bottom, and the
    center is unchanged; the new edge-to-center maps are the mediating
    maps of the corner pushouts.
    """
    base = d.base
    po_tr = composition_pushout(d.top, d.right)
    po_lb = composition_pushout(d.left, d.bottom)
    new_top = compose_cospans(d.top, d.right)
    new_bottom = compose_cospans(d.left, d.bottom)
    from_top = base.mediating(po_tr, d.from_top, d.from_right)
    from_bottom = base.mediating(po_lb, d.from_left, d.from_bottom)
    return DoubleCospan(
        top=new_top,
        bottom=new_bottom,
        left=identity_cospan(d.top.left_foot),
        right=identity_cospan(d.bottom.right_foot),
        center=d.center,
        from_top=from_top,
        from_bottom=from_bottom,
        from_left=base.compose(d.top.left_leg, d.from_top),
        from_right=base.compose(d.bottom.right_leg, d.from_bottom),
    )


def cell_vcomp(a: DoubleCospan, b: DoubleCospan) -> DoubleCospan:
    """Stack globular cells: a: u => v over b: v => w."""
    return vcompose(a, b)


def cell_hcomp(a: DoubleCospan, b: DoubleCospan) -> DoubleCospan:
    """Put globular cells side by side along a shared foot."""
    return hcompose(a, b)


def identity_cell(u: Cospan) -> DoubleCospan:
    return v_identity(u)


# ---------------------------------------------------------------------------
# presentations


@dataclass
class BicatPresentation:
    """String-keyed tables presenting a bicategory, possibly partially.

    All composition tables are partial: an absent key means the entry
    is undeclared at this bound, and the axiom checker skips instances
    that need it.
    """

    objects: tuple
    mor_src: dict
    mor_tgt: dict
    cell_src: dict
    cell_tgt: dict
    id_mor: dict
    id_cell: dict
    comp_mor: dict
    vcomp_cell: dict
    hcomp_cell: dict
    assoc: dict
    lunit: dict
    runit: dict
    inv_cell: dict

    def morphisms(self):
        return self.mor_src.keys()

    def cells(self):
        return self.cell_src.keys()


def co_presentation(p: BicatPresentation) -> BicatPresentation:
    """Reverse every 2-cell: swap cell endpoints and vertical order.

    Coherence cells are replaced by their declared inverses; entries
    whose inverse is undeclared are dropped.
    """

    def inv_table(table):
        return {k: p.inv_cell[c] for k, c in table.items() if c in p.inv_cell}

    return BicatPresentation(
        objects=p.objects,
        mor_src=dict(p.mor_src),
        mor_tgt=dict(p.mor_tgt),
        cell_src=dict(p.cell_tgt),
        cell_tgt=dict(p.cell_src),
        id_mor=dict(p.id_mor),
        id_cell=dict(p.id_cell),
        comp_mor=dict(p.comp_mor),
        vcomp_cell={(b, a): c for (a, b), c in p.vcomp_cell.items()},
        hcomp_cell=dict(p.hcomp_cell),
        assoc=inv_table(p.assoc),
        lunit=inv_table(p.lunit),
        runit=inv_table(p.runit),
        inv_cell={b: a for a, b in p.inv_cell.items()},
    )


def check_bicat_axioms(p: BicatPresentation) -> AxiomReport:
    """Check the bicategory laws over the declared table entries.

    Instances that need an undeclared entry are counted as skipped, so
    a presentation cut off at a size bound reports honestly instead of
    failing.
    """
    report = AxiomReport()
    typing = report.law("typing")
    cat = report.law("category-laws")
    funct = report.law("functoriality")
    pent = report.law("pentagon")
    tri = report.law("triangle")
    units = report.law("unit-laws")
    inv = report.law("invertibility")

    def t_ok(cond, detail, witness=None):
        typing.record(
            Verdict.passed("typing") if cond else Verdict.failed("typing", detail, witness)
        )

    objects = set(p.objects)
    for f in p.morphisms():
        t_ok(
            p.mor_src[f] in objects and p.mor_tgt[f] in objects,
            f"morphism {f} has unknown endpoints",
            f,
        )
    for c in p.cells():
        u, v = p.cell_src[c], p.cell_tgt[c]
        t_ok(
            u in p.mor_src
            and v in p.mor_src
            and p.mor_src[u] == p.mor_src[v]
            and p.mor_tgt[u] == p.mor_tgt[v],
            f"cell {c} is not between parallel morphisms",
            c,
        )
    for x, f in p.id_mor.items():
        t_ok(p.mor_src[f] == x and p.mor_tgt[f] == x, f"identity of {x} is not an endomorphism", x)
    for f, c in p.id_cell.items():
        t_ok(
            p.cell_src[c] == f and p.cell_tgt[c] == f,
            f"identity cell of {f} has wrong endpoints",
            f,
        )
    for (f, g), h in p.comp_mor.items():
        t_ok(
            p.mor_tgt[f] == p.mor_src[g]
            and p.mor_src[h] == p.mor_src[f]
            and p.mor_tgt[h] == p.mor_tgt[g],
            f"composite {f};{g} -> {h} mistyped",
            (f, g),
        )
    for (a, b), c in p.vcomp_cell.items():
        t_ok(
            p.cell_tgt[a] == p.cell_src[b]
            and p.cell_src[c] == p.cell_src[a]
            and p.cell_tgt[c] == p.cell_tgt[b],
            f"stacked cell {a}*{b} -> {c} mistyped",
            (a, b),
        )
    for (a, b), c in p.hcomp_cell.items():
        key_src = (p.cell_src[a], p.cell_src[b])
        key_tgt = (p.cell_tgt[a], p.cell_tgt[b])
        if key_src not in p.comp_mor or key_tgt not in p.comp_mor:
            typing.skipped += 1
            continue
        t_ok(
            p.cell_src[c] == p.comp_mor[key_src] and p.cell_tgt[c] == p.comp_mor[key_tgt],
            f"side-by-side cell {a}|{b} -> {c} mistyped",
            (a, b),
        )
    for (f, g, h), a in p.assoc.items():
        fg = p.comp_mor.get((f, g))
        gh = p.comp_mor.get((g, h))
        if fg is None or gh is None:
            typing.skipped += 1
            continue
        lhs = p.comp_mor.get((fg, h))
        rhs = p.comp_mor.get((f, gh))
        if lhs is None or rhs is None:
            typing.skipped += 1
            continue
        t_ok(
            p.cell_src[a] == lhs and p.cell_tgt[a] == rhs,
            f"rebracketing cell for ({f},{g},{h}) mistyped",
            (f, g, h),
        )
    for f, c in p.lunit.items():
        key = (f, p.id_mor[p.mor_tgt[f]])
        if key not in p.comp_mor:
            typing.skipped += 1
            continue
        t_ok(
            p.cell_src[c] == p.comp_mor[key] and p.cell_tgt[c] == f,
            f"unit absorption cell for {f} (identity after) mistyped",
            f,
        )
    for f, c in p.runit.items():
        key = (p.id_mor[p.mor_src[f]], f)
        if key not in p.comp_mor:
            typing.skipped += 1
            continue
        t_ok(
            p.cell_src[c] == p.comp_mor[key] and p.cell_tgt[c] == f,
            f"unit absorption cell for {f} (identity before) mistyped",
            f,
        )
    for a, b in p.inv_cell.items():
        t_ok(
            p.cell_src[b] == p.cell_tgt[a] and p.cell_tgt[b] == p.cell_src[a],
            f"inverse of {a} has wrong endpoints",
            a,
        )

    # strict category laws of cell stacking, over declared entries
    for c in p.cells():
        up = (p.id_cell.get(p.cell_src[c]), c)
        if up in p.vcomp_cell:
            cat.record(
                Verdict.passed("category-laws")
                if p.vcomp_cell[up] == c
                else Verdict.failed(
                    "category-laws", f"identity cell before {c} does not vanish", c
                )
            )
        else:
            cat.skipped += 1
        down = (c, p.id_cell.get(p.cell_tgt[c]))
        if down in p.vcomp_cell:
            cat.record(
                Verdict.passed("category-laws")
                if p.vcomp_cell[down] == c
                else Verdict.failed(
                    "category-laws", f"identity cell after {c} does not vanish", c
                )
            )
        else:
            cat.skipped += 1
    by_first = {}
    for (a, b), ab in p.vcomp_cell.items():
        by_first.setdefault(a, []).append((b, ab))
    for (a, b), ab in p.vcomp_cell.items():
        for c, bc in by_first.get(b, ()):
            left = p.vcomp_cell.get((ab, c))
            right = p.vcomp_cell.get((a, bc))
            if left is None or right is None:
                cat.skipped += 1
                continue
            cat.record(
                Verdict.passed("category-laws")
                if left == right
                else Verdict.failed(
                    "category-laws",
                    f"stacking ({a},{b},{c}) is not associative",
                    (a, b, c),
                )
            )

    # functoriality of side-by-side composition
    for (f, g), faces in p.comp_mor.items():
        key = (p.id_cell.get(f), p.id_cell.get(g))
        if key in p.hcomp_cell and faces in p.id_cell:
            funct.record(
                Verdict.passed("functoriality")
                if p.hcomp_cell[key] == p.id_cell[faces]
                else Verdict.failed(
                    "functoriality",
                    f"identity cells of {f},{g} do not compose to the identity",
                    (f, g),
                )
            )
        else:
            funct.skipped += 1
    h_by_tgt = {}
    for (a, a2), ha in p.hcomp_cell.items():
        h_by_tgt.setdefault((p.cell_tgt[a], p.cell_tgt[a2]), []).append((a, a2, ha))
    for (b, b2), hb in p.hcomp_cell.items():
        for a, a2, ha in h_by_tgt.get((p.cell_src[b], p.cell_src[b2]), ()):
            vl = p.vcomp_cell.get((a, b))
            vr = p.vcomp_cell.get((a2, b2))
            if vl is None or vr is None:
                funct.skipped += 1
                continue
            lhs = p.hcomp_cell.get((vl, vr))
            rhs = p.vcomp_cell.get((ha, hb))
            if lhs is None or rhs is None:
                funct.skipped += 1
                continue
            funct.record(
                Verdict.passed("functoriality")
                if lhs == rhs
                else Verdict.failed(
                    "functoriality",
                    "stack-then-join differs from join-then-stack",
                    ((a, a2), (b, b2)),
                )
            )

    # pentagon over quadruples whose entries are all declared
    comp_preimages = {}
    for (f, g), h in p.comp_mor.items():
        comp_preimages.setdefault(h, []).append((f, g))
    for (fg, h, j), a1 in p.assoc.items():
        for f, g in comp_preimages.get(fg, ()):
            gh = p.comp_mor.get((g, h))
            hj = p.comp_mor.get((h, j))
            if gh is None or hj is None:
                pent.skipped += 1
                continue
            a2 = p.assoc.get((f, g, hj))
            a3 = p.assoc.get((f, g, h))
            a4 = p.assoc.get((f, gh, j))
            a5 = p.assoc.get((g, h, j))
            idf, idj = p.id_cell.get(f), p.id_cell.get(j)
            if None in (a2, a3, a4, a5, idf, idj):
                pent.skipped += 1
                continue
            left = p.vcomp_cell.get((a1, a2))
            s1 = p.hcomp_cell.get((a3, idj))
            s3 = p.hcomp_cell.get((idf, a5))
            if left is None or s1 is None or s3 is None:
                pent.skipped += 1
                continue
            s12 = p.vcomp_cell.get((s1, a4))
            right = p.vcomp_cell.get((s12, s3)) if s12 is not None else None
            if right is None:
                pent.skipped += 1
                continue
            pent.record(
                Verdict.passed("pentagon")
                if left == right
                else Verdict.failed(
                    "pentagon",
                    f"pentagon fails on ({f},{g},{h},{j}): {left} != {right}",
                    (f, g, h, j),
                )
            )

    # triangle over composable pairs with declared data
    for f in p.lunit:
        for g in p.runit:
            if p.mor_tgt[f] != p.mor_src[g]:
                continue
            y = p.mor_tgt[f]
            mid = p.id_mor.get(y)
            if mid is None:
                tri.skipped += 1
                continue
            a = p.assoc.get((f, mid, g))
            idf, idg = p.id_cell.get(f), p.id_cell.get(g)
            if a is None or idf is None or idg is None:
                tri.skipped += 1
                continue
            s1 = p.hcomp_cell.get((idf, p.runit[g]))
            s2 = p.hcomp_cell.get((p.lunit[f], idg))
            if s1 is None or s2 is None:
                tri.skipped += 1
                continue
            left = p.vcomp_cell.get((a, s1))
            if left is None:
                tri.skipped += 1
                continue
            tri.record(
                Verdict.passed("triangle")
                if left == s2
                else Verdict.failed(
                    "triangle", f"triangle fails on ({f},{g}): {left} != {s2}", (f, g)
                )
            )

    # coherence cells must be invertible
    for table in (p.lunit, p.runit):
        for f, c in table.items():
            units.record(
                Verdict.passed("unit-laws")
                if c in p.inv_cell
                else Verdict.failed(
                    "unit-laws", f"unit cell {c} for {f} has no recorded inverse", f
                )
            )
    for key, c in p.assoc.items():
        inv.record(
            Verdict.passed("invertibility")
            if c in p.inv_cell
            else Verdict.failed(
                "invertibility", f"rebracketing cell {c} has no recorded inverse", key
            )
        )

    for a, b in p.inv_cell.items():
        done = False
        if (a, b) in p.vcomp_cell:
            expected = p.id_cell.get(p.cell_src[a])
            inv.record(
                Verdict.passed("invertibility")
                if expected is not None and p.vcomp_cell[(a, b)] == expected
                else Verdict.failed(
                    "invertibility", f"{a} then its inverse is not the identity", a
                )
            )
            done = True
        if (b, a) in p.vcomp_cell:
            expected = p.id_cell.get(p.cell_tgt[a])
            inv.record(
                Verdict.passed("invertibility")
                if expected is not None and p.vcomp_cell[(b, a)] == expected
                else Verdict.failed(
                    "invertibility", f"inverse of {a} then {a} is not the identity", a
                )
            )
            done = True
        if not done:
            inv.skipped += 1

    return report


# ---------------------------------------------------------------------------
# bounded extraction over finite sets


@dataclass
class ExtractionResult:
    presentation: BicatPresentation
    morphisms: dict
    cells: dict
    inconclusive: bool = False
    notes: list = field(default_factory=list)


def _all_cospans(x: FiniteSet, y: FiniteSet, max_apex: int):
    for s in range(max_apex + 1):
        apex = FiniteSet(s)
        for ll in FINSET.all_maps(x, apex):
            for rl in FINSET.all_maps(y, apex):
                yield Cospan(ll, rl)


def extract_bicategory(
    max_object: int = 2,
    max_apex: int = 3,
    seed: int = 0,
    n_globular: int = 6,
    n_pentagon: int = 25,
    n_triangle: int = 40,
    n_extra: int = 120,
    co: bool = False,
) -> ExtractionResult:
    """Tabulate the globular fragment over finite sets under a bound.

    Objects are the sets of size up to max_object; morphisms are all
    cospans between them with apex at most max_apex. Cells are the
    identity cells, every invertible cospan map (folded to a globular
    square), and a seeded sample of non-invertible globular squares.
    Composition tables are declared where the composite stays within
    bound; pentagon and triangle instances are seeded so the axiom
    checker has full data for them. The result is marked inconclusive
    when any composite fell outside the bound.
    """
    rng = random.Random(seed)
    result = ExtractionResult(None, {}, {})

    objects = [FiniteSet(n) for n in range(max_object + 1)]
    obj_id = {o: f"X{o.size}" for o in objects}

    mor = {}
    mor_id = {}
    for x in objects:
        for y in objects:
            for c in _all_cospans(x, y, max_apex):
                name = f"f{len(mor)}"
                mor[name] = c
                mor_id[c] = name
    mor_src = {name: obj_id[c.left_foot] for name, c in mor.items()}
    mor_tgt = {name: obj_id[c.right_foot] for name, c in mor.items()}
    id_mor = {obj_id[o]: mor_id[identity_cospan(o)] for o in objects}

    comp_mor = {}
    out_of_bound = 0
    by_src = {}
    for name, c in mor.items():
        by_src.setdefault(c.left_foot, []).append(name)
    for fname, f in mor.items():
        for gname in by_src.get(f.right_foot, ()):
            comp = compose_cospans(f, mor[gname])
            hit = mor_id.get(comp)
            if hit is None:
                out_of_bound += 1
            else:
                comp_mor[(fname, gname)] = hit
    if out_of_bound:
        result.inconclusive = True
        result.notes.append(
            f"{out_of_bound} composites exceed the apex bound and are undeclared"
        )

    cells = {}
    cell_by_class = {}
    cell_src = {}
    cell_tgt = {}

    def intern(cls: SquareClass) -> str:
        hit = cell_by_class.get(cls)
        if hit is not None:
            return hit
        name = f"c{len(cells)}"
        cells[name] = cls
        cell_by_class[cls] = name
        cell_src[name] = mor_id[cls.rep.top]
        cell_tgt[name] = mor_id[cls.rep.bottom]
        return name

    id_cell = {}
    for name, c in mor.items():
        id_cell[name] = intern(SquareClass(v_identity(c)))

    gamma_by_cell = {}
    for name, c in mor.items():
        apex = c.apex
        for perm in itertools.permutations(range(apex.size)):
            phi = FiniteFunction(apex, apex, perm)
            target = Cospan(c.left_leg.then(phi), c.right_leg.then(phi))
            gamma = CospanMap(c, target, phi)
            cid = intern(SquareClass(cell_of_map(gamma)))
            gamma_by_cell.setdefault(cid, gamma)
    inv_cell = {
        cid: intern(SquareClass(cell_of_map(gamma.inverse())))
        for cid, gamma in gamma_by_cell.items()
    }

    # seeded non-invertible globular cells: collapse maps between
    # parallel morphisms, folded into cells
    mor_names = list(mor)
    attempts = 0
    added = 0
    while added < n_globular and attempts < 50 * n_globular:
        attempts += 1
        u = mor[rng.choice(mor_names)]
        vs = [
            m
            for m in mor.values()
            if m.left_foot == u.left_foot and m.right_foot == u.right_foot
        ]
        v = rng.choice(vs)
        tables = FINSET.all_maps(u.apex, v.apex)
        rng.shuffle(tables)
        for mmap in tables:
            if u.left_leg.then(mmap) == v.left_leg and u.right_leg.then(mmap) == v.right_leg:
                if mmap.is_iso():
                    continue
                intern(SquareClass(cell_of_map(CospanMap(u, v, mmap))))
                added += 1
                break

    vcomp_cell = {}
    hcomp_cell = {}
    assoc = {}
    lunit_t = {}
    runit_t = {}

    def declare_vcomp(a: str, b: str) -> str | None:
        key = (a, b)
        hit = vcomp_cell.get(key)
        if hit is not None:
            return hit
        if cell_tgt[a] != cell_src[b]:
            return None
        out = intern(SquareClass(vcompose(cells[a].rep, cells[b].rep)))
        vcomp_cell[key] = out
        return out

    def declare_hcomp(a: str, b: str) -> str | None:
        key = (a, b)
        hit = hcomp_cell.get(key)
        if hit is not None:
            return hit
        top = compose_cospans(cells[a].rep.top, cells[b].rep.top)
        bottom = compose_cospans(cells[a].rep.bottom, cells[b].rep.bottom)
        if top not in mor_id or bottom not in mor_id:
            result.inconclusive = True
            return None
        out = intern(SquareClass(hcompose(cells[a].rep, cells[b].rep)))
        hcomp_cell[key] = out
        return out

    def declare_assoc(f: str, g: str, h: str) -> str | None:
        key = (f, g, h)
        hit = assoc.get(key)
        if hit is not None:
            return hit
        needed = (
            comp_mor.get((f, g)),
            comp_mor.get((g, h)),
        )
        if None in needed:
            return None
        if comp_mor.get((needed[0], h)) is None or comp_mor.get((f, needed[1])) is None:
            return None
        gamma = associator(mor[f], mor[g], mor[h])
        out = intern(SquareClass(cell_of_map(gamma)))
        assoc[key] = out
        return out

    # units: the absorption cells exist for every morphism in bound
    for name, c in mor.items():
        lunit_t[name] = intern(SquareClass(cell_of_map(left_unitor(c))))
        runit_t[name] = intern(SquareClass(cell_of_map(right_unitor(c))))

    # identity stacking entries for every cell, both sides
    for cid in list(cells):
        declare_vcomp(id_cell[cell_src[cid]], cid)
        declare_vcomp(cid, id_cell[cell_tgt[cid]])
    # inverse round trips
    for a, b in list(inv_cell.items()):
        declare_vcomp(a, b)
        declare_vcomp(b, a)
    # stacking of invertible cells sharing a middle morphism
    by_src_cell = {}
    for cid in gamma_by_cell:
        by_src_cell.setdefault(cell_src[cid], []).append(cid)
    for a, gamma in gamma_by_cell.items():
        for b in by_src_cell.get(cell_tgt[a], ()):
            declare_vcomp(a, b)

    # seeded pentagon instances
    comp_keys = list(comp_mor)
    quads = 0
    tries = 0
    while quads < n_pentagon and tries < 50 * n_pentagon:
        tries += 1
        f, g = comp_keys[rng.randrange(len(comp_keys))]
        followers = [h for h in mor_names if mor_src[h] == mor_tgt[g]]
        if not followers:
            continue
        h = rng.choice(followers)
        after = [j for j in mor_names if mor_src[j] == mor_tgt[h]]
        if not after:
            continue
        j = rng.choice(after)
        fg = comp_mor.get((f, g))
        gh = comp_mor.get((g, h))
        hj = comp_mor.get((h, j))
        if None in (fg, gh, hj):
            continue
        a1 = declare_assoc(fg, h, j)
        a2 = declare_assoc(f, g, hj)
        a3 = declare_assoc(f, g, h)
        a4 = declare_assoc(f, gh, j)
        a5 = declare_assoc(g, h, j)
        if None in (a1, a2, a3, a4, a5):
            continue
        s1 = declare_hcomp(a3, id_cell[j])
        s3 = declare_hcomp(id_cell[f], a5)
        if s1 is None or s3 is None:
            continue
        left = declare_vcomp(a1, a2)
        s12 = declare_vcomp(s1, a4)
        if left is None or s12 is None:
            continue
        declare_vcomp(s12, s3)
        quads += 1

    # seeded triangle instances
    pairs = 0
    tries = 0
    while pairs < n_triangle and tries < 50 * n_triangle:
        tries += 1
        f = rng.choice(mor_names)
        followers = [g for g in mor_names if mor_src[g] == mor_tgt[f]]
        if not followers:
            continue
        g = rng.choice(followers)
        mid = id_mor[mor_tgt[f]]
        a = declare_assoc(f, mid, g)
        if a is None:
            continue
        s1 = declare_hcomp(id_cell[f], runit_t[g])
        s2 = declare_hcomp(lunit_t[f], id_cell[g])
        if s1 is None or s2 is None:
            continue
        declare_vcomp(a, s1)
        # mirror data so the reversed presentation's triangle stays checkable
        s1r = declare_hcomp(id_cell[f], inv_cell[runit_t[g]])
        if s1r is not None and a in inv_cell:
            declare_vcomp(s1r, inv_cell[a])
        pairs += 1

    # extra random side-by-side and interchange data
    inv_ids = list(gamma_by_cell)
    for _ in range(n_extra):
        a = rng.choice(inv_ids)
        partners = [b for b in inv_ids if mor_src[cell_src[b]] == mor_tgt[cell_src[a]]]
        if not partners:
            continue
        b = rng.choice(partners)
        ha = declare_hcomp(a, b)
        ups = by_src_cell.get(cell_tgt[a], ())
        rights = by_src_cell.get(cell_tgt[b], ())
        if ha is None or not ups or not rights:
            continue
        a2 = rng.choice(list(ups))
        b2 = rng.choice(list(rights))
        hb = declare_hcomp(a2, b2)
        va = declare_vcomp(a, a2)
        vb = declare_vcomp(b, b2)
        if None in (hb, va, vb):
            continue
        declare_hcomp(va, vb)
        declare_vcomp(ha, hb)

    presentation = BicatPresentation(
        objects=tuple(obj_id[o] for o in objects),
        mor_src=mor_src,
        mor_tgt=mor_tgt,
        cell_src=cell_src,
        cell_tgt=cell_tgt,
        id_mor=id_mor,
        id_cell=id_cell,
        comp_mor=comp_mor,
        vcomp_cell=vcomp_cell,
        hcomp_cell=hcomp_cell,
        assoc=assoc,
        lunit=lunit_t,
        runit=runit_t,
        inv_cell=inv_cell,
    )
    if co:
        presentation = co_presentation(presentation)
    result.presentation = presentation
    result.morphisms = mor
    result.cells = cells
    result.notes.append(
        f"{len(mor)} morphisms, {len(cells)} cells, "
        f"{len(comp_mor)} composites, {len(vcomp_cell)} stackings declared"
    )
    return result


# ---------------------------------------------------------------------------
# the mixed one-category from unique fillers


@dataclass
class DoubleCatPresentation:
    """String-keyed tables presenting a strict double category fragment.

    squares maps a square id to its boundary (top, bottom, left, right)
    with top/bottom horizontal and left/right vertical, columns read
    top to bottom.
    """

    objects: tuple
    hmor_src: dict
    hmor_tgt: dict
    vmor_src: dict
    vmor_tgt: dict
    h_id: dict
    v_id: dict
    hcomp_mor: dict
    vcomp_mor: dict
    squares: dict


def check_composability_condition(p: DoubleCatPresentation) -> AxiomReport:
    """Every mixed pair must have exactly one degenerate filler square.

    For each horizontal f and vertical g with tgt(f) == src(g): exactly
    one square with top f, right g and identity bottom. Mirrored: for
    each vertical g and horizontal f with tgt(g) == src(f): exactly one
    square with left g, bottom f and identity right.
    """
    report = AxiomReport()
    law = report.law("unique-fillers")
    for f in p.hmor_src:
        for g in p.vmor_src:
            if p.hmor_tgt[f] != p.vmor_src[g]:
                continue
            ident = p.h_id[p.vmor_tgt[g]]
            hits = [
                s
                for s, (t, b, l, r) in p.squares.items()
                if t == f and r == g and b == ident
            ]
            law.record(
                Verdict.passed("unique-fillers")
                if len(hits) == 1
                else Verdict.failed(
                    "unique-fillers",
                    f"{len(hits)} fillers for horizontal {f} then vertical {g}",
                    (f, g, tuple(hits)),
                )
            )
    for g in p.vmor_src:
        for f in p.hmor_src:
            if p.vmor_tgt[g] != p.hmor_src[f]:
                continue
            ident = p.v_id[p.hmor_tgt[f]]
            hits = [
                s
                for s, (t, b, l, r) in p.squares.items()
                if l == g and b == f and r == ident
            ]
            law.record(
                Verdict.passed("unique-fillers")
                if len(hits) == 1
                else Verdict.failed(
                    "unique-fillers",
                    f"{len(hits)} fillers for vertical {g} then horizontal {f}",
                    (g, f, tuple(hits)),
                )
            )
    return report


@dataclass
class MixedCategory:
    """Plain category presentation produced by build_DC0."""

    objects: tuple
    morphisms: tuple
    src: dict
    tgt: dict
    identity: dict
    comp: dict


def build_DC0(p: DoubleCatPresentation):
    """Merge horizontal and vertical morphisms into one category.

    Identities are identified across the two directions; mixed
    composites resolve through the unique filler squares, pure ones
    through the declared tables. Returns the category and the report of
    its axioms (totality, identity laws, associativity over all
    composable triples).
    """
    condition = check_composability_condition(p)
    report = AxiomReport()
    report.merge(condition)
    law = report.law("category-axioms")

    h_ids = set(p.h_id.values())
    v_ids = set(p.v_id.values())

    def name_h(f):
        return f"1_{p.hmor_src[f]}" if f in h_ids else f"h:{f}"

    def name_v(g):
        return f"1_{p.vmor_src[g]}" if g in v_ids else f"v:{g}"

    morphisms = {}
    src = {}
    tgt = {}
    for f in p.hmor_src:
        n = name_h(f)
        morphisms[n] = ("h", f)
        src[n] = p.hmor_src[f]
        tgt[n] = p.hmor_tgt[f]
    for g in p.vmor_src:
        n = name_v(g)
        if n in morphisms and g not in v_ids:
            raise ValidationError(f"name collision for {g}", location="vmor")
        morphisms.setdefault(n, ("v", g))
        src[n] = p.vmor_src[g]
        tgt[n] = p.vmor_tgt[g]
    identity = {x: f"1_{x}" for x in p.objects}

    filler_left = {}
    filler_top = {}
    for s, (t, b, l, r) in p.squares.items():
        if b in h_ids:
            filler_left.setdefault((t, r), l)
        if r in v_ids:
            filler_top.setdefault((l, b), t)

    def compose(m, n):
        """Composite m then n in the merged category, or None."""
        if m in identity.values():
            return n
        if n in identity.values():
            return m
        kind_m, raw_m = morphisms[m]
        kind_n, raw_n = morphisms[n]
        if kind_m == "h" and kind_n == "h":
            out = p.hcomp_mor.get((raw_m, raw_n))
            return None if out is None else name_h(out)
        if kind_m == "v" and kind_n == "v":
            out = p.vcomp_mor.get((raw_m, raw_n))
            return None if out is None else name_v(out)
        if kind_m == "h" and kind_n == "v":
            out = filler_left.get((raw_m, raw_n))
            return None if out is None else name_v(out)
        out = filler_top.get((raw_m, raw_n))
        return None if out is None else name_h(out)

    comp = {}
    names = list(morphisms)
    for m in names:
        for n in names:
            if tgt[m] != src[n]:
                continue
            out = compose(m, n)
            if out is None:
                law.record(
                    Verdict.failed(
                        "category-axioms", f"no composite for {m} then {n}", (m, n)
                    )
                )
                continue
            if src[out] != src[m] or tgt[out] != tgt[n]:
                law.record(
                    Verdict.failed(
                        "category-axioms", f"composite {m};{n} -> {out} mistyped", (m, n)
                    )
                )
                continue
            comp[(m, n)] = out
            law.record(Verdict.passed("category-axioms"))

    for m in names:
        i, j = identity.get(src[m]), identity.get(tgt[m])
        if comp.get((i, m)) != m or comp.get((m, j)) != m:
            law.record(
                Verdict.failed("category-axioms", f"identity laws fail at {m}", m)
            )
        else:
            law.record(Verdict.passed("category-axioms"))

    for (m, n), mn in comp.items():
        for k in names:
            if src[k] != tgt[n]:
                continue
            nk = comp.get((n, k))
            left = comp.get((mn, k))
            right = comp.get((m, nk)) if nk is not None else None
            if left is None or right is None:
                law.record(
                    Verdict.failed(
                        "category-axioms",
                        f"missing composite in triple ({m},{n},{k})",
                        (m, n, k),
                    )
                )
                continue
            law.record(
                Verdict.passed("category-axioms")
                if left == right
                else Verdict.failed(
                    "category-axioms",
                    f"associativity fails on ({m},{n},{k}): {left} != {right}",
                    (m, n, k),
                )
            )

    cat = MixedCategory(
        objects=tuple(p.objects),
        morphisms=tuple(names),
        src=src,
        tgt=tgt,
        identity=identity,
        comp=comp,
    )
    return cat, report
