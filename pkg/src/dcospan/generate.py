"""Seeded random generators for every diagram kind.

Squares are sampled by solving their corner constraints: the four
boundary apexes are glued into the colimit of the boundary diagram,
and any map out of that colimit is a valid center assignment, so
sampling a random one covers exactly the valid squares over the chosen
boundary. Cylinders and double cells are sampled by relabeling a
square along invertible maps, which produces every invertible shape.

Everything is driven by an explicit random.Random so a fixed seed
reproduces the exact output.
"""

from __future__ import annotations

import random

from .base import (
    FINSET,
    FiniteFunction,
    FiniteGraph,
    FiniteSet,
    GraphHom,
    _UnionFind,
)
from .cospans import Cospan, CospanMap
from .double import Cylinder, DoubleCell, DoubleCospan, act_square, _EDGES
from .errors import MismatchError
from .extraction import BicatPresentation, DoubleCatPresentation
from .verity import FillerRecord, Fragment


# ---------------------------------------------------------------------------
# quotient plumbing shared by the graph gluers and the corner solver


def _merge_parts(sizes, pairs):
    """Quotient a disjoint union of numbered ranges; classes numbered by
    first appearance. Returns (class count, per-part class tables)."""
    total = sum(sizes)
    uf = _UnionFind(total)
    for a, b in pairs:
        uf.union(a, b)
    index = {}
    for i in range(total):
        r = uf.find(i)
        if r not in index:
            index[r] = len(index)
    tables = []
    off = 0
    for s in sizes:
        tables.append(tuple(index[uf.find(off + i)] for i in range(s)))
        off += s
    return len(index), tables


def _glue_graphs(parts, vpairs, epairs):
    """Quotient of a disjoint union of graphs. Edge pairs must already
    have merged endpoints. Returns the quotient and the part maps."""
    nv, vtabs = _merge_parts([g.vertices for g in parts], vpairs)
    ne, etabs = _merge_parts([g.edges for g in parts], epairs)
    src = [None] * ne
    tgt = [None] * ne
    for gi, g in enumerate(parts):
        for e in range(g.edges):
            ec = etabs[gi][e]
            ends = (vtabs[gi][g.src[e]], vtabs[gi][g.tgt[e]])
            if src[ec] is None:
                src[ec], tgt[ec] = ends
            elif (src[ec], tgt[ec]) != ends:
                raise MismatchError("edge merge does not respect endpoints")
    glued = FiniteGraph(nv, ne, tuple(src), tuple(tgt))
    homs = [
        GraphHom(g, glued, vtabs[i], etabs[i]) for i, g in enumerate(parts)
    ]
    return glued, homs


def _parallel_edge_pairs(rng, parts, vtabs, chance=0.4):
    """Candidate merges among edges made parallel by a vertex quotient."""
    groups = {}
    off = 0
    for gi, g in enumerate(parts):
        for e in range(g.edges):
            key = (vtabs[gi][g.src[e]], vtabs[gi][g.tgt[e]])
            groups.setdefault(key, []).append(off + e)
        off += g.edges
    pairs = []
    for bucket in groups.values():
        for i in range(1, len(bucket)):
            if rng.random() < chance:
                pairs.append((bucket[rng.randrange(i)], bucket[i]))
    return pairs


def _random_graph_quotient(rng, parts, forced_vpairs=(), forced_epairs=(), merges=None):
    """Glue parts, randomly merging some vertices and parallel edges on
    top of the forced identifications."""
    total_v = sum(g.vertices for g in parts)
    if merges is None:
        merges = rng.randint(0, total_v // 2) if total_v else 0
    vpairs = list(forced_vpairs)
    for _ in range(merges):
        vpairs.append((rng.randrange(total_v), rng.randrange(total_v)))
    _, vtabs = _merge_parts([g.vertices for g in parts], vpairs)
    epairs = list(forced_epairs) + _parallel_edge_pairs(rng, parts, vtabs)
    return _glue_graphs(parts, vpairs, epairs)


# ---------------------------------------------------------------------------
# random objects, maps, cospans


def random_object(rng, base, max_size=3):
    if base.name == "finset":
        return FiniteSet(rng.randint(0, max_size))
    v = rng.randint(0, max_size)
    e = rng.randint(0, max_size) if v else 0
    return FiniteGraph(
        v,
        e,
        tuple(rng.randrange(v) for _ in range(e)),
        tuple(rng.randrange(v) for _ in range(e)),
    )


def _random_table(rng, n, m):
    return tuple(rng.randrange(m) for _ in range(n))


def random_cospan(rng, base, x, y, max_size=3, pad=2):
    """Random cospan between the given feet."""
    if base.name == "finset":
        lo = 1 if (x.size or y.size) else 0
        apex = FiniteSet(rng.randint(lo, max(lo, max_size)))
        return Cospan(
            FiniteFunction(x, apex, _random_table(rng, x.size, apex.size)),
            FiniteFunction(y, apex, _random_table(rng, y.size, apex.size)),
        )
    filler = random_object(rng, base, pad)
    _, (lx, ly, _) = _random_graph_quotient(rng, [x, y, filler])
    return Cospan(lx, ly)


def random_cospan_chain(rng, base, n, max_size=3, pad=2):
    """n cospans sharing consecutive feet, ready to compose in a row."""
    feet = [random_object(rng, base, max_size) for _ in range(n + 1)]
    return tuple(
        random_cospan(rng, base, feet[i], feet[i + 1], max_size, pad)
        for i in range(n)
    )


# ---------------------------------------------------------------------------
# invertible relabelings


def _inv_perm(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def random_iso_from(rng, obj):
    """Invertible map out of obj onto a relabeled copy."""
    if isinstance(obj, FiniteSet):
        p = list(range(obj.size))
        rng.shuffle(p)
        return FiniteFunction(obj, obj, tuple(p))
    pv = list(range(obj.vertices))
    pe = list(range(obj.edges))
    rng.shuffle(pv)
    rng.shuffle(pe)
    inv_pv, inv_pe = _inv_perm(pv), _inv_perm(pe)
    cod = FiniteGraph(
        obj.vertices,
        obj.edges,
        tuple(pv[obj.src[inv_pe[k]]] for k in range(obj.edges)),
        tuple(pv[obj.tgt[inv_pe[k]]] for k in range(obj.edges)),
    )
    return GraphHom(obj, cod, tuple(pv), tuple(pe))


def _relabel_cospan(c: Cospan, sigma) -> Cospan:
    return Cospan(c.left_leg.then(sigma), c.right_leg.then(sigma))


def relabel_square(d: DoubleCospan, core, top=None, bottom=None, left=None, right=None):
    """Isomorphic copy of d: center renamed along the invertible core,
    any subset of edges renamed along invertible maps out of their
    apexes."""

    def edge(c, sig):
        return c if sig is None else _relabel_cospan(c, sig)

    def emap(m, sig):
        moved = m.then(core)
        return moved if sig is None else sig.inverse().then(moved)

    return DoubleCospan(
        edge(d.top, top),
        edge(d.bottom, bottom),
        edge(d.left, left),
        edge(d.right, right),
        core.cod,
        emap(d.from_top, top),
        emap(d.from_bottom, bottom),
        emap(d.from_left, left),
        emap(d.from_right, right),
    )


def random_bigon_onto(rng, c: Cospan) -> CospanMap:
    """Invertible 2-cell whose target is the given cospan."""
    tau = random_iso_from(rng, c.apex)
    source = _relabel_cospan(c, tau)
    return CospanMap(source, c, tau.inverse())


def random_permuted(rng, d: DoubleCospan) -> DoubleCospan:
    """Center-relabeled isomorph with the identical boundary."""
    return relabel_square(d, random_iso_from(rng, d.center))


# ---------------------------------------------------------------------------
# random squares: solve the corners, then pick any center


def _corner_relations_finset(top, bottom, left, right):
    offs = [0, top.apex.size, top.apex.size + bottom.apex.size, 0]
    offs[3] = offs[2] + left.apex.size
    pairs = []
    corners = (
        (top.left_leg, offs[0], left.left_leg, offs[2]),
        (top.right_leg, offs[0], right.left_leg, offs[3]),
        (bottom.left_leg, offs[1], left.right_leg, offs[2]),
        (bottom.right_leg, offs[1], right.right_leg, offs[3]),
    )
    for f, fo, g, go in corners:
        for a in range(f.dom.size):
            pairs.append((fo + f.table[a], go + g.table[a]))
    return pairs


def _corner_relations_graph(top, bottom, left, right):
    apexes = (top.apex, bottom.apex, left.apex, right.apex)
    offv = [0, 0, 0, 0]
    offe = [0, 0, 0, 0]
    for i in range(1, 4):
        offv[i] = offv[i - 1] + apexes[i - 1].vertices
        offe[i] = offe[i - 1] + apexes[i - 1].edges
    vpairs, epairs = [], []
    corners = (
        (top.left_leg, 0, left.left_leg, 2),
        (top.right_leg, 0, right.left_leg, 3),
        (bottom.left_leg, 1, left.right_leg, 2),
        (bottom.right_leg, 1, right.right_leg, 3),
    )
    for f, fi, g, gi in corners:
        for a in range(f.dom.vertices):
            vpairs.append((offv[fi] + f.vmap[a], offv[gi] + g.vmap[a]))
        for e in range(f.dom.edges):
            epairs.append((offe[fi] + f.emap[e], offe[gi] + g.emap[e]))
    return vpairs, epairs


def random_square(
    rng,
    base,
    max_size=3,
    pad=2,
    top=None,
    bottom=None,
    left=None,
    right=None,
):
    """Random valid square; any supplied edges are kept verbatim."""
    x00 = (top.left_foot if top else None) or (left.left_foot if left else None)
    x01 = (top.right_foot if top else None) or (right.left_foot if right else None)
    x10 = (bottom.left_foot if bottom else None) or (left.right_foot if left else None)
    x11 = (bottom.right_foot if bottom else None) or (right.right_foot if right else None)
    x00 = x00 if x00 is not None else random_object(rng, base, max_size)
    x01 = x01 if x01 is not None else random_object(rng, base, max_size)
    x10 = x10 if x10 is not None else random_object(rng, base, max_size)
    x11 = x11 if x11 is not None else random_object(rng, base, max_size)
    top = top or random_cospan(rng, base, x00, x01, max_size, pad)
    bottom = bottom or random_cospan(rng, base, x10, x11, max_size, pad)
    left = left or random_cospan(rng, base, x00, x10, max_size, pad)
    right = right or random_cospan(rng, base, x01, x11, max_size, pad)

    if base.name == "finset":
        sizes = [c.apex.size for c in (top, bottom, left, right)]
        z, tabs = _merge_parts(sizes, _corner_relations_finset(top, bottom, left, right))
        colim = FiniteSet(z)
        center = FiniteSet(rng.randint(1 if z else 0, z + pad))
        phi = FiniteFunction(colim, center, _random_table(rng, z, center.size))
        maps = [
            FiniteFunction(c.apex, colim, tabs[i]).then(phi)
            for i, c in enumerate((top, bottom, left, right))
        ]
    else:
        vpairs, epairs = _corner_relations_graph(top, bottom, left, right)
        filler = random_object(rng, base, pad)
        parts = [top.apex, bottom.apex, left.apex, right.apex, filler]
        center, homs = _random_graph_quotient(rng, parts, vpairs, epairs)
        maps = homs[:4]
    return DoubleCospan(top, bottom, left, right, center, *maps)


def random_h_pair(rng, base, max_size=3, pad=2):
    a = random_square(rng, base, max_size, pad)
    b = random_square(rng, base, max_size, pad, left=a.right)
    return a, b


def random_v_pair(rng, base, max_size=3, pad=2):
    a = random_square(rng, base, max_size, pad)
    b = random_square(rng, base, max_size, pad, top=a.bottom)
    return a, b


def random_h_triple(rng, base, max_size=3, pad=2):
    a, b = random_h_pair(rng, base, max_size, pad)
    c = random_square(rng, base, max_size, pad, left=b.right)
    return a, b, c


def random_grid(rng, base, max_size=3, pad=2):
    """2x2 grid (a b / c d) ready for both composition orders."""
    a = random_square(rng, base, max_size, pad)
    b = random_square(rng, base, max_size, pad, left=a.right)
    c = random_square(rng, base, max_size, pad, top=a.bottom)
    d = random_square(rng, base, max_size, pad, left=c.right, top=b.bottom)
    return a, b, c, d


# ---------------------------------------------------------------------------
# cylinders and double cells by relabeling


def random_cylinder(rng, d=None, orientation="h", base=FINSET, max_size=3, pad=2):
    if d is None:
        d = random_square(rng, base, max_size, pad)
    if orientation == "v":
        return random_cylinder(rng, d.transpose(), "h", base, max_size, pad).transpose()
    sig_t = random_iso_from(rng, d.top.apex)
    sig_b = random_iso_from(rng, d.bottom.apex)
    core = random_iso_from(rng, d.center)
    target = relabel_square(d, core, top=sig_t, bottom=sig_b)
    return Cylinder(
        "h",
        d,
        target,
        CospanMap(d.top, target.top, sig_t),
        CospanMap(d.bottom, target.bottom, sig_b),
        core,
    )


def random_double_cell(rng, d=None, base=FINSET, max_size=3, pad=2):
    """Commuting square of invertible cylinders around one square."""
    if d is None:
        d = random_square(rng, base, max_size, pad)
    sig_t = random_iso_from(rng, d.top.apex)
    sig_b = random_iso_from(rng, d.bottom.apex)
    tau_l = random_iso_from(rng, d.left.apex)
    tau_r = random_iso_from(rng, d.right.apex)
    core_h = random_iso_from(rng, d.center)
    core_v = random_iso_from(rng, d.center)
    core_d = random_iso_from(rng, d.center)

    d_a = relabel_square(d, core_h, top=sig_t, bottom=sig_b)
    d_b = relabel_square(d, core_v, left=tau_l, right=tau_r)
    d_ab = relabel_square(
        d, core_d, top=sig_t, bottom=sig_b, left=tau_l, right=tau_r
    )

    big_t = CospanMap(d.top, d_a.top, sig_t)
    big_b = CospanMap(d.bottom, d_a.bottom, sig_b)
    big_l = CospanMap(d.left, d_b.left, tau_l)
    big_r = CospanMap(d.right, d_b.right, tau_r)

    row1 = Cylinder("h", d, d_a, big_t, big_b, core_h)
    row2 = Cylinder(
        "h", d_b, d_ab, big_t, big_b, core_v.inverse().then(core_d)
    )
    col1 = Cylinder("v", d, d_b, big_l, big_r, core_v)
    col2 = Cylinder(
        "v", d_a, d_ab, big_l, big_r, core_h.inverse().then(core_d)
    )
    return DoubleCell(row1, row2, col1, col2)


# ---------------------------------------------------------------------------
# fragments closed under the actions they admit


def random_fragment(
    rng,
    base,
    n_squares=2,
    bigons_per_square=1,
    max_size=2,
    pad=1,
    declare=True,
    cap=256,
):
    """Squares plus invertible bigons, closed under acting, so the
    action conditions hold by construction."""
    seeds = [random_square(rng, base, max_size, pad) for _ in range(n_squares)]
    bigons = []
    for s in seeds:
        for _ in range(bigons_per_square):
            edge = rng.choice(_EDGES)
            alpha = random_bigon_onto(rng, s.edge(edge))
            for candidate in (alpha, alpha.inverse()):
                if candidate not in bigons:
                    bigons.append(candidate)

    squares = []
    fillers = []
    work = list(seeds)
    while work:
        f = work.pop()
        if f in squares:
            continue
        squares.append(f)
        if len(squares) > cap:
            raise MismatchError("fragment closure exceeded the cap")
        for alpha in bigons:
            for edge in _EDGES:
                if alpha.target != f.edge(edge):
                    continue
                g = act_square(f, alpha, edge)
                work.append(g)
                if declare:
                    fillers.append(
                        FillerRecord(
                            square=f,
                            alpha=alpha,
                            edge=edge,
                            filled=g,
                            core=f.base.identity(f.center),
                        )
                    )
    return Fragment.of(squares, bigons, fillers if declare else ())


# ---------------------------------------------------------------------------
# abstract presentations


def cyclic_bicat_presentation(n=3) -> BicatPresentation:
    """One object, the cyclic group of order n as 1-cells, identity
    2-cells only; every coherence cell is an identity."""
    if n < 1:
        raise MismatchError("group order must be positive")
    mors = [f"g{k}" for k in range(n)]
    cells = {f: f"id:{f}" for f in mors}
    comp = {
        (mors[i], mors[j]): mors[(i + j) % n]
        for i in range(n)
        for j in range(n)
    }
    return BicatPresentation(
        objects=("*",),
        mor_src={f: "*" for f in mors},
        mor_tgt={f: "*" for f in mors},
        cell_src={c: f for f, c in cells.items()},
        cell_tgt={c: f for f, c in cells.items()},
        id_mor={"*": mors[0]},
        id_cell=dict(cells),
        comp_mor=comp,
        vcomp_cell={(cells[f], cells[f]): cells[f] for f in mors},
        hcomp_cell={
            (cells[f], cells[g]): cells[comp[(f, g)]]
            for f in mors
            for g in mors
        },
        assoc={
            (f, g, h): cells[comp[(comp[(f, g)], h)]]
            for f in mors
            for g in mors
            for h in mors
        },
        lunit=dict(cells),
        runit=dict(cells),
        inv_cell={c: c for c in cells.values()},
    )


def _transitive_closure(n, pairs):
    rel = {(i, i) for i in range(n)}
    rel.update(pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


def poset_double_presentation(n, covers) -> DoubleCatPresentation:
    """Commuting-square double category of the poset generated by the
    given covering pairs on 0..n-1."""
    rel = sorted(_transitive_closure(n, covers))

    def mid(x, y):
        return f"{x}<={y}"

    mor_src = {mid(x, y): x for x, y in rel}
    mor_tgt = {mid(x, y): y for x, y in rel}
    comp = {}
    relset = set(rel)
    for x, y in rel:
        for y2, z in rel:
            if y == y2 and (x, z) in relset:
                comp[(mid(x, y), mid(y, z))] = mid(x, z)
    squares = {}
    for x, y in rel:
        for x2, y2 in rel:
            if (x, x2) in relset and (y, y2) in relset:
                squares[f"sq|{x},{y},{x2},{y2}"] = (
                    mid(x, y),
                    mid(x2, y2),
                    mid(x, x2),
                    mid(y, y2),
                )
    return DoubleCatPresentation(
        objects=tuple(range(n)),
        hmor_src=dict(mor_src),
        hmor_tgt=dict(mor_tgt),
        vmor_src=dict(mor_src),
        vmor_tgt=dict(mor_tgt),
        h_id={x: mid(x, x) for x in range(n)},
        v_id={x: mid(x, x) for x in range(n)},
        hcomp_mor=dict(comp),
        vcomp_mor=dict(comp),
        squares=squares,
    )


def chain_poset_presentation(n=3) -> DoubleCatPresentation:
    return poset_double_presentation(n, [(i, i + 1) for i in range(n - 1)])


def random_poset_presentation(rng, max_elems=4) -> DoubleCatPresentation:
    n = rng.randint(1, max_elems)
    covers = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < 0.5
    ]
    return poset_double_presentation(n, covers)


# ---------------------------------------------------------------------------
# the sampler handed to the axiom harnesses


class DiagramSampler:
    """Seeded source of every configuration the law batteries consume."""

    def __init__(self, base=FINSET, seed=0, max_size=3, pad=2):
        self.base = base
        self.rng = random.Random(seed)
        self.max_size = max_size
        self.pad = pad

    def object(self):
        return random_object(self.rng, self.base, self.max_size)

    def cospan(self, x=None, y=None):
        x = x if x is not None else self.object()
        y = y if y is not None else self.object()
        return random_cospan(self.rng, self.base, x, y, self.max_size, self.pad)

    def cospan_chain(self, n):
        return random_cospan_chain(self.rng, self.base, n, self.max_size, self.pad)

    def square(self, **edges):
        return random_square(self.rng, self.base, self.max_size, self.pad, **edges)

    def h_pair(self):
        return random_h_pair(self.rng, self.base, self.max_size, self.pad)

    def v_pair(self):
        return random_v_pair(self.rng, self.base, self.max_size, self.pad)

    def h_triple(self):
        return random_h_triple(self.rng, self.base, self.max_size, self.pad)

    def grid(self):
        return random_grid(self.rng, self.base, self.max_size, self.pad)

    def bigon_onto(self, c: Cospan) -> CospanMap:
        return random_bigon_onto(self.rng, c)

    def permuted(self, d: DoubleCospan) -> DoubleCospan:
        return random_permuted(self.rng, d)

    def cylinder(self, orientation=None):
        o = orientation or self.rng.choice(("h", "v"))
        return random_cylinder(
            self.rng, None, o, self.base, self.max_size, self.pad
        )

    def double_cell(self):
        return random_double_cell(
            self.rng, None, self.base, self.max_size, self.pad
        )

    def fragment(self, **kw):
        return random_fragment(self.rng, self.base, **kw)


def generate(kind, base=FINSET, bound=3, seed=0):
    """One fresh value of the given document kind, deterministic in the
    seed."""
    sampler = DiagramSampler(base=base, seed=seed, max_size=bound)
    rng = sampler.rng
    if kind == "cospan":
        return sampler.cospan()
    if kind == "cospan_map":
        return sampler.bigon_onto(sampler.cospan())
    if kind == "double_cospan":
        return sampler.square()
    if kind == "cylinder":
        return sampler.cylinder()
    if kind == "double_cell":
        return sampler.double_cell()
    if kind == "bicat_presentation":
        return cyclic_bicat_presentation(rng.randint(1, max(2, bound)))
    if kind == "doublecat_presentation":
        return random_poset_presentation(rng, max_elems=max(2, bound))
    raise MismatchError(f"unknown kind {kind!r}")
