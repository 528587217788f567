"""Finite sets, finite graphs, their maps, and canonical pushouts.

Objects are skeletal: a finite set is just a size, with elements
0..n-1; a finite graph has numbered vertices and edges. All maps are
total and stored as tuples, so every structure here is hashable and
compares by value.

The pushout of f: A -> B, g: A -> C glues B and C along the relation
f(a) ~ g(a). Its apex is numbered canonically: scan B's elements in
order, then C's, and assign each merge class the next fresh number the
first time it appears. This numbering is what makes composites of
cospans strictly associative downstream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CoconeError, MismatchError


@dataclass(frozen=True)
class FiniteSet:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError(f"negative size {self.size}")

    def __iter__(self):
        return iter(range(self.size))

    def __repr__(self):
        return f"FiniteSet({self.size})"


@dataclass(frozen=True)
class FiniteFunction:
    """Total function between finite sets, tabulated."""

    dom: FiniteSet
    cod: FiniteSet
    table: tuple[int, ...]

    def __post_init__(self):
        # accept any sequence, store a tuple so equality and hashing work
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.dom.size:
            raise MismatchError(
                f"table length {len(self.table)} != domain size {self.dom.size}"
            )
        for i, v in enumerate(self.table):
            if not 0 <= v < self.cod.size:
                raise MismatchError(f"value {v} at {i} outside codomain of size {self.cod.size}")

    @classmethod
    def identity(cls, obj: FiniteSet) -> "FiniteFunction":
        return cls(obj, obj, tuple(range(obj.size)))

    def __call__(self, x: int) -> int:
        return self.table[x]

    def then(self, other: "FiniteFunction") -> "FiniteFunction":
        """Diagrammatic composite: self followed by other."""
        if self.cod != other.dom:
            raise MismatchError(f"cannot compose: codomain {self.cod} != domain {other.dom}")
        return FiniteFunction(self.dom, other.cod, tuple(other.table[v] for v in self.table))

    def is_iso(self) -> bool:
        return (
            self.dom.size == self.cod.size
            and len(set(self.table)) == self.dom.size
        )

    def inverse(self) -> "FiniteFunction":
        if not self.is_iso():
            raise MismatchError(f"{self} is not invertible")
        inv = [0] * self.cod.size
        for i, v in enumerate(self.table):
            inv[v] = i
        return FiniteFunction(self.cod, self.dom, tuple(inv))

    def __repr__(self):
        return f"FiniteFunction({self.dom.size}->{self.cod.size}, {list(self.table)})"


@dataclass(frozen=True)
class FiniteGraph:
    """Directed multigraph: numbered vertices, numbered edges, endpoint tables."""

    vertices: int
    edges: int
    src: tuple[int, ...]
    tgt: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "src", tuple(self.src))
        object.__setattr__(self, "tgt", tuple(self.tgt))
        if self.vertices < 0 or self.edges < 0:
            raise ValueError("negative count")
        if len(self.src) != self.edges or len(self.tgt) != self.edges:
            raise MismatchError("endpoint table length != edge count")
        for e in range(self.edges):
            if not (0 <= self.src[e] < self.vertices and 0 <= self.tgt[e] < self.vertices):
                raise MismatchError(f"edge {e} has an endpoint outside the vertex set")

    def __repr__(self):
        return f"FiniteGraph(v={self.vertices}, e={self.edges})"


@dataclass(frozen=True)
class GraphHom:
    """Graph homomorphism: vertex map + edge map preserving endpoints."""

    dom: FiniteGraph
    cod: FiniteGraph
    vmap: tuple[int, ...]
    emap: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vmap", tuple(self.vmap))
        object.__setattr__(self, "emap", tuple(self.emap))
        if len(self.vmap) != self.dom.vertices or len(self.emap) != self.dom.edges:
            raise MismatchError("map table length mismatch")
        for v in self.vmap:
            if not 0 <= v < self.cod.vertices:
                raise MismatchError(f"vertex image {v} out of range")
        for e, fe in enumerate(self.emap):
            if not 0 <= fe < self.cod.edges:
                raise MismatchError(f"edge image {fe} out of range")
            if self.cod.src[fe] != self.vmap[self.dom.src[e]]:
                raise MismatchError(f"edge {e}: source not preserved")
            if self.cod.tgt[fe] != self.vmap[self.dom.tgt[e]]:
                raise MismatchError(f"edge {e}: target not preserved")

    @classmethod
    def identity(cls, g: FiniteGraph) -> "GraphHom":
        return cls(g, g, tuple(range(g.vertices)), tuple(range(g.edges)))

    def then(self, other: "GraphHom") -> "GraphHom":
        if self.cod != other.dom:
            raise MismatchError("cannot compose graph maps: middle object differs")
        return GraphHom(
            self.dom,
            other.cod,
            tuple(other.vmap[v] for v in self.vmap),
            tuple(other.emap[e] for e in self.emap),
        )

    def is_iso(self) -> bool:
        return (
            self.dom.vertices == self.cod.vertices
            and self.dom.edges == self.cod.edges
            and len(set(self.vmap)) == self.dom.vertices
            and len(set(self.emap)) == self.dom.edges
        )

    def inverse(self) -> "GraphHom":
        if not self.is_iso():
            raise MismatchError(f"{self} is not invertible")
        vinv = [0] * self.cod.vertices
        einv = [0] * self.cod.edges
        for i, v in enumerate(self.vmap):
            vinv[v] = i
        for i, e in enumerate(self.emap):
            einv[e] = i
        return GraphHom(self.cod, self.dom, tuple(vinv), tuple(einv))

    def __repr__(self):
        return f"GraphHom(v={list(self.vmap)}, e={list(self.emap)})"


@dataclass(frozen=True)
class PushoutResult:
    """Apex and injections of a computed pushout, plus the glued span."""

    apex: object
    left_inj: object
    right_inj: object
    span: tuple


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _merge_classes(b_size: int, c_size: int, pairs) -> tuple[int, list[int], list[int]]:
    """Quotient B ⊔ C by the given (b, c) identifications.

    Classes are numbered by first appearance scanning B then C. Returns
    (class count, map on B, map on C).
    """
    uf = _UnionFind(b_size + c_size)
    for b, c in pairs:
        uf.union(b, b_size + c)
    number: dict[int, int] = {}
    out = []
    for x in range(b_size + c_size):
        root = uf.find(x)
        if root not in number:
            number[root] = len(number)
        out.append(number[root])
    return len(number), out[:b_size], out[b_size:]


def pushout_finset(f: FiniteFunction, g: FiniteFunction) -> PushoutResult:
    """Canonical pushout of a span of finite sets f: A -> B, g: A -> C."""
    if f.dom != g.dom:
        raise MismatchError(f"span legs have different apex: {f.dom} vs {g.dom}")
    n, bmap, cmap = _merge_classes(
        f.cod.size, g.cod.size, zip(f.table, g.table)
    )
    apex = FiniteSet(n)
    return PushoutResult(
        apex,
        FiniteFunction(f.cod, apex, tuple(bmap)),
        FiniteFunction(g.cod, apex, tuple(cmap)),
        (f, g),
    )


def pushout_graph(f: GraphHom, g: GraphHom) -> PushoutResult:
    """Canonical pushout of a span of graphs, computed pointwise.

    Vertices and edges are glued independently; endpoint tables of the
    apex are forced by either injection (they agree on every class
    because both legs are homomorphisms).
    """
    if f.dom != g.dom:
        raise MismatchError("span legs have different apex graph")
    nv, bvmap, cvmap = _merge_classes(
        f.cod.vertices, g.cod.vertices, zip(f.vmap, g.vmap)
    )
    ne, bemap, cemap = _merge_classes(
        f.cod.edges, g.cod.edges, zip(f.emap, g.emap)
    )
    src = [0] * ne
    tgt = [0] * ne
    for e in range(f.cod.edges):
        src[bemap[e]] = bvmap[f.cod.src[e]]
        tgt[bemap[e]] = bvmap[f.cod.tgt[e]]
    for e in range(g.cod.edges):
        src[cemap[e]] = cvmap[g.cod.src[e]]
        tgt[cemap[e]] = cvmap[g.cod.tgt[e]]
    apex = FiniteGraph(nv, ne, tuple(src), tuple(tgt))
    return PushoutResult(
        apex,
        GraphHom(f.cod, apex, tuple(bvmap), tuple(bemap)),
        GraphHom(g.cod, apex, tuple(cvmap), tuple(cemap)),
        (f, g),
    )


def _mediate_tables(left_inj, right_inj, u_table, v_table, apex_size, f, g, kind):
    """Shared mediating-map core: fill a table on the pushout apex."""
    for a, (fa, ga) in enumerate(zip(f, g)):
        if u_table[fa] != v_table[ga]:
            raise CoconeError(
                f"not a cocone: legs disagree on {kind} {a} "
                f"(u(f({a}))={u_table[fa]}, v(g({a}))={v_table[ga]})",
                witness=a,
            )
    table = [None] * apex_size
    for x, px in enumerate(left_inj):
        table[px] = u_table[x]
    for y, py in enumerate(right_inj):
        if table[py] is None:
            table[py] = v_table[y]
        elif table[py] != v_table[y]:
            # cannot happen if the cocone condition held; guard anyway
            raise CoconeError(
                f"injections force conflicting values on apex {kind} {py}", witness=py
            )
    return tuple(table)


def mediating_finset(po: PushoutResult, u: FiniteFunction, v: FiniteFunction) -> FiniteFunction:
    """Unique map from the pushout apex induced by a cocone (u, v).

    Requires u∘f == v∘g for the glued span (f, g); raises CoconeError
    with a witness element otherwise.
    """
    f, g = po.span
    if u.dom != f.cod or v.dom != g.cod:
        raise MismatchError("cocone legs do not start at the pushout feet")
    if u.cod != v.cod:
        raise MismatchError("cocone legs have different codomain")
    table = _mediate_tables(
        po.left_inj.table, po.right_inj.table, u.table, v.table,
        po.apex.size, f.table, g.table, "element",
    )
    return FiniteFunction(po.apex, u.cod, table)


def mediating_graph(po: PushoutResult, u: GraphHom, v: GraphHom) -> GraphHom:
    f, g = po.span
    if u.dom != f.cod or v.dom != g.cod:
        raise MismatchError("cocone legs do not start at the pushout feet")
    if u.cod != v.cod:
        raise MismatchError("cocone legs have different codomain")
    vtable = _mediate_tables(
        po.left_inj.vmap, po.right_inj.vmap, u.vmap, v.vmap,
        po.apex.vertices, f.vmap, g.vmap, "vertex",
    )
    etable = _mediate_tables(
        po.left_inj.emap, po.right_inj.emap, u.emap, v.emap,
        po.apex.edges, f.emap, g.emap, "edge",
    )
    return GraphHom(po.apex, u.cod, vtable, etable)


class FinSetCat:
    """Dispatch object for the category of finite sets."""

    name = "finset"
    Object = FiniteSet
    Map = FiniteFunction

    @staticmethod
    def identity(obj):
        return FiniteFunction.identity(obj)

    @staticmethod
    def compose(f, g):
        """Diagrammatic: f then g."""
        return f.then(g)

    @staticmethod
    def pushout(f, g):
        return pushout_finset(f, g)

    @staticmethod
    def mediating(po, u, v):
        return mediating_finset(po, u, v)

    @staticmethod
    def equal(f, g):
        return f == g

    @staticmethod
    def size(obj):
        return obj.size

    @staticmethod
    def empty():
        return FiniteSet(0)

    @staticmethod
    def elements(obj):
        return [("element", i) for i in range(obj.size)]

    @staticmethod
    def all_objects(max_size):
        return [FiniteSet(n) for n in range(max_size + 1)]

    @staticmethod
    def all_maps(dom, cod):
        if dom.size == 0:
            return [FiniteFunction(dom, cod, ())]
        if cod.size == 0:
            return []
        return [
            FiniteFunction(dom, cod, t)
            for t in itertools.product(range(cod.size), repeat=dom.size)
        ]

    @staticmethod
    def all_isos(dom, cod):
        if dom.size != cod.size:
            return []
        return [
            FiniteFunction(dom, cod, p)
            for p in itertools.permutations(range(cod.size))
        ]


class FinGraphCat:
    """Dispatch object for the category of finite directed multigraphs."""

    name = "fingraph"
    Object = FiniteGraph
    Map = GraphHom

    @staticmethod
    def identity(obj):
        return GraphHom.identity(obj)

    @staticmethod
    def compose(f, g):
        return f.then(g)

    @staticmethod
    def pushout(f, g):
        return pushout_graph(f, g)

    @staticmethod
    def mediating(po, u, v):
        return mediating_graph(po, u, v)

    @staticmethod
    def equal(f, g):
        return f == g

    @staticmethod
    def size(obj):
        return obj.vertices + obj.edges

    @staticmethod
    def empty():
        return FiniteGraph(0, 0, (), ())

    @staticmethod
    def elements(obj):
        return [("vertex", i) for i in range(obj.vertices)] + [
            ("edge", e) for e in range(obj.edges)
        ]

    @staticmethod
    def all_maps(dom, cod):
        """Enumerate all homomorphisms dom -> cod. Exponential; keep inputs tiny."""
        out = []
        if dom.vertices > 0 and cod.vertices == 0:
            return out
        for vmap in itertools.product(range(max(cod.vertices, 1)), repeat=dom.vertices):
            if dom.vertices > 0:
                vm = vmap
            else:
                vm = ()
            choices = []
            ok = True
            for e in range(dom.edges):
                fits = [
                    fe
                    for fe in range(cod.edges)
                    if cod.src[fe] == vm[dom.src[e]] and cod.tgt[fe] == vm[dom.tgt[e]]
                ]
                if not fits:
                    ok = False
                    break
                choices.append(fits)
            if not ok:
                continue
            for emap in itertools.product(*choices):
                out.append(GraphHom(dom, cod, vm, tuple(emap)))
        return out

    @staticmethod
    def all_isos(dom, cod):
        if dom.vertices != cod.vertices or dom.edges != cod.edges:
            return []
        out = []
        for vmap in itertools.permutations(range(cod.vertices)):
            choices = []
            ok = True
            for e in range(dom.edges):
                fits = [
                    fe
                    for fe in range(cod.edges)
                    if cod.src[fe] == vmap[dom.src[e]] and cod.tgt[fe] == vmap[dom.tgt[e]]
                ]
                if not fits:
                    ok = False
                    break
                choices.append(fits)
            if not ok:
                continue
            for emap in itertools.product(*choices):
                if len(set(emap)) == dom.edges:
                    out.append(GraphHom(dom, cod, vmap, tuple(emap)))
        return out


FINSET = FinSetCat()
FINGRAPH = FinGraphCat()

BASES = {"finset": FINSET, "fingraph": FINGRAPH}


def base_of(obj) -> object:
    """Return the dispatch object governing a set or graph."""
    if isinstance(obj, FiniteSet):
        return FINSET
    if isinstance(obj, FiniteGraph):
        return FINGRAPH
    raise MismatchError(f"not a known base object: {obj!r}")


def compose_functions(f: FiniteFunction, g: FiniteFunction) -> FiniteFunction:
    """Diagrammatic composite, f then g."""
    return f.then(g)


def is_isomorphism(f) -> bool:
    """True when a set or graph map is invertible."""
    return f.is_iso()


def mediating_map(po: PushoutResult, u, v):
    """Mediating morphism out of a pushout apex, for either base."""
    if isinstance(u, GraphHom):
        return mediating_graph(po, u, v)
    return mediating_finset(po, u, v)
