"""Squares of cospans: 3x3 diagrams, their compositions, and iso classes.

A DoubleCospan is a square with cospans on all four sides and a center
object receiving all four apexes, such that the four corner squares
commute. Squares compose horizontally (sharing a column) and vertically
(sharing a row) by pushout of centers. Cylinders are maps between
squares; a DoubleCell is a commuting square of cylinders. Squares are
compared up to isomorphism relative to their boundary, and invertible
cospan maps act on squares by substitution along an edge.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, replace

from .base import FiniteFunction, FiniteGraph, FiniteSet, GraphHom
from .cospans import (
    Cospan,
    CospanMap,
    compose_cospans,
    composition_pushout,
    identity_cospan,
    identity_map,
    hcomp,
    vcomp,
)
from .errors import MismatchError, ValidationError


def _first_disagreement(f, g):
    """Locate an element where two parallel maps differ, for witnesses."""
    if isinstance(f, FiniteFunction):
        for i, (x, y) in enumerate(zip(f.table, g.table)):
            if x != y:
                return ("element", i, x, y)
    else:
        for i, (x, y) in enumerate(zip(f.vmap, g.vmap)):
            if x != y:
                return ("vertex", i, x, y)
        for e, (x, y) in enumerate(zip(f.emap, g.emap)):
            if x != y:
                return ("edge", e, x, y)
    return None


def validate_double_cospan(d: "DoubleCospan") -> None:
    """Check feet agreement and the four corner squares; raise with a witness."""
    corners = (
        ("top-left", d.top.left_foot, d.left.left_foot),
        ("top-right", d.top.right_foot, d.right.left_foot),
        ("bottom-left", d.bottom.left_foot, d.left.right_foot),
        ("bottom-right", d.bottom.right_foot, d.right.right_foot),
    )
    for name, a, b in corners:
        if a != b:
            raise ValidationError(
                f"{name} corner mismatch: row foot {a!r} != column foot {b!r}",
                location=name,
            )
    base = d.top.base
    maps = (
        ("from_top", d.from_top, d.top.apex),
        ("from_bottom", d.from_bottom, d.bottom.apex),
        ("from_left", d.from_left, d.left.apex),
        ("from_right", d.from_right, d.right.apex),
    )
    for name, m, apex in maps:
        if m.dom != apex:
            raise ValidationError(f"{name} does not start at its edge apex", location=name)
        if m.cod != d.center:
            raise ValidationError(f"{name} does not land in the center", location=name)
    squares = (
        ("top-left", d.top.left_leg, d.from_top, d.left.left_leg, d.from_left),
        ("top-right", d.top.right_leg, d.from_top, d.right.left_leg, d.from_right),
        ("bottom-left", d.bottom.left_leg, d.from_bottom, d.left.right_leg, d.from_left),
        ("bottom-right", d.bottom.right_leg, d.from_bottom, d.right.right_leg, d.from_right),
    )
    for name, row_leg, row_map, col_leg, col_map in squares:
        via_row = base.compose(row_leg, row_map)
        via_col = base.compose(col_leg, col_map)
        if not base.equal(via_row, via_col):
            raise ValidationError(
                f"{name} corner square does not commute",
                location=name,
                witness=_first_disagreement(via_row, via_col),
            )


@dataclass(frozen=True)
class DoubleCospan:
    """A square: row cospans top/bottom, column cospans left/right, a center.

    Columns are read top to bottom, so left.left_foot is the top-left
    corner. The four maps send each side's apex into the center; the
    constructor checks all four corner squares.
    """

    top: Cospan
    bottom: Cospan
    left: Cospan
    right: Cospan
    center: object
    from_top: object
    from_bottom: object
    from_left: object
    from_right: object

    def __post_init__(self):
        validate_double_cospan(self)

    @property
    def base(self):
        return self.top.base

    def boundary(self):
        return (self.top, self.bottom, self.left, self.right)

    def edge(self, name: str) -> Cospan:
        return getattr(self, name)

    def edge_map(self, name: str):
        return getattr(self, "from_" + name)

    def transpose(self) -> "DoubleCospan":
        """Swap the roles of rows and columns."""
        return DoubleCospan(
            top=self.left,
            bottom=self.right,
            left=self.top,
            right=self.bottom,
            center=self.center,
            from_top=self.from_left,
            from_bottom=self.from_right,
            from_left=self.from_top,
            from_right=self.from_bottom,
        )

    def __repr__(self):
        return (
            f"DoubleCospan(top={self.top!r}, bottom={self.bottom!r}, "
            f"left={self.left!r}, right={self.right!r}, center={self.center!r})"
        )


def center_pushout(d1: DoubleCospan, d2: DoubleCospan):
    """Pushout glueing two centers along a shared column apex."""
    return d1.base.pushout(d1.from_right, d2.from_left)


def hcompose(d1: DoubleCospan, d2: DoubleCospan) -> DoubleCospan:
    """Glue two squares along d1's right column (== d2's left column)."""
    if d1.right != d2.left:
        raise MismatchError(
            f"not composable: right column {d1.right!r} != left column {d2.left!r}"
        )
    base = d1.base
    po_c = center_pushout(d1, d2)
    po_top = composition_pushout(d1.top, d2.top)
    po_bot = composition_pushout(d1.bottom, d2.bottom)
    from_top = base.mediating(
        po_top,
        base.compose(d1.from_top, po_c.left_inj),
        base.compose(d2.from_top, po_c.right_inj),
    )
    from_bottom = base.mediating(
        po_bot,
        base.compose(d1.from_bottom, po_c.left_inj),
        base.compose(d2.from_bottom, po_c.right_inj),
    )
    return DoubleCospan(
        top=compose_cospans(d1.top, d2.top),
        bottom=compose_cospans(d1.bottom, d2.bottom),
        left=d1.left,
        right=d2.right,
        center=po_c.apex,
        from_top=from_top,
        from_bottom=from_bottom,
        from_left=base.compose(d1.from_left, po_c.left_inj),
        from_right=base.compose(d2.from_right, po_c.right_inj),
    )


def vcompose(d1: DoubleCospan, d2: DoubleCospan) -> DoubleCospan:
    """Glue two squares along d1's bottom row (== d2's top row)."""
    if d1.bottom != d2.top:
        raise MismatchError(
            f"not composable: bottom row {d1.bottom!r} != top row {d2.top!r}"
        )
    return hcompose(d1.transpose(), d2.transpose()).transpose()


def h_identity(v: Cospan) -> DoubleCospan:
    """Identity square for horizontal composition, on a column cospan v."""
    b = v.base
    return DoubleCospan(
        top=identity_cospan(v.left_foot),
        bottom=identity_cospan(v.right_foot),
        left=v,
        right=v,
        center=v.apex,
        from_top=v.left_leg,
        from_bottom=v.right_leg,
        from_left=b.identity(v.apex),
        from_right=b.identity(v.apex),
    )


def v_identity(h: Cospan) -> DoubleCospan:
    """Identity square for vertical composition, on a row cospan h."""
    return h_identity(h).transpose()


@dataclass(frozen=True)
class Cylinder:
    """Map between two squares that fixes one pair of opposite edges.

    Orientation "h": source and target share their left and right
    columns; bigon1 maps top row to top row, bigon2 bottom to bottom.
    Orientation "v": shared rows, bigon1 on the left columns, bigon2 on
    the right. The core maps center to center compatibly with all four
    edge maps.
    """

    orientation: str
    source: DoubleCospan
    target: DoubleCospan
    bigon1: CospanMap
    bigon2: CospanMap
    core: object

    def __post_init__(self):
        if self.orientation not in ("h", "v"):
            raise ValidationError(f"unknown orientation {self.orientation!r}")
        s, t = self.source, self.target
        base = s.base
        if self.core.dom != s.center or self.core.cod != t.center:
            raise ValidationError("core has wrong endpoints", location="core")
        if self.orientation == "h":
            moving = ("top", "bottom")
            fixed = ("left", "right")
        else:
            moving = ("left", "right")
            fixed = ("top", "bottom")
        for name in fixed:
            if s.edge(name) != t.edge(name):
                raise ValidationError(
                    f"{name} edge not shared between source and target", location=name
                )
            lhs = base.compose(s.edge_map(name), self.core)
            rhs = t.edge_map(name)
            if not base.equal(lhs, rhs):
                raise ValidationError(
                    f"core does not fix the {name} edge map",
                    location=name,
                    witness=_first_disagreement(lhs, rhs),
                )
        for name, bigon in zip(moving, (self.bigon1, self.bigon2)):
            if bigon.source != s.edge(name) or bigon.target != t.edge(name):
                raise ValidationError(
                    f"bigon on {name} has wrong endpoints", location=name
                )
            lhs = base.compose(s.edge_map(name), self.core)
            rhs = base.compose(bigon.map, t.edge_map(name))
            if not base.equal(lhs, rhs):
                raise ValidationError(
                    f"core does not commute over the {name} bigon",
                    location=name,
                    witness=_first_disagreement(lhs, rhs),
                )

    @property
    def base(self):
        return self.source.base

    def transpose(self) -> "Cylinder":
        return Cylinder(
            "v" if self.orientation == "h" else "h",
            self.source.transpose(),
            self.target.transpose(),
            self.bigon1,
            self.bigon2,
            self.core,
        )

    def is_invertible(self) -> bool:
        return self.core.is_iso() and self.bigon1.is_invertible() and self.bigon2.is_invertible()


def identity_cylinder(d: DoubleCospan, orientation: str = "h") -> Cylinder:
    edges = ("top", "bottom") if orientation == "h" else ("left", "right")
    return Cylinder(
        orientation,
        d,
        d,
        identity_map(d.edge(edges[0])),
        identity_map(d.edge(edges[1])),
        d.base.identity(d.center),
    )


def compose_cylinders(c1: Cylinder, c2: Cylinder, axis: str = "along") -> Cylinder:
    """Compose cylinders.

    axis="along": stack c1 then c2 (c1.target == c2.source); cores and
    bigons compose end to end. axis="transverse": put them side by
    side in their squares' composition direction ("h" cylinders over a
    shared column, "v" over a shared row); the composite core is the
    mediating map out of the glued source center.
    """
    if c1.orientation != c2.orientation:
        raise MismatchError("cylinders have different orientations")
    base = c1.base
    if axis == "along":
        if c1.target != c2.source:
            raise MismatchError("cylinders not stackable: middle squares differ")
        return Cylinder(
            c1.orientation,
            c1.source,
            c2.target,
            vcomp(c1.bigon1, c2.bigon1),
            vcomp(c1.bigon2, c2.bigon2),
            base.compose(c1.core, c2.core),
        )
    if axis != "transverse":
        raise MismatchError(f"unknown axis {axis!r}")
    if c1.orientation == "v":
        return compose_cylinders(c1.transpose(), c2.transpose(), "transverse").transpose()
    src = hcompose(c1.source, c2.source)
    tgt = hcompose(c1.target, c2.target)
    po_s = center_pushout(c1.source, c2.source)
    po_t = center_pushout(c1.target, c2.target)
    core = base.mediating(
        po_s,
        base.compose(c1.core, po_t.left_inj),
        base.compose(c2.core, po_t.right_inj),
    )
    return Cylinder(
        "h",
        src,
        tgt,
        hcomp(c1.bigon1, c2.bigon1),
        hcomp(c1.bigon2, c2.bigon2),
        core,
    )


@dataclass(frozen=True)
class DoubleCell:
    """Commuting square of cylinders over a square of squares.

        D  --row1-->  D_a
        |              |
      col1           col2
        v              v
       D_b --row2--> D_ab

    row1 and row2 are "h" cylinders carrying the same pair of bigons;
    col1 and col2 are "v" cylinders likewise, and the four cores
    commute. Cells of this shape are validated and carried around but
    have no composition algebra of their own.
    """

    row1: Cylinder
    row2: Cylinder
    col1: Cylinder
    col2: Cylinder

    def __post_init__(self):
        if self.row1.orientation != "h" or self.row2.orientation != "h":
            raise ValidationError("row cylinders must have orientation h")
        if self.col1.orientation != "v" or self.col2.orientation != "v":
            raise ValidationError("column cylinders must have orientation v")
        if self.row1.source != self.col1.source:
            raise ValidationError("row1 and col1 must start at the same square")
        if self.row1.target != self.col2.source:
            raise ValidationError("col2 must start where row1 ends")
        if self.col1.target != self.row2.source:
            raise ValidationError("row2 must start where col1 ends")
        if self.row2.target != self.col2.target:
            raise ValidationError("row2 and col2 must end at the same square")
        if (self.row1.bigon1, self.row1.bigon2) != (self.row2.bigon1, self.row2.bigon2):
            raise ValidationError("row cylinders must share their bigons", location="rows")
        if (self.col1.bigon1, self.col1.bigon2) != (self.col2.bigon1, self.col2.bigon2):
            raise ValidationError("column cylinders must share their bigons", location="columns")
        base = self.row1.base
        via_row = base.compose(self.row1.core, self.col2.core)
        via_col = base.compose(self.col1.core, self.row2.core)
        if not base.equal(via_row, via_col):
            raise ValidationError(
                "cylinder cores do not commute",
                location="core",
                witness=_first_disagreement(via_row, via_col),
            )

    @property
    def source(self) -> DoubleCospan:
        return self.row1.source

    @property
    def target(self) -> DoubleCospan:
        return self.row2.target

    @property
    def core(self):
        return self.row1.base.compose(self.row1.core, self.col2.core)


def _profiles_finset(d: DoubleCospan):
    pre = [([], [], [], []) for _ in range(d.center.size)]
    for k, m in enumerate((d.from_top, d.from_bottom, d.from_left, d.from_right)):
        for x, v in enumerate(m.table):
            pre[v][k].append(x)
    return [tuple(tuple(p) for p in slots) for slots in pre]


def signature(d: DoubleCospan):
    """Boundary-respecting invariant of a square's center.

    Two squares isomorphic rel boundary have equal signatures; the
    converse can fail, so this is a prefilter and a hash, not a
    decision procedure.
    """
    if isinstance(d.center, FiniteSet):
        return ("finset", tuple(sorted(_profiles_finset(d))))
    g = d.center
    vpre = [([], [], [], []) for _ in range(g.vertices)]
    epre = [([], [], [], []) for _ in range(g.edges)]
    for k, m in enumerate((d.from_top, d.from_bottom, d.from_left, d.from_right)):
        for x, v in enumerate(m.vmap):
            vpre[v][k].append(x)
        for e, fe in enumerate(m.emap):
            epre[fe][k].append(e)
    indeg = [0] * g.vertices
    outdeg = [0] * g.vertices
    for e in range(g.edges):
        outdeg[g.src[e]] += 1
        indeg[g.tgt[e]] += 1
    vprof = [
        (indeg[v], outdeg[v]) + tuple(tuple(p) for p in vpre[v]) for v in range(g.vertices)
    ]
    eprof = [tuple(tuple(p) for p in epre[e]) for e in range(g.edges)]
    return ("fingraph", tuple(sorted(vprof)), tuple(sorted(eprof)))


def _forced(phi, used, m, m2):
    if phi[m] is None:
        if used[m2]:
            return False
        phi[m] = m2
        used[m2] = True
        return True
    return phi[m] == m2


def _iso_finset(A: FiniteSet, B: FiniteSet, pairs):
    n = A.size
    if B.size != n:
        return None
    phi = [None] * n
    used = [False] * n
    for fa, fb in pairs:
        for x in range(fa.dom.size):
            if not _forced(phi, used, fa.table[x], fb.table[x]):
                return None
    free_a = [m for m in range(n) if phi[m] is None]
    free_b = [m for m in range(n) if not used[m]]
    for m, m2 in zip(free_a, free_b):
        phi[m] = m2
    return FiniteFunction(A, B, tuple(phi))


def _iso_graph(A: FiniteGraph, B: FiniteGraph, pairs):
    if A.vertices != B.vertices or A.edges != B.edges:
        return None
    vphi = [None] * A.vertices
    vused = [False] * B.vertices
    ephi = [None] * A.edges
    eused = [False] * B.edges
    for fa, fb in pairs:
        for x in range(fa.dom.vertices):
            if not _forced(vphi, vused, fa.vmap[x], fb.vmap[x]):
                return None
        for e in range(fa.dom.edges):
            if not _forced(ephi, eused, fa.emap[e], fb.emap[e]):
                return None
    # a forced edge pins down its endpoints
    for e, e2 in enumerate(ephi):
        if e2 is not None:
            if not _forced(vphi, vused, A.src[e], B.src[e2]):
                return None
            if not _forced(vphi, vused, A.tgt[e], B.tgt[e2]):
                return None

    def degrees(g):
        indeg = [0] * g.vertices
        outdeg = [0] * g.vertices
        for e in range(g.edges):
            outdeg[g.src[e]] += 1
            indeg[g.tgt[e]] += 1
        return indeg, outdeg

    ain, aout = degrees(A)
    bin_, bout = degrees(B)
    free_a = [v for v in range(A.vertices) if vphi[v] is None]

    def complete_edges(vm):
        em = list(ephi)
        for e, e2 in enumerate(em):
            if e2 is not None and (B.src[e2] != vm[A.src[e]] or B.tgt[e2] != vm[A.tgt[e]]):
                return None
        buckets = defaultdict(list)
        for e2 in range(B.edges):
            if not eused[e2]:
                buckets[(B.src[e2], B.tgt[e2])].append(e2)
        for e in range(A.edges):
            if em[e] is None:
                bucket = buckets.get((vm[A.src[e]], vm[A.tgt[e]]))
                if not bucket:
                    return None
                em[e] = bucket.pop()
        return em

    def extend(i):
        if i == len(free_a):
            em = complete_edges(vphi)
            if em is None:
                return None
            return GraphHom(A, B, tuple(vphi), tuple(em))
        v = free_a[i]
        for v2 in range(B.vertices):
            if vused[v2] or ain[v] != bin_[v2] or aout[v] != bout[v2]:
                continue
            vphi[v] = v2
            vused[v2] = True
            found = extend(i + 1)
            if found is not None:
                return found
            vphi[v] = None
            vused[v2] = False
        return None

    return extend(0)


def match_center_iso(A, B, pairs):
    """Bijection phi: A -> B with fa ; phi == fb for every pair, or None.

    Each pair (fa, fb) consists of parallel maps into A and B with a
    common domain; phi is forced on their images and extended freely on
    the rest. Used both for square isomorphism and for solving filler
    face equations.
    """
    if isinstance(A, FiniteSet):
        return _iso_finset(A, B, pairs)
    return _iso_graph(A, B, pairs)


def square_iso(a: DoubleCospan, b: DoubleCospan):
    """Center isomorphism rel boundary, or None if there is none.

    The two squares must have literally equal boundaries; comparing
    squares with different frames raises MismatchError. The returned
    map phi satisfies from_e ; phi == from_e' on all four edges and is
    a bijection on centers.
    """
    if a.boundary() != b.boundary():
        raise MismatchError("squares have different boundaries, not comparable")
    if signature(a) != signature(b):
        return None
    pairs = (
        (a.from_top, b.from_top),
        (a.from_bottom, b.from_bottom),
        (a.from_left, b.from_left),
        (a.from_right, b.from_right),
    )
    return match_center_iso(a.center, b.center, pairs)


def squares_isomorphic(a: DoubleCospan, b: DoubleCospan) -> bool:
    """Same as square_iso but a plain yes/no, False on different frames."""
    try:
        return square_iso(a, b) is not None
    except MismatchError:
        return False


class SquareClass:
    """Isomorphism class of squares rel boundary, held by a representative."""

    __slots__ = ("rep", "_sig")

    def __init__(self, rep: DoubleCospan):
        self.rep = rep
        self._sig = None

    @property
    def signature(self):
        if self._sig is None:
            self._sig = signature(self.rep)
        return self._sig

    def boundary(self):
        return self.rep.boundary()

    def __eq__(self, other):
        if not isinstance(other, SquareClass):
            return NotImplemented
        if self.rep.boundary() != other.rep.boundary():
            return False
        if self.signature != other.signature:
            return False
        return square_iso(self.rep, other.rep) is not None

    def __hash__(self):
        return hash((self.rep.boundary(), self.signature))

    def __repr__(self):
        return f"SquareClass({self.rep!r})"


_EDGES = ("top", "bottom", "left", "right")


def act_square(d: DoubleCospan, alpha: CospanMap, edge: str) -> DoubleCospan:
    """Substitute an invertible cospan map into one edge of a square.

    Requires alpha.target == the named edge; the result replaces that
    edge with alpha.source and precomposes the edge-to-center map with
    alpha. The center is untouched, so this is invertible on squares
    and descends to classes.
    """
    if edge not in _EDGES:
        raise MismatchError(f"unknown edge {edge!r}")
    if not alpha.is_invertible():
        raise MismatchError("only invertible cospan maps act on squares")
    if alpha.target != d.edge(edge):
        raise MismatchError(f"map does not end at the {edge} edge of the square")
    base = d.base
    return replace(
        d,
        **{
            edge: alpha.source,
            "from_" + edge: base.compose(alpha.map, d.edge_map(edge)),
        },
    )


def act_h(alpha: CospanMap, p: DoubleCospan, side: str) -> DoubleCospan:
    """Act on a row: side="left" rewrites the top row, "right" the bottom."""
    if side == "left":
        return act_square(p, alpha, "top")
    if side == "right":
        return act_square(p, alpha, "bottom")
    raise MismatchError(f"unknown side {side!r}")


def act_v(alpha: CospanMap, p: DoubleCospan, side: str) -> DoubleCospan:
    """Act on a column: side="left" rewrites the left column, "right" the right."""
    if side == "left":
        return act_square(p, alpha, "left")
    if side == "right":
        return act_square(p, alpha, "right")
    raise MismatchError(f"unknown side {side!r}")
