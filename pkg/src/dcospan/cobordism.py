"""Combinatorial cobordisms with corners, as squares of graph cospans.

A cobordism square is a DoubleCospan over finite graphs whose twelve
structure maps (eight cospan legs, four edge-to-center maps) are all
injective, and whose boundary cospans have disjoint feet images except
for literal identity cospans, which are admitted as degenerate collar
units. Gluing is square composition followed by re-validation; the
Euler characteristic of the center is additive over gluing, corrected
by the shared boundary apex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base import FINGRAPH, FiniteGraph, GraphHom
from .cospans import Cospan, identity_cospan
from .double import DoubleCospan, h_identity, hcompose, v_identity, vcompose
from .errors import MismatchError, ValidationError


def _injective(h: GraphHom) -> bool:
    return len(set(h.vmap)) == len(h.vmap) and len(set(h.emap)) == len(h.emap)


def _images_overlap(f: GraphHom, g: GraphHom):
    shared_v = set(f.vmap) & set(g.vmap)
    if shared_v:
        return ("vertex", min(shared_v))
    shared_e = set(f.emap) & set(g.emap)
    if shared_e:
        return ("edge", min(shared_e))
    return None


def validate_cobordism(d: DoubleCospan) -> None:
    """Injectivity of all structure maps plus collar disjointness."""
    if not isinstance(d.center, FiniteGraph):
        raise ValidationError("cobordism squares live over finite graphs")
    legs = []
    for name in ("top", "bottom", "left", "right"):
        edge = d.edge(name)
        legs.append((f"{name} left leg", edge.left_leg))
        legs.append((f"{name} right leg", edge.right_leg))
        legs.append((f"from_{name}", d.edge_map(name)))
    for label, m in legs:
        if not _injective(m):
            raise ValidationError(
                f"{label} is not injective", location=label
            )
    for name in ("top", "bottom", "left", "right"):
        edge = d.edge(name)
        if edge.is_identity():
            continue
        hit = _images_overlap(edge.left_leg, edge.right_leg)
        if hit is not None:
            raise ValidationError(
                f"feet of the {name} cospan overlap in its apex",
                location=name,
                witness=hit,
            )


@dataclass(frozen=True)
class CombCobordism:
    """A validated cobordism square with a dimension tag."""

    square: DoubleCospan
    dimension: int = 2

    def __post_init__(self):
        validate_cobordism(self.square)

    @property
    def center(self) -> FiniteGraph:
        return self.square.center

    def chi(self) -> int:
        return euler_characteristic(self.center)

    def transpose(self) -> "CombCobordism":
        return CombCobordism(self.square.transpose(), self.dimension)

    def __repr__(self):
        return f"CombCobordism(chi={self.chi()}, {self.square!r})"


def euler_characteristic(g: FiniteGraph) -> int:
    return g.vertices - g.edges


def glue_h(a: CombCobordism, b: CombCobordism) -> CombCobordism:
    """Glue along a's right column; the result is validated again."""
    return CombCobordism(hcompose(a.square, b.square), a.dimension)


def glue_v(a: CombCobordism, b: CombCobordism) -> CombCobordism:
    """Glue along a's bottom row; the result is validated again."""
    return CombCobordism(vcompose(a.square, b.square), a.dimension)


# ---------------------------------------------------------------------------
# a small catalog of generator squares

POINT = FiniteGraph(1, 0, (), ())
INTERVAL = FiniteGraph(2, 1, (0,), (1,))
CIRCLE = FiniteGraph(2, 2, (0, 1), (1, 0))
TWO_CIRCLES = FiniteGraph(4, 4, (0, 1, 2, 3), (1, 0, 3, 2))
EMPTY = FiniteGraph(0, 0, (), ())

# pair of pants: two circles flow into one; chi = -2
PANTS_CENTER = FiniteGraph(4, 6, (0, 1, 2, 3, 1, 3), (1, 0, 3, 2, 2, 0))


def _vertex_map(dom, cod, *images) -> GraphHom:
    return GraphHom(dom, cod, tuple(images), ())


def interval_cospan() -> Cospan:
    """Point to point through an interval: the collar of an edge."""
    return Cospan(
        _vertex_map(POINT, INTERVAL, 0),
        _vertex_map(POINT, INTERVAL, 1),
    )


def circle_cospan(circle: FiniteGraph = CIRCLE) -> Cospan:
    """A closed boundary component: empty feet into a cycle."""
    empty_leg = GraphHom(EMPTY, circle, (), ())
    return Cospan(empty_leg, empty_leg)


def catalog() -> dict:
    """Named generator cobordisms, engineered to glue with each other."""
    iv = interval_cospan()
    pt = identity_cospan(POINT)

    point_square = CombCobordism(h_identity(pt))
    h_strip = CombCobordism(h_identity(iv))
    v_strip = CombCobordism(v_identity(iv))

    # flat surface patch: four intervals around a directed square
    patch = FiniteGraph(4, 4, (0, 2, 0, 1), (1, 3, 2, 3))
    sheet = CombCobordism(
        DoubleCospan(
            top=iv,
            bottom=iv,
            left=iv,
            right=iv,
            center=patch,
            from_top=GraphHom(INTERVAL, patch, (0, 1), (0,)),
            from_bottom=GraphHom(INTERVAL, patch, (2, 3), (1,)),
            from_left=GraphHom(INTERVAL, patch, (0, 2), (2,)),
            from_right=GraphHom(INTERVAL, patch, (1, 3), (3,)),
        )
    )

    # top interval slides down both side intervals onto one point
    vee = FiniteGraph(3, 3, (0, 0, 1), (1, 2, 2))
    cup = CombCobordism(
        DoubleCospan(
            top=iv,
            bottom=pt,
            left=iv,
            right=iv,
            center=vee,
            from_top=GraphHom(INTERVAL, vee, (0, 1), (0,)),
            from_bottom=_vertex_map(POINT, vee, 2),
            from_left=GraphHom(INTERVAL, vee, (0, 2), (1,)),
            from_right=GraphHom(INTERVAL, vee, (1, 2), (2,)),
        )
    )

    # quarter turns: boundary enters on one edge and leaves on an
    # adjacent one; the center is a 2-cycle
    elbow = CombCobordism(
        DoubleCospan(
            top=iv,
            bottom=pt,
            left=pt,
            right=iv,
            center=CIRCLE,
            from_top=GraphHom(INTERVAL, CIRCLE, (0, 1), (0,)),
            from_bottom=_vertex_map(POINT, CIRCLE, 0),
            from_left=_vertex_map(POINT, CIRCLE, 0),
            from_right=GraphHom(INTERVAL, CIRCLE, (1, 0), (1,)),
        )
    )
    elbow2 = CombCobordism(
        DoubleCospan(
            top=pt,
            bottom=iv,
            left=iv,
            right=pt,
            center=CIRCLE,
            from_top=_vertex_map(POINT, CIRCLE, 0),
            from_bottom=GraphHom(INTERVAL, CIRCLE, (1, 0), (1,)),
            from_left=GraphHom(INTERVAL, CIRCLE, (0, 1), (0,)),
            from_right=_vertex_map(POINT, CIRCLE, 0),
        )
    )

    tube = CombCobordism(
        DoubleCospan(
            top=circle_cospan(),
            bottom=circle_cospan(),
            left=identity_cospan(EMPTY),
            right=identity_cospan(EMPTY),
            center=CIRCLE,
            from_top=GraphHom.identity(CIRCLE),
            from_bottom=GraphHom.identity(CIRCLE),
            from_left=GraphHom(EMPTY, CIRCLE, (), ()),
            from_right=GraphHom(EMPTY, CIRCLE, (), ()),
        )
    )

    pants = CombCobordism(
        DoubleCospan(
            top=circle_cospan(TWO_CIRCLES),
            bottom=circle_cospan(),
            left=identity_cospan(EMPTY),
            right=identity_cospan(EMPTY),
            center=PANTS_CENTER,
            from_top=GraphHom(
                TWO_CIRCLES, PANTS_CENTER, (0, 1, 2, 3), (0, 1, 2, 3)
            ),
            from_bottom=GraphHom(CIRCLE, PANTS_CENTER, (0, 1), (0, 1)),
            from_left=GraphHom(EMPTY, PANTS_CENTER, (), ()),
            from_right=GraphHom(EMPTY, PANTS_CENTER, (), ()),
        )
    )

    return {
        "point-square": point_square,
        "h-strip": h_strip,
        "v-strip": v_strip,
        "sheet": sheet,
        "cup": cup,
        "elbow": elbow,
        "elbow2": elbow2,
        "tube": tube,
        "pants": pants,
    }


standard_library = catalog


def glue(a: CombCobordism, b: CombCobordism, direction: str = "h") -> CombCobordism:
    """Glue along the shared vertical ("h") or horizontal ("v") boundary."""
    if direction == "h":
        return glue_h(a, b)
    if direction == "v":
        return glue_v(a, b)
    raise MismatchError(f"unknown direction {direction!r}, expected 'h' or 'v'")


def gluing_pairs(entries: dict) -> list:
    """All ordered pairs from the catalog that glue, with direction."""
    out = []
    for na, a in entries.items():
        for nb, b in entries.items():
            if a.square.right == b.square.left:
                out.append((na, nb, "h"))
            if a.square.bottom == b.square.top:
                out.append((na, nb, "v"))
    return out
