"""Cospans and cospan maps over a finite base, with coherence witnesses.

A cospan x -> S <- y is a 1-cell from x to y; composition glues along
the shared foot by pushout. A cospan map is a 2-cell: a morphism of
apexes commuting with all four legs. Because pushout apexes are
numbered canonically (see base), composition is strictly associative
and strictly unital on the right; the associator and both unitors are
still computed from the universal property and returned as explicit
2-cells, so the coherence laws below are checked rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base import base_of
from .errors import MismatchError, ValidationError
from .report import Verdict


@dataclass(frozen=True)
class Cospan:
    """Two maps into a shared apex: left_leg: x -> S, right_leg: y -> S."""

    left_leg: object
    right_leg: object

    def __post_init__(self):
        if self.left_leg.cod != self.right_leg.cod:
            raise MismatchError(
                f"legs land in different apexes: {self.left_leg.cod} vs {self.right_leg.cod}"
            )

    @property
    def left_foot(self):
        return self.left_leg.dom

    @property
    def right_foot(self):
        return self.right_leg.dom

    @property
    def apex(self):
        return self.left_leg.cod

    @property
    def base(self):
        return base_of(self.apex)

    def is_identity(self) -> bool:
        b = self.base
        return self.left_leg == b.identity(self.left_foot) and self.right_leg == b.identity(
            self.right_foot
        )

    def __repr__(self):
        return f"Cospan({self.left_foot!r} -> {self.apex!r} <- {self.right_foot!r})"


def identity_cospan(x) -> Cospan:
    b = base_of(x)
    return Cospan(b.identity(x), b.identity(x))


def composition_pushout(c: Cospan, d: Cospan):
    """Pushout glueing c's apex to d's apex along the shared foot."""
    if c.right_foot != d.left_foot:
        raise MismatchError(
            f"not composable: right foot {c.right_foot!r} != left foot {d.left_foot!r}"
        )
    return c.base.pushout(c.right_leg, d.left_leg)


def compose_cospans(c: Cospan, d: Cospan) -> Cospan:
    """Composite c;d, feet c.left_foot -> d.right_foot."""
    po = composition_pushout(c, d)
    b = c.base
    return Cospan(b.compose(c.left_leg, po.left_inj), b.compose(d.right_leg, po.right_inj))


@dataclass(frozen=True)
class CospanMap:
    """2-cell between parallel cospans: apex map fixing both feet.

    Requires source and target to share feet, and the apex map to
    commute with both legs.
    """

    source: Cospan
    target: Cospan
    map: object

    def __post_init__(self):
        if self.source.left_foot != self.target.left_foot:
            raise MismatchError("cospan map: left feet differ")
        if self.source.right_foot != self.target.right_foot:
            raise MismatchError("cospan map: right feet differ")
        if self.map.dom != self.source.apex or self.map.cod != self.target.apex:
            raise MismatchError("cospan map: apex map has wrong endpoints")
        b = self.source.base
        if not b.equal(b.compose(self.source.left_leg, self.map), self.target.left_leg):
            raise ValidationError(
                "cospan map does not commute with left legs", location="left_leg"
            )
        if not b.equal(b.compose(self.source.right_leg, self.map), self.target.right_leg):
            raise ValidationError(
                "cospan map does not commute with right legs", location="right_leg"
            )

    @property
    def base(self):
        return self.source.base

    def is_invertible(self) -> bool:
        return self.map.is_iso()

    def inverse(self) -> "CospanMap":
        return CospanMap(self.target, self.source, self.map.inverse())

    def is_identity(self) -> bool:
        return self.source == self.target and self.map == self.base.identity(self.source.apex)

    def __repr__(self):
        return f"CospanMap({self.source!r} => {self.target!r})"


def identity_map(c: Cospan) -> CospanMap:
    return CospanMap(c, c, c.base.identity(c.apex))


def vcomp(a: CospanMap, b: CospanMap) -> CospanMap:
    """Compose 2-cells along a shared middle cospan: a then b."""
    if a.target != b.source:
        raise MismatchError("2-cells not stackable: middle cospans differ")
    return CospanMap(a.source, b.target, a.base.compose(a.map, b.map))


def hcomp(a: CospanMap, b: CospanMap) -> CospanMap:
    """Compose 2-cells side by side: a;b : (f;g) => (f';g').

    The apex map is the mediating map out of the source composite's
    pushout; both whiskerings are special cases with an identity on one
    side.
    """
    if a.source.right_foot != b.source.left_foot:
        raise MismatchError("2-cells not composable side by side")
    base = a.base
    src = compose_cospans(a.source, b.source)
    tgt = compose_cospans(a.target, b.target)
    po_src = composition_pushout(a.source, b.source)
    po_tgt = composition_pushout(a.target, b.target)
    med = base.mediating(
        po_src,
        base.compose(a.map, po_tgt.left_inj),
        base.compose(b.map, po_tgt.right_inj),
    )
    return CospanMap(src, tgt, med)


def associator(f: Cospan, g: Cospan, h: Cospan) -> CospanMap:
    """Canonical 2-cell (f;g);h => f;(g;h), from the universal property.

    Both composites have the same pushout apex up to the mediating
    comparison computed here; the constructor re-checks that it commutes
    with all legs.
    """
    base = f.base
    lhs = compose_cospans(compose_cospans(f, g), h)
    rhs = compose_cospans(f, compose_cospans(g, h))

    po_fg = composition_pushout(f, g)
    po_fg_h = composition_pushout(compose_cospans(f, g), h)
    po_gh = composition_pushout(g, h)
    po_f_gh = composition_pushout(f, compose_cospans(g, h))

    # map on the (f;g) apex into the right-hand composite
    inner = base.mediating(
        po_fg,
        po_f_gh.left_inj,
        base.compose(po_gh.left_inj, po_f_gh.right_inj),
    )
    outer = base.mediating(
        po_fg_h,
        inner,
        base.compose(po_gh.right_inj, po_f_gh.right_inj),
    )
    return CospanMap(lhs, rhs, outer)


def left_unitor(f: Cospan) -> CospanMap:
    """Canonical 2-cell f;1 => f."""
    base = f.base
    src = compose_cospans(f, identity_cospan(f.right_foot))
    po = composition_pushout(f, identity_cospan(f.right_foot))
    med = base.mediating(po, base.identity(f.apex), f.right_leg)
    return CospanMap(src, f, med)


def right_unitor(f: Cospan) -> CospanMap:
    """Canonical 2-cell 1;f => f."""
    base = f.base
    src = compose_cospans(identity_cospan(f.left_foot), f)
    po = composition_pushout(identity_cospan(f.left_foot), f)
    med = base.mediating(po, f.left_leg, base.identity(f.apex))
    return CospanMap(src, f, med)


def pentagon(f: Cospan, g: Cospan, h: Cospan, j: Cospan) -> Verdict:
    """Check the pentagon identity on a composable quadruple."""
    fg = compose_cospans(f, g)
    gh = compose_cospans(g, h)
    hj = compose_cospans(h, j)
    two_step = vcomp(associator(fg, h, j), associator(f, g, hj))
    three_step = vcomp(
        vcomp(hcomp(associator(f, g, h), identity_map(j)), associator(f, gh, j)),
        hcomp(identity_map(f), associator(g, h, j)),
    )
    if two_step == three_step:
        return Verdict.passed("pentagon")
    return Verdict.failed(
        "pentagon",
        f"paths disagree: {two_step.map!r} vs {three_step.map!r}",
        witness=(two_step, three_step),
    )


def triangle(f: Cospan, g: Cospan) -> Verdict:
    """Check the unitor triangle on a composable pair."""
    mid = identity_cospan(f.right_foot)
    via_assoc = vcomp(
        associator(f, mid, g),
        hcomp(identity_map(f), right_unitor(g)),
    )
    direct = hcomp(left_unitor(f), identity_map(g))
    if via_assoc == direct:
        return Verdict.passed("triangle")
    return Verdict.failed(
        "triangle",
        f"paths disagree: {via_assoc.map!r} vs {direct.map!r}",
        witness=(via_assoc, direct),
    )


def interchange_maps(a: CospanMap, b: CospanMap, c: CospanMap, d: CospanMap) -> Verdict:
    """Check middle-four interchange: (a·b);(c·d) == (a;c)·(b;d).

    a, b are stacked 2-cells on the left 1-cells, c, d on the right;
    · is vertical (stacking), ; is side-by-side.
    """
    lhs = hcomp(vcomp(a, b), vcomp(c, d))
    rhs = vcomp(hcomp(a, c), hcomp(b, d))
    if lhs == rhs:
        return Verdict.passed("interchange")
    return Verdict.failed(
        "interchange",
        f"paths disagree: {lhs.map!r} vs {rhs.map!r}",
        witness=(lhs, rhs),
    )


# spelled-out names for the same operations
compose_cospan_maps_vert = vcomp
compose_cospan_maps_horiz = hcomp
check_pentagon = pentagon
check_unitor_triangle = triangle
