"""Shared test utilities.

unchecked_square assembles a DoubleCospan while dodging its validation,
so tests can hand deliberately broken diagrams to the validators.
brute_pushout and mediating_census are independent oracles: the first
recomputes the quotient by naive class merging, the second verifies the
universal property by enumerating every candidate mediator.
"""

import random

from dcospan import FINSET, DoubleCospan, FiniteSet, catalog, mediating_map
from dcospan.generate import random_bigon_onto, random_permuted

_FIELDS = (
    "top",
    "bottom",
    "left",
    "right",
    "center",
    "from_top",
    "from_bottom",
    "from_left",
    "from_right",
)


def unchecked_square(**fields):
    """A DoubleCospan built without running __post_init__."""
    d = object.__new__(DoubleCospan)
    for name in _FIELDS:
        object.__setattr__(d, name, fields[name])
    return d


def square_fields(d: DoubleCospan) -> dict:
    return {name: getattr(d, name) for name in _FIELDS}


def brute_pushout(f, g):
    """Quotient of B ⊔ C by f(a) ~ g(a), by naive class merging.

    Returns (apex_size, left_table, right_table) with classes numbered
    by first appearance scanning B then C, like the implementation but
    computed without union-find.
    """
    parts = [{("b", i)} for i in range(f.cod.size)]
    parts += [{("c", j)} for j in range(g.cod.size)]
    for a in range(f.dom.size):
        hit_b = next(p for p in parts if ("b", f.table[a]) in p)
        hit_c = next(p for p in parts if ("c", g.table[a]) in p)
        if hit_b is not hit_c:
            parts.remove(hit_b)
            parts.remove(hit_c)
            parts.append(hit_b | hit_c)
    order = [("b", i) for i in range(f.cod.size)]
    order += [("c", j) for j in range(g.cod.size)]
    classes = []
    for x in order:
        part = next(p for p in parts if x in p)
        if part not in classes:
            classes.append(part)
    index = {x: k for k, p in enumerate(classes) for x in p}
    left = tuple(index[("b", i)] for i in range(f.cod.size))
    right = tuple(index[("c", j)] for j in range(g.cod.size))
    return len(classes), left, right


def mediating_census(f, g, po, max_q=3):
    """Verify the universal property by full enumeration.

    For every cocone (u, v) into every Q with |Q| <= max_q, every
    function apex -> Q is enumerated; exactly one must factor the
    cocone, and mediating_map must return it. Returns the number of
    cocones examined.
    """
    checked = 0
    for qsize in range(max_q + 1):
        Q = FiniteSet(qsize)
        buckets = {}
        for m in FINSET.all_maps(po.apex, Q):
            key = (po.left_inj.then(m), po.right_inj.then(m))
            buckets.setdefault(key, []).append(m)
        for u in FINSET.all_maps(f.cod, Q):
            fu = f.then(u)
            for v in FINSET.all_maps(g.cod, Q):
                if fu != g.then(v):
                    continue
                checked += 1
                sols = buckets.get((u, v), ())
                assert len(sols) == 1, (
                    f"{len(sols)} mediators for cocone ({u!r}, {v!r})"
                )
                assert mediating_map(po, u, v) == sols[0]
    return checked


class CatalogSampler:
    """Law-battery sampler drawing squares from the cobordism catalog.

    Composable pairs, triples and grids are found by boundary search
    over the catalog; bigons and center permutations come from the
    generic generators, so the battery exercises the catalog's own
    squares rather than fresh random ones.
    """

    def __init__(self, seed=0):
        self.rng = random.Random(seed)
        self.squares = [c.square for c in catalog().values()]
        self.hp = [
            (a, b) for a in self.squares for b in self.squares if a.right == b.left
        ]
        self.vp = [
            (a, b) for a in self.squares for b in self.squares if a.bottom == b.top
        ]
        self.triples = [
            (a, b, c) for a, b in self.hp for c in self.squares if b.right == c.left
        ]
        self.grids = [
            (a, b, c, d)
            for a, b in self.hp
            for c, d in self.hp
            if a.bottom == c.top and b.bottom == d.top
        ]

    def square(self):
        return self.rng.choice(self.squares)

    def h_pair(self):
        return self.rng.choice(self.hp)

    def v_pair(self):
        return self.rng.choice(self.vp)

    def h_triple(self):
        return self.rng.choice(self.triples)

    def grid(self):
        return self.rng.choice(self.grids)

    def bigon_onto(self, c):
        return random_bigon_onto(self.rng, c)

    def permuted(self, d):
        return random_permuted(self.rng, d)
