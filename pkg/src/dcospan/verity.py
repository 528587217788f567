"""Square-level coherence: interchange, units, actions, and fillers.

A VerityStructure bundles the operations on square classes (compose,
units, edge actions) for one base. check_verity_axioms drives a named
battery of laws over sampled configurations and returns a
machine-readable report; check_action_conditions audits a finite
fragment of squares and bigons for existence and uniqueness of action
fillers, solving the filler face equations directly and cross-checking
them against the substitution formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cospans import (
    Cospan,
    CospanMap,
    associator,
    compose_cospans,
    hcomp,
    identity_map,
    right_unitor,
)
from .double import (
    Cylinder,
    DoubleCospan,
    SquareClass,
    _EDGES,
    _first_disagreement,
    act_square,
    h_identity,
    hcompose,
    match_center_iso,
    square_iso,
    v_identity,
    validate_double_cospan,
    vcompose,
)
from .errors import DiagramError, MismatchError, ValidationError
from .report import AxiomReport, Verdict


def check_interchange(a: DoubleCospan, b: DoubleCospan, c: DoubleCospan, d: DoubleCospan) -> Verdict:
    """Both ways of composing a 2x2 grid of squares agree up to class.

    a b
    c d
    The two composites share their boundary but number their centers in
    different block orders, so this is a genuine isomorphism search. A
    passing verdict carries the comparison as an invertible Cylinder
    from the rows-first composite to the columns-first one.
    """
    rows_first = vcompose(hcompose(a, b), hcompose(c, d))
    cols_first = hcompose(vcompose(a, c), vcompose(b, d))
    if rows_first.boundary() != cols_first.boundary():
        return Verdict.failed(
            "interchange", "composite boundaries disagree", witness=(rows_first, cols_first)
        )
    phi = square_iso(rows_first, cols_first)
    if phi is None:
        return Verdict.failed(
            "interchange",
            "no center isomorphism between the two composites",
            witness=(rows_first, cols_first),
        )
    witness = Cylinder(
        "h",
        rows_first,
        cols_first,
        identity_map(rows_first.top),
        identity_map(rows_first.bottom),
        phi,
    )
    return Verdict(True, "interchange", "invertible cylinder witness", witness)


class VerityStructure:
    """Operations of the square calculus over one base, at class level.

    Horizontal and vertical 2-cells are both invertible cospan maps;
    squares are SquareClass values. Subclasses can reroute _act (the
    fragment-backed structure resolves actions by filler lookup).
    """

    def __init__(self, base):
        self.base = base
        self.name = f"squares({base.name})"

    # 1-cells and bigons delegate to the cospan layer

    def square(self, d: DoubleCospan) -> SquareClass:
        return SquareClass(d)

    def hcomp_sq(self, A: SquareClass, B: SquareClass) -> SquareClass:
        return SquareClass(hcompose(A.rep, B.rep))

    def vcomp_sq(self, A: SquareClass, B: SquareClass) -> SquareClass:
        return SquareClass(vcompose(A.rep, B.rep))

    def h_unit(self, v: Cospan) -> SquareClass:
        return SquareClass(h_identity(v))

    def v_unit(self, h: Cospan) -> SquareClass:
        return SquareClass(v_identity(h))

    def _act(self, rep: DoubleCospan, alpha: CospanMap, edge: str) -> DoubleCospan:
        return act_square(rep, alpha, edge)

    def act(self, A: SquareClass, alpha: CospanMap, edge: str) -> SquareClass:
        return SquareClass(self._act(A.rep, alpha, edge))

    def act_h(self, alpha: CospanMap, A: SquareClass, side: str) -> SquareClass:
        return self.act(A, alpha, "top" if side == "left" else "bottom")

    def act_v(self, alpha: CospanMap, A: SquareClass, side: str) -> SquareClass:
        return self.act(A, alpha, "left" if side == "left" else "right")


def build_2cosp0(base) -> VerityStructure:
    """The full square calculus over finite sets or finite graphs."""
    return VerityStructure(base)


def _expected_boundary_h(a: DoubleCospan, b: DoubleCospan):
    return (
        compose_cospans(a.top, b.top),
        compose_cospans(a.bottom, b.bottom),
        a.left,
        b.right,
    )


def check_verity_axioms(V: VerityStructure, sampler, rounds: int = 25) -> AxiomReport:
    """Run the named law battery over sampled configurations.

    Every law is executed even when the canonical composite makes it an
    equality on the nose; failures carry the offending configuration.
    Structural errors raised while evaluating a law (invalid squares,
    mismatched boundaries) count as failures of that law, not crashes.
    """
    report = AxiomReport()

    def run(law, thunk):
        try:
            verdict = thunk()
        except DiagramError as err:
            verdict = Verdict.failed(
                law,
                f"{type(err).__name__}: {err}",
                witness=(getattr(err, "location", None), getattr(err, "witness", None)),
            )
        report.record(verdict if verdict is not None else Verdict.passed(law))

    def eq(law, lhs, rhs, detail):
        if lhs == rhs:
            return Verdict.passed(law)
        return Verdict.failed(law, detail, witness=(lhs, rhs))

    for _ in range(rounds):
        # corner equations: composites and act results are valid squares
        # with the boundaries forced by their inputs
        def corner_law():
            a, b = sampler.h_pair()
            C = V.hcomp_sq(V.square(a), V.square(b))
            validate_double_cospan(C.rep)
            if C.rep.boundary() != _expected_boundary_h(a, b):
                return Verdict.failed(
                    "corner-compatibility", "composite boundary is wrong", witness=C.rep
                )
            alpha = sampler.bigon_onto(C.rep.top)
            D = V.act_h(alpha, C, "left")
            validate_double_cospan(D.rep)
            expected = (alpha.source,) + C.rep.boundary()[1:]
            if D.rep.boundary() != expected:
                return Verdict.failed(
                    "corner-compatibility", "acted boundary is wrong", witness=D.rep
                )
            beta = sampler.bigon_onto(C.rep.left)
            E = V.act_v(beta, C, "left")
            validate_double_cospan(E.rep)
            return Verdict.passed("corner-compatibility")

        run("corner-compatibility", corner_law)

        def row_column_law():
            s = sampler.square()
            u = V.h_unit(s.left)
            validate_double_cospan(u.rep)
            if not (u.rep.top.is_identity() and u.rep.bottom.is_identity()):
                return Verdict.failed(
                    "row-column-coherence", "horizontal unit has non-identity rows", witness=u.rep
                )
            if u.rep.left != s.left or u.rep.right != s.left:
                return Verdict.failed(
                    "row-column-coherence", "horizontal unit has wrong columns", witness=u.rep
                )
            w = V.v_unit(s.top)
            validate_double_cospan(w.rep)
            if not (w.rep.left.is_identity() and w.rep.right.is_identity()):
                return Verdict.failed(
                    "row-column-coherence", "vertical unit has non-identity columns", witness=w.rep
                )
            tr = s.transpose()
            if tr.transpose() != s:
                return Verdict.failed(
                    "row-column-coherence", "transpose is not an involution", witness=s
                )
            return Verdict.passed("row-column-coherence")

        run("row-column-coherence", row_column_law)

        def interchange_law():
            a, b, c, d = sampler.grid()
            lhs = V.vcomp_sq(
                V.hcomp_sq(V.square(a), V.square(b)), V.hcomp_sq(V.square(c), V.square(d))
            )
            rhs = V.hcomp_sq(
                V.vcomp_sq(V.square(a), V.square(c)), V.vcomp_sq(V.square(b), V.square(d))
            )
            return eq("interchange", lhs, rhs, "grid composites differ as classes")

        run("interchange", interchange_law)

        def strict_units_law():
            s = sampler.square()
            A = V.square(s)
            after = V.hcomp_sq(A, V.h_unit(s.right))
            if after.rep != s:
                return Verdict.failed(
                    "strict-units",
                    "composing with the right unit square changed the square",
                    witness=(after.rep, s),
                )
            below = V.vcomp_sq(A, V.v_unit(s.bottom))
            if below.rep != s:
                return Verdict.failed(
                    "strict-units",
                    "composing with the bottom unit square changed the square",
                    witness=(below.rep, s),
                )
            return Verdict.passed("strict-units")

        run("strict-units", strict_units_law)

        def strict_assoc_law():
            a, b, c = sampler.h_triple()
            A, B, C = V.square(a), V.square(b), V.square(c)
            lhs = V.hcomp_sq(V.hcomp_sq(A, B), C)
            rhs = V.hcomp_sq(A, V.hcomp_sq(B, C))
            if lhs.rep != rhs.rep:
                return Verdict.failed(
                    "strict-associativity",
                    "triple composites differ on the nose",
                    witness=(lhs.rep, rhs.rep),
                )
            at, bt, ct = a.transpose(), b.transpose(), c.transpose()
            lhs_v = V.vcomp_sq(V.vcomp_sq(V.square(at), V.square(bt)), V.square(ct))
            rhs_v = V.vcomp_sq(V.square(at), V.vcomp_sq(V.square(bt), V.square(ct)))
            if lhs_v.rep != rhs_v.rep:
                return Verdict.failed(
                    "strict-associativity",
                    "vertical triple composites differ on the nose",
                    witness=(lhs_v.rep, rhs_v.rep),
                )
            return Verdict.passed("strict-associativity")

        run("strict-associativity", strict_assoc_law)

        def action_interchange_law():
            a, b = sampler.h_pair()
            A, B = V.square(a), V.square(b)
            al = sampler.bigon_onto(a.top)
            al2 = sampler.bigon_onto(b.top)
            lhs = V.act_h(hcomp(al, al2), V.hcomp_sq(A, B), "left")
            rhs = V.hcomp_sq(V.act_h(al, A, "left"), V.act_h(al2, B, "left"))
            v1 = eq("action-interchange", lhs, rhs, "acting on a composite top row differs")
            if not v1:
                return v1
            be = sampler.bigon_onto(a.bottom)
            be2 = sampler.bigon_onto(b.bottom)
            lhs = V.act_h(hcomp(be, be2), V.hcomp_sq(A, B), "right")
            rhs = V.hcomp_sq(V.act_h(be, A, "right"), V.act_h(be2, B, "right"))
            v2 = eq("action-interchange", lhs, rhs, "acting on a composite bottom row differs")
            if not v2:
                return v2
            c, d = sampler.v_pair()
            C, D = V.square(c), V.square(d)
            ga = sampler.bigon_onto(c.left)
            ga2 = sampler.bigon_onto(d.left)
            lhs = V.act_v(hcomp(ga, ga2), V.vcomp_sq(C, D), "left")
            rhs = V.vcomp_sq(V.act_v(ga, C, "left"), V.act_v(ga2, D, "left"))
            return eq("action-interchange", lhs, rhs, "acting on a composite left column differs")

        run("action-interchange", action_interchange_law)

        def action_composition_law():
            a, b = sampler.h_pair()
            A, B = V.square(a), V.square(b)
            ga = sampler.bigon_onto(b.right)
            lhs = V.act_v(ga, V.hcomp_sq(A, B), "right")
            rhs = V.hcomp_sq(A, V.act_v(ga, B, "right"))
            v1 = eq(
                "action-composition",
                lhs,
                rhs,
                "outer right action does not slide past the composite",
            )
            if not v1:
                return v1
            de = sampler.bigon_onto(a.left)
            lhs = V.act_v(de, V.hcomp_sq(A, B), "left")
            rhs = V.hcomp_sq(V.act_v(de, A, "left"), B)
            v2 = eq(
                "action-composition",
                lhs,
                rhs,
                "outer left action does not slide past the composite",
            )
            if not v2:
                return v2
            c, d = sampler.v_pair()
            C, D = V.square(c), V.square(d)
            ep = sampler.bigon_onto(c.top)
            lhs = V.act_h(ep, V.vcomp_sq(C, D), "left")
            rhs = V.vcomp_sq(V.act_h(ep, C, "left"), D)
            return eq(
                "action-composition",
                lhs,
                rhs,
                "outer top action does not slide past the composite",
            )

        run("action-composition", action_composition_law)

        def star_assoc_law():
            s = sampler.square()
            S = V.square(s)
            al = sampler.bigon_onto(s.top)
            be = sampler.bigon_onto(s.bottom)
            lhs = V.act_h(al, V.act_h(be, S, "right"), "left")
            rhs = V.act_h(be, V.act_h(al, S, "left"), "right")
            return eq("star-associativity", lhs, rhs, "top and bottom actions do not commute")

        run("star-associativity", star_assoc_law)

        def independence_law():
            s = sampler.square()
            S = V.square(s)
            al = sampler.bigon_onto(s.top)
            be = sampler.bigon_onto(s.left)
            lhs = V.act_v(be, V.act_h(al, S, "left"), "left")
            rhs = V.act_h(al, V.act_v(be, S, "left"), "left")
            return eq("action-independence", lhs, rhs, "row and column actions do not commute")

        run("action-independence", independence_law)

        def associator_action_law():
            a, b, c = sampler.h_triple()
            A, B, C = V.square(a), V.square(b), V.square(c)
            L = V.hcomp_sq(V.hcomp_sq(A, B), C)
            R = V.hcomp_sq(A, V.hcomp_sq(B, C))
            a_top = associator(a.top, b.top, c.top)
            a_bot = associator(a.bottom, b.bottom, c.bottom)
            lhs = V.act_h(a_top, R, "left")
            rhs = V.act_h(a_bot.inverse(), L, "right")
            return eq(
                "associator-action",
                lhs,
                rhs,
                "rebracketing the top disagrees with rebracketing the bottom",
            )

        run("associator-action", associator_action_law)

        def unitor_action_law():
            s = sampler.square()
            S = V.square(s)
            lhs = V.act_h(right_unitor(s.top), S, "left")
            padded = V.hcomp_sq(V.h_unit(s.left), S)
            rhs = V.act_h(right_unitor(s.bottom).inverse(), padded, "right")
            v1 = eq(
                "unitor-action",
                lhs,
                rhs,
                "absorbing the left unit square disagrees with the unitor action",
            )
            if not v1:
                return v1
            lhs = V.act_v(right_unitor(s.left), S, "left")
            padded = V.vcomp_sq(V.v_unit(s.top), S)
            rhs = V.act_v(right_unitor(s.right).inverse(), padded, "right")
            return eq(
                "unitor-action",
                lhs,
                rhs,
                "absorbing the top unit square disagrees with the unitor action",
            )

        run("unitor-action", unitor_action_law)

        def representative_law():
            a, b = sampler.h_pair()
            a2 = sampler.permuted(a)
            b2 = sampler.permuted(b)
            if V.square(a2) != V.square(a):
                return Verdict.failed(
                    "representative-independence",
                    "center permutation changed the class",
                    witness=(a, a2),
                )
            lhs = V.hcomp_sq(V.square(a), V.square(b))
            rhs = V.hcomp_sq(V.square(a2), V.square(b2))
            v1 = eq(
                "representative-independence",
                lhs,
                rhs,
                "composite class depends on the representatives",
            )
            if not v1:
                return v1
            alpha = sampler.bigon_onto(a.top)
            return eq(
                "representative-independence",
                V.act_h(alpha, V.square(a), "left"),
                V.act_h(alpha, V.square(a2), "left"),
                "acted class depends on the representative",
            )

        run("representative-independence", representative_law)

    return report


@dataclass(frozen=True)
class FillerRecord:
    """A declared action filler: the claim that `filled` is `square`
    with `edge` rewritten along `alpha`, witnessed by `core`."""

    square: DoubleCospan
    alpha: CospanMap
    edge: str
    filled: DoubleCospan
    core: object


@dataclass(frozen=True)
class Fragment:
    """Finite collection of squares and invertible bigons, with optional
    declared fillers, for auditing the action conditions."""

    squares: tuple
    bigons: tuple
    fillers: tuple = ()

    @classmethod
    def of(cls, squares, bigons, fillers=()):
        return cls(tuple(squares), tuple(bigons), tuple(fillers))


def _acted_boundary(F: DoubleCospan, alpha: CospanMap, edge: str):
    names = list(_EDGES)
    return tuple(
        alpha.source if name == edge else F.edge(name) for name in names
    )


def _face_pairs(G: DoubleCospan, F: DoubleCospan, alpha: CospanMap, edge: str):
    """Parallel map pairs expressing the filler face equations for
    a core G.center -> F.center."""
    base = F.base
    pairs = []
    for name in _EDGES:
        if name == edge:
            pairs.append((G.edge_map(name), base.compose(alpha.map, F.edge_map(name))))
        else:
            pairs.append((G.edge_map(name), F.edge_map(name)))
    return pairs


def find_filler_core(G: DoubleCospan, F: DoubleCospan, alpha: CospanMap, edge: str):
    """Invertible core solving the filler face equations, or None.

    Solved directly from the face equations; independent of the
    substitution formula, so it can cross-check it.
    """
    if G.boundary() != _acted_boundary(F, alpha, edge):
        return None
    return match_center_iso(G.center, F.center, _face_pairs(G, F, alpha, edge))


def check_core_commutes(record: FillerRecord):
    """Check a declared core against the face equations; return a failed
    Verdict with a witness, or None if all four faces commute."""
    base = record.square.base
    for (fa, fb), name in zip(
        _face_pairs(record.filled, record.square, record.alpha, record.edge), _EDGES
    ):
        lhs = base.compose(fa, record.core)
        if not base.equal(lhs, fb):
            return Verdict.failed(
                "declared-fillers",
                f"core does not commute over the {name} face",
                witness=_first_disagreement(lhs, fb),
            )
    return None


def check_action_conditions(fragment: Fragment) -> AxiomReport:
    """Audit a fragment for the action conditions.

    For every square F, invertible bigon alpha and edge with
    alpha.target == that edge of F:
      existence: the fragment contains a square isomorphic rel boundary
        to F with the edge rewritten along alpha;
      uniqueness: any two fragment squares solving the filler face
        equations for (F, alpha, edge) are isomorphic rel boundary.
    Declared fillers are additionally re-validated: faces must commute
    and the core must be invertible. Uniqueness is relative to the
    supplied fragment; free center elements produce several cores for
    one filler and do not count against it.
    """
    report = AxiomReport()
    existence = report.law("filler-existence")
    uniqueness = report.law("filler-uniqueness")
    declared = report.law("declared-fillers")

    actions = []
    for F in fragment.squares:
        for alpha in fragment.bigons:
            if not alpha.is_invertible():
                continue
            for edge in _EDGES:
                if alpha.target == F.edge(edge):
                    actions.append((F, alpha, edge))
    if not actions:
        report.notes.append("fragment admits no actions; nothing to check")

    for F, alpha, edge in actions:
        expected = act_square(F, alpha, edge)
        fillers = []
        for G in fragment.squares:
            core = find_filler_core(G, F, alpha, edge)
            # cross-check: face equations agree with the substitution formula
            direct = (
                square_iso(G, expected) is not None
                if G.boundary() == expected.boundary()
                else False
            )
            if (core is not None) != direct:
                uniqueness.record(
                    Verdict.failed(
                        "filler-uniqueness",
                        "face equations disagree with the substitution formula",
                        witness=(F, alpha, edge, G),
                    )
                )
            if core is not None:
                fillers.append(G)
        if fillers:
            existence.record(Verdict.passed("filler-existence"))
        else:
            existence.record(
                Verdict.failed(
                    "filler-existence",
                    f"no filler in fragment for acting on the {edge} edge",
                    witness=(F, alpha, edge),
                )
            )
        for i in range(1, len(fillers)):
            try:
                same = square_iso(fillers[0], fillers[i]) is not None
            except MismatchError:
                same = False
            uniqueness.record(
                Verdict.passed("filler-uniqueness")
                if same
                else Verdict.failed(
                    "filler-uniqueness",
                    "two non-isomorphic fillers for one action",
                    witness=(F, alpha, edge, fillers[0], fillers[i]),
                )
            )
        if len(fillers) == 1:
            uniqueness.record(Verdict.passed("filler-uniqueness"))

    for record in fragment.fillers:
        if record.edge not in _EDGES:
            declared.record(
                Verdict.failed("declared-fillers", f"unknown edge {record.edge!r}")
            )
            continue
        if not record.alpha.is_invertible():
            declared.record(
                Verdict.failed(
                    "declared-fillers", "declared action along a non-invertible bigon",
                    witness=record.alpha,
                )
            )
            continue
        if record.alpha.target != record.square.edge(record.edge):
            declared.record(
                Verdict.failed(
                    "declared-fillers",
                    "bigon does not end at the declared edge",
                    witness=record,
                )
            )
            continue
        if record.filled.boundary() != _acted_boundary(
            record.square, record.alpha, record.edge
        ):
            declared.record(
                Verdict.failed(
                    "declared-fillers",
                    "filled square has the wrong boundary",
                    witness=record,
                )
            )
            continue
        bad = check_core_commutes(record)
        if bad is not None:
            declared.record(bad)
            continue
        if not record.core.is_iso():
            declared.record(
                Verdict.failed(
                    "declared-fillers",
                    "declared core commutes but is not invertible",
                    witness=record,
                )
            )
            continue
        declared.record(Verdict.passed("declared-fillers"))

    return report


class FragmentVerity(VerityStructure):
    """Square calculus whose actions resolve through fragment fillers.

    Compositions are computed directly; an action looks up the unique
    filler recorded in the fragment instead of substituting. Build with
    build_VD, which audits the fragment first.
    """

    def __init__(self, base, fragment: Fragment):
        super().__init__(base)
        self.fragment = fragment
        self.name = f"fragment-squares({base.name})"

    def _act(self, rep, alpha, edge):
        if not alpha.is_invertible():
            raise MismatchError("only invertible cospan maps act on squares")
        if alpha.target != rep.edge(edge):
            raise MismatchError(f"map does not end at the {edge} edge of the square")
        for G in self.fragment.squares:
            if find_filler_core(G, rep, alpha, edge) is not None:
                return G
        raise ValidationError(
            f"fragment has no filler for acting on the {edge} edge",
            location=edge,
        )


def build_VD(fragment: Fragment, base=None) -> FragmentVerity:
    """Fragment-backed square calculus; the fragment must pass the
    action conditions first."""
    if base is None:
        if not fragment.squares:
            raise MismatchError("cannot infer the base of an empty fragment")
        base = fragment.squares[0].base
    audit = check_action_conditions(fragment)
    if not audit.ok:
        bad = audit.failures()[0]
        raise ValidationError(
            f"fragment fails the action conditions: {bad.detail}",
            location=bad.law,
            witness=bad.witness,
        )
    return FragmentVerity(base, fragment)


# a 2-cell between parallel cospans is exactly a map of cospans
Bicat2Morphism = CospanMap


def class_hcompose(p: SquareClass, q: SquareClass) -> SquareClass:
    """Horizontal composite of square classes, via representatives."""
    return SquareClass(hcompose(p.rep, q.rep))


def class_vcompose(p: SquareClass, q: SquareClass) -> SquareClass:
    """Vertical composite of square classes, via representatives."""
    return SquareClass(vcompose(p.rep, q.rep))
