"""Cospan and double-cospan calculus over finite sets and graphs.

Compose cospans by pushout, compose squares of cospans in two
directions, compare squares up to boundary-fixing center isomorphism,
and audit the coherence laws of the resulting structures: pentagon and
triangle at the cospan level, interchange and action laws at the
square level, the bicategory laws of the extracted globular fragment,
and the category laws of the merged edge category.
"""

from .base import (
    BASES,
    FINGRAPH,
    FINSET,
    FiniteFunction,
    FiniteGraph,
    FiniteSet,
    GraphHom,
    PushoutResult,
    compose_functions,
    is_isomorphism,
    mediating_map,
    pushout_finset,
    pushout_graph,
)
from .cli import run_command
from .cobordism import (
    CombCobordism,
    catalog,
    euler_characteristic,
    glue,
    glue_h,
    glue_v,
    gluing_pairs,
    standard_library,
    validate_cobordism,
)
from .cospans import (
    Cospan,
    CospanMap,
    associator,
    check_pentagon,
    check_unitor_triangle,
    compose_cospan_maps_horiz,
    compose_cospan_maps_vert,
    compose_cospans,
    hcomp,
    identity_cospan,
    identity_map,
    interchange_maps,
    left_unitor,
    pentagon,
    right_unitor,
    triangle,
    vcomp,
)
from .documents import (
    DiagramDocument,
    dumps,
    from_document,
    load,
    loads,
    save,
    to_document,
)
from .double import (
    Cylinder,
    DoubleCell,
    DoubleCospan,
    SquareClass,
    act_h,
    act_square,
    act_v,
    compose_cylinders,
    h_identity,
    hcompose,
    identity_cylinder,
    square_iso,
    squares_isomorphic,
    v_identity,
    validate_double_cospan,
    vcompose,
)
from .errors import (
    CoconeError,
    DiagramError,
    MismatchError,
    ParseError,
    ValidationError,
)
from .extraction import (
    BicatPresentation,
    DoubleCatPresentation,
    ExtractionResult,
    MixedCategory,
    build_DC0,
    cell_of_map,
    check_bicat_axioms,
    check_composability_condition,
    co_presentation,
    extract_bicategory,
    fold,
)
from .generate import DiagramSampler, generate
from .report import AxiomReport, CheckResult, Verdict
from .verity import (
    Bicat2Morphism,
    Fragment,
    FragmentVerity,
    FillerRecord,
    VerityStructure,
    build_2cosp0,
    build_VD,
    check_action_conditions,
    check_interchange,
    check_verity_axioms,
    class_hcompose,
    class_vcompose,
)

__version__ = "0.1.0"
