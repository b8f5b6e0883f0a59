"""The off-quadric (28_6, 56_3) configuration of PG(5, 2) and the Grassmannian G_2(8)."""

from .conwell import (
    CollinearityGraph,
    Heptad,
    HeptadReport,
    RemovalStep,
    build_collinearity_graph,
    find_heptads,
    heptad_pair_intersections,
    heptads_vs_marks,
    remove_heptad,
    removal_sequence,
)
from .errors import (
    DomainMismatch,
    EqualPoints,
    InconsistentInput,
    InvalidArity,
    LimitExceeded,
    NoCommonMark,
    NotAConfiguration,
    PropertyViolated,
    UnknownPoint,
)
from .gf2 import (
    Line,
    LineClass,
    ProjPoint,
    QuadraticForm,
    all_lines,
    classify_line,
    enumerate_points,
    eval_form,
    external_lines,
    line_through,
    off_quadric_points,
    off_quadric_structure,
    on_quadric_points,
)
from .grassmannian import build_grassmannian, grassmannian_params, mark_permutation_map
from .incidence import (
    ConfigParams,
    IncidenceStructure,
    IsoCertificate,
    count_automorphisms,
    find_isomorphism,
    induced_substructure,
    is_isomorphic,
    iter_isomorphisms,
    measure_params,
    verify_certificate,
)

__version__ = "0.1.0"
