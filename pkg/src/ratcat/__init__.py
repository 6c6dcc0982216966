"""Rational-slope Dyck paths, sweep maps, invariant subsets, gluing, and q,t series."""

from .errors import (
    AboveDiagonal,
    DomainError,
    EmptyInput,
    FormulaMismatch,
    Infeasible,
    InvalidCore,
    InvalidGraph,
    InvalidSkeleton,
    LimitExceeded,
    MalformedPath,
    NoIntersection,
    NotBalanced,
    NotCoprimeCase,
    NotNormalized,
    Overflow,
    TooManyVertices,
)
from .lattice import (
    DyckPath,
    GridParams,
    area,
    bizley_count,
    box_rank,
    enumerate_paths,
    parse_path,
    staircase_path,
    step_ranks,
    subdiagonal_box_count,
)
from .sweep import dinv_armleg, dinv_sweep, zeta
from .invset import (
    CorePartition,
    InvariantSet,
    ResidueComponent,
    Skeleton,
    cogenerators_m,
    core_partition,
    d_quotient,
    decompose,
    dinv_invset,
    gap,
    gaps,
    generators_n,
    invset_from_core,
    invset_from_generators,
    invset_from_path_coprime,
    invset_from_skeleton,
    map_D_coprime,
    map_G,
    natural_numbers,
    semigroup,
    skeleton,
)
from .equiv import (
    LabeledDigraph,
    ShiftBounds,
    build_graph,
    canonical_form,
    equivalent,
    min_gap_in_class,
    minimal_representative,
    minimal_shifting,
    shift_bounds,
)
from .glue import (
    ColoredPath,
    PeriodicPath,
    glue_all,
    glue_once,
    good_intervals,
    map_D,
    map_D_inverse,
    paths_intersect,
    periodic_from_skeleton,
    remove_interval,
    unglue,
    window_skeleton,
)
from .series import (
    C_series,
    F_series,
    QTPoly,
    QTSeries,
    count_equivalence_classes,
    enumerate_invsets_by_gap,
    fuss_catalan,
    qt_catalan,
    springer_poincare,
)

__version__ = "0.1.0"
