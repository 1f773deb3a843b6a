"""Lune-based beta-skeletons on planar point sets.

Build skeletons over a range of beta, measure how edges disappear as beta
grows, fit power-law models to the disappearance curves, analyse stability in
the large-beta limit, and discriminate random from structured point sets by
curve shape.
"""

from .analysis import (
    Curve,
    PowerFit,
    ScanRow,
    StaircaseReport,
    beta_grid,
    coefficient_scan,
    crossover,
    curve,
    edge_ratio,
    fit_power,
    staircase,
)
from .discrimination import (
    CurveFeatures,
    Thresholds,
    Verdict,
    classify,
    extract_features,
)
from .errors import (
    BetaSkelError,
    DegeneratePair,
    DomainError,
    DuplicatePoints,
    EmptyGrid,
    GridMismatch,
    InsufficientBaseline,
    InsufficientData,
    PackingFailure,
    ParseError,
)
from .generators import (
    GeneratorSpec,
    gen_defect_lattice,
    gen_hex_lattice,
    gen_nested_circles,
    gen_random_disc,
    gen_rect_lattice,
    gen_spiral_web,
)
from .geometry import CLOSED, OPEN, Lune, Slab, lune_contains, make_lune, slab_contains
from .kernels import KERNEL_BACKEND
from .skeleton import (
    PointSet,
    Skeleton,
    build_fast,
    build_oracle,
    gabriel_graph,
    rng_graph,
    sweep,
)
from .stability import (
    DefectReport,
    LimitGraph,
    defect_trace,
    is_stable,
    limit_graph,
    removed_edge_mean_radii,
)

__version__ = "0.1.0"

__all__ = [
    "BetaSkelError",
    "CLOSED",
    "Curve",
    "CurveFeatures",
    "DefectReport",
    "DegeneratePair",
    "DomainError",
    "DuplicatePoints",
    "EmptyGrid",
    "GeneratorSpec",
    "GridMismatch",
    "InsufficientBaseline",
    "InsufficientData",
    "KERNEL_BACKEND",
    "LimitGraph",
    "Lune",
    "OPEN",
    "PackingFailure",
    "ParseError",
    "PointSet",
    "PowerFit",
    "ScanRow",
    "Skeleton",
    "Slab",
    "StaircaseReport",
    "Thresholds",
    "Verdict",
    "beta_grid",
    "build_fast",
    "build_oracle",
    "classify",
    "coefficient_scan",
    "crossover",
    "curve",
    "defect_trace",
    "edge_ratio",
    "extract_features",
    "fit_power",
    "gabriel_graph",
    "gen_defect_lattice",
    "gen_hex_lattice",
    "gen_nested_circles",
    "gen_random_disc",
    "gen_rect_lattice",
    "gen_spiral_web",
    "is_stable",
    "limit_graph",
    "lune_contains",
    "make_lune",
    "removed_edge_mean_radii",
    "rng_graph",
    "slab_contains",
    "staircase",
    "sweep",
]
