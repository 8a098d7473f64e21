"""Exact Cayley-ball enumeration and growth bounds for 3-manifold group families."""

from .bounds import (
    BoundReport,
    FOURTH_ROOT_2,
    QuadraticValue,
    SOLVABLE_UNIVERSAL,
    SQRT2,
    ScanReport,
    TransferBound,
    amalgam_bound,
    bcg_bound,
    finite_index_transfer,
    free_product_bound,
    hnn_bound,
    is_hyperbolic,
    lambda_max,
    make_bcg_table,
    osin_bound,
    scan_hyperbolic,
    solvable_bound,
    squarefree_part,
    surface_bound,
    write_scan_csv,
)
from .cayley import (
    GrowthTable,
    SearchReport,
    UNKNOWN,
    ball_elements,
    growth_table,
    is_generating,
    search_generating_sets,
    write_table_csv,
)
from .errors import (
    ClosureBudgetExceeded,
    DegenerateSphere,
    DomainError,
    FitRejected,
    GroupGrowthError,
    InvalidGenus,
    InvalidSpec,
    NoEnumerableGroup,
    WindowTooSmall,
)
from .groups import (
    GeneratingSet,
    GroupHandle,
    GroupOrder,
    GroupSpec,
    MatrixZ2,
    group_order,
    make_generating_set,
    make_group,
)
from .manifold import (
    GrowthClass,
    ManifoldSpec,
    classify_growth,
    group_of_manifold,
    universal_constant,
)
from .rates import (
    DegreeEstimate,
    RateEstimates,
    entropy_of,
    estimate_rates,
    extrapolate_rate,
    poly_degree,
    ratio_estimates,
    root_bounds,
)
from .rewrite import RewriteSystem, inverse_rules, kb_complete, rw_normalize
from .surface import SurfaceRelator, dehn_reduce, geodesic_closure, surface_canonical
from .words import Word, free_reduce, format_word, invert, parse_presentation, parse_word

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ClosureBudgetExceeded",
    "DegenerateSphere",
    "DegreeEstimate",
    "DomainError",
    "FOURTH_ROOT_2",
    "FitRejected",
    "GeneratingSet",
    "GroupGrowthError",
    "GroupHandle",
    "GroupOrder",
    "GroupSpec",
    "GrowthClass",
    "GrowthTable",
    "InvalidGenus",
    "InvalidSpec",
    "ManifoldSpec",
    "MatrixZ2",
    "NoEnumerableGroup",
    "QuadraticValue",
    "RateEstimates",
    "RewriteSystem",
    "SOLVABLE_UNIVERSAL",
    "SQRT2",
    "ScanReport",
    "SearchReport",
    "SurfaceRelator",
    "TransferBound",
    "UNKNOWN",
    "WindowTooSmall",
    "Word",
    "amalgam_bound",
    "ball_elements",
    "bcg_bound",
    "classify_growth",
    "dehn_reduce",
    "entropy_of",
    "estimate_rates",
    "extrapolate_rate",
    "finite_index_transfer",
    "free_product_bound",
    "free_reduce",
    "format_word",
    "geodesic_closure",
    "group_of_manifold",
    "group_order",
    "growth_table",
    "hnn_bound",
    "inverse_rules",
    "invert",
    "is_generating",
    "is_hyperbolic",
    "kb_complete",
    "lambda_max",
    "make_bcg_table",
    "make_generating_set",
    "make_group",
    "osin_bound",
    "parse_presentation",
    "parse_word",
    "poly_degree",
    "ratio_estimates",
    "root_bounds",
    "rw_normalize",
    "scan_hyperbolic",
    "search_generating_sets",
    "solvable_bound",
    "squarefree_part",
    "surface_bound",
    "surface_canonical",
    "universal_constant",
    "write_scan_csv",
    "write_table_csv",
]
