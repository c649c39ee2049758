"""Fourier transforms of indicator functions of convex bodies, lattice tiling
checks, and a d >= 4 pair of convex bodies whose transforms agree on Z^d."""
from .bodies import (
    DISTINCT,
    POSSIBLY_CONGRUENT,
    Ball,
    GeometryError,
    Interval1,
    Polygon2,
    ProductBody,
    area,
    congruence_distinguisher,
    convex_hull,
    is_centrally_symmetric,
    is_convex,
    load_polygon,
    make_hexagon_H,
    make_rhombus_R,
    make_square,
)
from .oracle import (
    QuadratureSpec,
    ball_ft_slab_quadrature,
    mc_indicator_ft,
    oracle_ft,
    polygon_ft_quadrature,
)
from .tiling import (
    Z2,
    CoverHistogram,
    Lattice2,
    cover_count,
    dual_lattice,
    exponential_orthogonality_check,
    k_tiling_check,
    spectral_tiling_check,
)
from .transform import (
    Branch,
    DimensionMismatch,
    FtValue,
    ball_ft,
    ft,
    ft_array,
    interval_ft,
    lattice_agreement_report,
    polygon_ft,
    product_ft,
)

__version__ = "0.1.0"
