"""Numerical laboratory for a cavity no-response-test indicator.

The package verifies, with closed forms wherever possible, that a
single-measurement no-response indicator fails to see an off-origin
cavity: the constrained sup stays bounded on regions containing the
origin and blows up elsewhere, a Runge-type fit drives the blow-up
explicitly, and independent sign-map and enclosure routes cross-check
the underlying kernels.
"""

from .checks import (
    EnclosureSample,
    EnclosureSweep,
    QuadratureResolutionWarning,
    SignField,
    enclosure_closed_form,
    enclosure_indicator,
    enclosure_sweep,
    gradient_identity,
    gradient_identity_residual,
    probe_kernel,
    sign_indefiniteness_certificate,
    sign_map,
)
from .geometry import (
    AnnulusRegion,
    CircleContour,
    DiskRegion,
    OriginLocation,
    QuadratureRule,
    build_annulus_quadrature,
    build_contour_quadrature,
    build_disk_quadrature,
    validate_admissible,
)
from .harmonic import (
    BoundaryData,
    HarmonicSeries,
    LogSource,
    annulus_neumann_solution,
    boundary_pairing,
    contour_green_pairing,
    contour_pairing_pieces,
    dirichlet_disk_solve,
    dirichlet_match,
    gap_neumann_trace,
    random_boundary_data,
)
from .indicator import (
    GramConditioningError,
    GramSystem,
    IndicatorCurve,
    OriginOnBoundaryError,
    RungeFit,
    SupResult,
    Verdict,
    assemble_gram,
    blow_up_diagnostic,
    h1_inner,
    indicator_sweep,
    log_slope,
    runge_fit,
    scaled_sequence,
    sup_indicator,
)

__version__ = "0.1.0"

__all__ = [
    "AnnulusRegion",
    "BoundaryData",
    "CircleContour",
    "DiskRegion",
    "EnclosureSample",
    "EnclosureSweep",
    "GramConditioningError",
    "GramSystem",
    "HarmonicSeries",
    "IndicatorCurve",
    "LogSource",
    "OriginLocation",
    "OriginOnBoundaryError",
    "QuadratureResolutionWarning",
    "QuadratureRule",
    "RungeFit",
    "SignField",
    "SupResult",
    "Verdict",
    "annulus_neumann_solution",
    "assemble_gram",
    "blow_up_diagnostic",
    "boundary_pairing",
    "build_annulus_quadrature",
    "build_contour_quadrature",
    "build_disk_quadrature",
    "contour_green_pairing",
    "contour_pairing_pieces",
    "dirichlet_disk_solve",
    "dirichlet_match",
    "enclosure_closed_form",
    "enclosure_indicator",
    "enclosure_sweep",
    "gap_neumann_trace",
    "gradient_identity",
    "gradient_identity_residual",
    "h1_inner",
    "indicator_sweep",
    "log_slope",
    "probe_kernel",
    "random_boundary_data",
    "runge_fit",
    "scaled_sequence",
    "sign_indefiniteness_certificate",
    "sign_map",
    "sup_indicator",
    "validate_admissible",
    "__version__",
]
