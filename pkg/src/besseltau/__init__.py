"""Numerics for the most-degenerate Painleve III tau function.

The tau function is computed three independent ways — as a Fredholm
determinant of a generalized Bessel kernel in its Fourier-mode basis, as
a sum over pairs of Maya diagrams, and as a charge-graded instanton
sum — and the routes cross-validate each other and the defining ODEs.
"""

from .errors import (
    BesselTauError,
    CauchyCollisionError,
    ConfigError,
    DegenerateParameterError,
    PoleError,
    QuadratureConvergenceError,
)
from .kernel import (
    ModeMatrices,
    adaptive_fredholm_det,
    bessel_kernel_J,
    fredholm_det,
    fredholm_det_block,
    kernel_a,
    kernel_d,
    mode_matrix_a,
    mode_matrix_d,
    modes_by_quadrature,
    rank_one_residual,
)
from .monodromy import MonodromyParams, connection_matrix, m0, stokes_matrix
from .nekrasov import (
    SeriesTruncation,
    check_lemma_identities,
    quasi_periodicity_residual,
    tau_series_maya,
    z_bif,
    z_dual,
    z_inst,
    z_inst_coefficients,
)
from .partitions import (
    MayaDiagram,
    YoungDiagram,
    maya_from_young,
    young_from_maya,
)
from .tau import (
    TauValue,
    cross_validate,
    ode_residual,
    painleve_q,
    sine_gordon_map,
    sine_gordon_residual,
    tau,
    zeta,
)

__version__ = "0.1.0"

__all__ = [
    "BesselTauError",
    "CauchyCollisionError",
    "ConfigError",
    "DegenerateParameterError",
    "PoleError",
    "QuadratureConvergenceError",
    "ModeMatrices",
    "adaptive_fredholm_det",
    "bessel_kernel_J",
    "fredholm_det",
    "fredholm_det_block",
    "kernel_a",
    "kernel_d",
    "mode_matrix_a",
    "mode_matrix_d",
    "modes_by_quadrature",
    "rank_one_residual",
    "MonodromyParams",
    "connection_matrix",
    "m0",
    "stokes_matrix",
    "SeriesTruncation",
    "check_lemma_identities",
    "quasi_periodicity_residual",
    "tau_series_maya",
    "z_bif",
    "z_dual",
    "z_inst",
    "z_inst_coefficients",
    "MayaDiagram",
    "YoungDiagram",
    "maya_from_young",
    "young_from_maya",
    "TauValue",
    "cross_validate",
    "ode_residual",
    "painleve_q",
    "sine_gordon_map",
    "sine_gordon_residual",
    "tau",
    "zeta",
    "__version__",
]
