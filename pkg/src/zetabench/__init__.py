"""Precision workbench for zeta derivatives and Stieltjes-family constants.

Evaluates and cross-verifies integral representations, Bell-polynomial
formulas, and constant-sequence recurrences for higher derivatives of the
Riemann zeta function at zero and for the Stieltjes family of constants,
reporting a residual for every identity in the catalog.
"""

from .precision import (
    ConvergenceError,
    DomainError,
    PoleError,
    PrecisionConfig,
    bernoulli,
    default_config,
    set_default_config,
)
from .bell import (
    bell_complete_partition,
    bell_complete_recurrence,
    bell_invert,
    bell_partial,
)
from .quadrature import (
    Domain,
    IntegrandError,
    QuadResult,
    integrate,
    integrate_with_log_weight,
    log_weighted_algebraic,
)
from .specfun import (
    digamma,
    hurwitz_hermite,
    log_gamma_binet,
    polygamma,
    stieltjes_oracle,
    zeta_em,
)
from .kernels import kernel_eval, named_function_eval
from .identities import (
    Residual,
    catalog_ids,
    cohen_series,
    evaluate_identity,
    zeta_debruijn,
    zeta_kloosterman,
)
from .constants import (
    check_structure,
    constant_sequence,
    d_n,
    eta,
    g_deriv0,
    gamma1_of_u,
    lehmer_b,
    sigma,
    stieltjes,
    zeta_deriv0,
)

__version__ = "0.1.0"

__all__ = [
    "PrecisionConfig",
    "DomainError",
    "PoleError",
    "ConvergenceError",
    "IntegrandError",
    "default_config",
    "set_default_config",
    "bernoulli",
    "bell_complete_partition",
    "bell_complete_recurrence",
    "bell_partial",
    "bell_invert",
    "Domain",
    "QuadResult",
    "integrate",
    "integrate_with_log_weight",
    "log_weighted_algebraic",
    "digamma",
    "polygamma",
    "zeta_em",
    "hurwitz_hermite",
    "log_gamma_binet",
    "stieltjes_oracle",
    "kernel_eval",
    "named_function_eval",
    "Residual",
    "catalog_ids",
    "evaluate_identity",
    "cohen_series",
    "zeta_debruijn",
    "zeta_kloosterman",
    "g_deriv0",
    "stieltjes",
    "zeta_deriv0",
    "eta",
    "sigma",
    "lehmer_b",
    "d_n",
    "gamma1_of_u",
    "check_structure",
    "constant_sequence",
    "__version__",
]
