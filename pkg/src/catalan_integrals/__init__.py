"""Exact Catalan numbers, their integral representations, and verified
quadrature cross-checks.

The package is organized bottom-up:

* ``exact``           -- arbitrary-precision integer routes and ln C_n
* ``quadrature``      -- adaptive Gauss-Kronrod with half-line strategies
* ``kernels``         -- log-Gamma integrands with origin guards and tails
* ``representations`` -- five ln C_n routes cross-checked against exact
* ``series``          -- certified sum rules and the Glaisher-Kinkelin constant
* ``report``          -- deterministic text/CSV/JSON verification reports
* ``cli``             -- the ``catalan-integrals`` command
"""

from .exact import (
    CatalanTable,
    catalan_exact,
    catalan_hypergeometric,
    catalan_segner,
    count_balanced_parentheses,
    count_polygon_triangulations,
    ln_exact,
)
from .kernels import (
    KernelSpec,
    binet_catalan_kernel,
    binet_theta,
    log_gamma_difference_kernel,
    log_gamma_malmsten,
    log_gamma_reference,
    malmsten_catalan_kernel,
)
from .quadrature import (
    HalfLineTransform,
    Integrand,
    IntegrandEvaluationError,
    QuadConfig,
    QuadResult,
    QuadratureNotConverged,
    TailBound,
    integrate_finite,
    integrate_half_line,
)
from .representations import (
    Method,
    RepresentationResult,
    catalan_binet,
    catalan_gamma_closed_form,
    catalan_malmsten,
    catalan_penson_mellin,
    catalan_penson_moment,
    compare_representations,
)
from .series import (
    GlaisherResult,
    SeriesResult,
    TermBudgetExhausted,
    glaisher_from_integral,
    glaisher_oracle,
    series_tail_bound,
    stewart_sum_odd_weight,
    stewart_sum_plain,
    sum_rule_term,
)

__version__ = "0.1.0"

__all__ = [
    "CatalanTable",
    "GlaisherResult",
    "HalfLineTransform",
    "Integrand",
    "IntegrandEvaluationError",
    "KernelSpec",
    "Method",
    "QuadConfig",
    "QuadResult",
    "QuadratureNotConverged",
    "RepresentationResult",
    "SeriesResult",
    "TailBound",
    "TermBudgetExhausted",
    "binet_catalan_kernel",
    "binet_theta",
    "catalan_binet",
    "catalan_exact",
    "catalan_gamma_closed_form",
    "catalan_hypergeometric",
    "catalan_malmsten",
    "catalan_penson_mellin",
    "catalan_penson_moment",
    "catalan_segner",
    "compare_representations",
    "count_balanced_parentheses",
    "count_polygon_triangulations",
    "glaisher_from_integral",
    "glaisher_oracle",
    "integrate_finite",
    "integrate_half_line",
    "ln_exact",
    "log_gamma_difference_kernel",
    "log_gamma_malmsten",
    "log_gamma_reference",
    "malmsten_catalan_kernel",
    "series_tail_bound",
    "stewart_sum_odd_weight",
    "stewart_sum_plain",
    "sum_rule_term",
]
