"""Floating-point evaluation routes for Catalan numbers.

Five independent routes, all assembled in the log domain because C_n
overflows a double near n = 260 (and the 4^n prefactors even earlier):

* ``gamma_closed_form``: ln C_n = 2n ln 2 - ln(pi)/2
  + ln Gamma(n + 1/2) - ln Gamma(n + 2), from the duplication identity
  binomial(2n, n) = 4^n Gamma(n + 1/2) / (sqrt(pi) Gamma(n + 1)).
  No quadrature; the Gamma factors come from the Stirling reference.
* ``malmsten``: same prefactor, with the Gamma difference evaluated as
  the half-line integral of the Malmsten-Catalan kernel.
* ``binet``: ln C_n = 3/2 + 2n ln 2 + n ln(n + 1/2) - ln(pi)/2
  - (n + 3/2) ln(n + 2) + integral of the Binet-Catalan kernel.
  Derivation of the prefactor: write ln Gamma(x + 1) = S(x) + theta(x)
  with Stirling core S(x) = x ln x - x + ln(2 pi x)/2 and Binet
  correction theta.  Shifting both Gamma factors up by one via
  Gamma(z + 1) = z Gamma(z),

      ln Gamma(n + 1/2) - ln Gamma(n + 2)
          = S(n + 1/2) - S(n + 2) - ln((n + 1/2)/(n + 2))
            + theta(n + 1/2) - theta(n + 2),

  and expanding S gives
  S(n + 1/2) - S(n + 2) = (n + 1/2) ln(n + 1/2) - (n + 2) ln(n + 2)
  + 3/2 + ln((n + 1/2)/(n + 2))/2, so the elementary part collapses to

      S(n + 1/2) - S(n + 2) - ln((n + 1/2)/(n + 2))
          = 3/2 + n ln(n + 1/2) - (n + 3/2) ln(n + 2).

  Adding the common ln(4^n / sqrt(pi)) yields the prefactor; in linear
  scale it reads e^{3/2} 4^n (n + 1/2)^n / (sqrt(pi) (n + 2)^{n + 3/2}).
  The collapsed identity is verified numerically in the test suite, and
  the theta difference is exactly the Binet-Catalan kernel integral.
* ``penson_moment``: C_n = (2/pi) 4^n I with
  I = integral_{-1}^{1} t^{2n} sqrt(1 - t^2) dt, a finite-interval
  moment form.
* ``penson_mellin``: C_n = (4^{n+2}/pi) I with
  I = integral_0^inf sqrt(t) / (4t + 1)^{n+2} dt.  The integrand decays
  only algebraically, so this route forces the NONE (split-and-invert)
  half-line strategy regardless of the configured transform.

Both Penson integrals are computed in linear scale (they fit doubles
comfortably for n <= 200) and only their logs enter the assembly, so
the quadrature error estimate is propagated to the ln scale as
estimate / value.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .exact import ln_exact
from .kernels import (
    binet_catalan_kernel,
    log_gamma_reference,
    malmsten_catalan_kernel,
)
from .quadrature import (
    HalfLineTransform,
    Integrand,
    QuadConfig,
    QuadResult,
    integrate_finite,
    integrate_half_line,
)

__all__ = [
    "PENSON_MAX_N",
    "Method",
    "RepresentationResult",
    "catalan_binet",
    "catalan_gamma_closed_form",
    "catalan_malmsten",
    "catalan_penson_mellin",
    "catalan_penson_moment",
    "compare_representations",
]

_LN2 = math.log(2.0)
_LN_PI = math.log(math.pi)

# The Penson integrals shrink like 4^-n relative to their prefactor;
# past n = 200 the moment integral underflows the rel_tol regime and
# the routes stop being meaningful cross-checks.
PENSON_MAX_N = 200


class Method(enum.Enum):
    """Evaluation route identifiers; values are the wire names used in reports."""

    GAMMA_CLOSED_FORM = "gamma_closed_form"
    MALMSTEN = "malmsten"
    BINET = "binet"
    PENSON_MOMENT = "penson_moment"
    PENSON_MELLIN = "penson_mellin"


@dataclass(frozen=True)
class RepresentationResult:
    """One route's output for one n, against the exact value.

    ``ln_value`` is the route's ln C_n; ``exact_ln`` the integer-backed
    reference; ``quad_error_estimate`` the quadrature error propagated
    to ln scale (0 for the quadrature-free closed form).  ``converged``
    is False when the underlying quadrature gave up or the route failed
    outright (then ln_value and abs_err_ln are NaN).
    """

    n: int
    method: Method
    ln_value: float
    exact_ln: float
    abs_err_ln: float
    quad_error_estimate: float
    evaluations: int
    converged: bool


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"Catalan index must be >= 0, got {n}")


def _assemble(
    n: int,
    method: Method,
    ln_value: float,
    quad_error_estimate: float,
    evaluations: int,
    converged: bool,
) -> RepresentationResult:
    exact = ln_exact(n)
    return RepresentationResult(
        n=n,
        method=method,
        ln_value=ln_value,
        exact_ln=exact,
        abs_err_ln=abs(ln_value - exact),
        quad_error_estimate=quad_error_estimate,
        evaluations=evaluations,
        converged=converged,
    )


def _prefactor_ln(n: int) -> float:
    """ln(4^n / sqrt(pi)), the prefactor common to the Gamma-based routes."""
    return 2.0 * n * _LN2 - 0.5 * _LN_PI


def catalan_gamma_closed_form(n: int) -> RepresentationResult:
    """ln C_n from the Gamma closed form with Stirling-series evaluation.

    Quadrature-free; this is the fast route the integral routes are
    measured against when the exact integer is too slow to build.
    """
    _check_index(n)
    ln_value = (
        _prefactor_ln(n)
        + log_gamma_reference(n + 0.5)
        - log_gamma_reference(n + 2.0)
    )
    return _assemble(n, Method.GAMMA_CLOSED_FORM, ln_value, 0.0, 0, True)


def catalan_malmsten(n: int, config: QuadConfig) -> RepresentationResult:
    """ln C_n = ln(4^n / sqrt(pi)) + integral of the Malmsten-Catalan kernel.

    The identity is derived for n >= 1; at n = 0 the same formula holds
    by direct evaluation (the integral is ln(pi)/2), so n = 0 is
    accepted too.
    """
    _check_index(n)
    spec = malmsten_catalan_kernel(n)
    qr = integrate_half_line(spec.integrand, config, tail=spec.tail_constants)
    ln_value = _prefactor_ln(n) + qr.value
    return _assemble(
        n, Method.MALMSTEN, ln_value, qr.error_estimate, qr.evaluations, qr.converged
    )


def catalan_binet(n: int, config: QuadConfig) -> RepresentationResult:
    """ln C_n = 3/2 + 2n ln 2 + n ln(n + 1/2) - ln(pi)/2 - (n + 3/2) ln(n + 2)
    + integral of the Binet-Catalan kernel.

    The elementary prefactor is exp(3/2) 4^n (n + 1/2)^n /
    (sqrt(pi) (n + 2)^{n + 3/2}) in linear scale; see the module
    docstring for how it arises from the Stirling cores.
    """
    _check_index(n)
    spec = binet_catalan_kernel(n)
    qr = integrate_half_line(spec.integrand, config, tail=spec.tail_constants)
    ln_value = (
        1.5
        + 2.0 * n * _LN2
        + n * math.log(n + 0.5)
        - 0.5 * _LN_PI
        - (n + 1.5) * math.log(n + 2.0)
        + qr.value
    )
    return _assemble(
        n, Method.BINET, ln_value, qr.error_estimate, qr.evaluations, qr.converged
    )


def catalan_penson_moment(n: int, config: QuadConfig) -> RepresentationResult:
    """ln C_n = ln(2/pi) + 2n ln 2 + ln I, I = integral_{-1}^1 t^{2n} sqrt(1-t^2) dt."""
    _check_penson_index(n)

    def fn(t: float) -> float:
        return (t * t) ** n * math.sqrt((1.0 - t) * (1.0 + t))

    qr = integrate_finite(fn, -1.0, 1.0, config)
    ln_value = math.log(2.0) - _LN_PI + 2.0 * n * _LN2 + math.log(qr.value)
    return _assemble(
        n,
        Method.PENSON_MOMENT,
        ln_value,
        qr.error_estimate / qr.value,
        qr.evaluations,
        qr.converged,
    )


def catalan_penson_mellin(n: int, config: QuadConfig) -> RepresentationResult:
    """ln C_n = 2(n + 2) ln 2 - ln pi + ln I, I = integral_0^inf sqrt(t)/(4t+1)^{n+2} dt.

    The integrand decays like t^{-(n + 3/2)}, which defeats the
    exponential-truncation strategy outright, so the algebraic
    split-and-invert reduction is forced here independent of the
    configured transform.
    """
    _check_penson_index(n)
    power = n + 2.0

    def fn(t: float) -> float:
        if t <= 0.0:
            return 0.0
        return math.exp(0.5 * math.log(t) - power * math.log1p(4.0 * t))

    config_rational = QuadConfig(
        abs_tol=config.abs_tol,
        rel_tol=config.rel_tol,
        max_subdivisions=config.max_subdivisions,
        transform=HalfLineTransform.NONE,
    )
    qr = integrate_half_line(Integrand(fn=fn), config_rational)
    ln_value = 2.0 * power * _LN2 - _LN_PI + math.log(qr.value)
    return _assemble(
        n,
        Method.PENSON_MELLIN,
        ln_value,
        qr.error_estimate / qr.value,
        qr.evaluations,
        qr.converged,
    )


def _check_penson_index(n: int) -> None:
    if not 0 <= n <= PENSON_MAX_N:
        raise ValueError(f"Penson routes require 0 <= n <= {PENSON_MAX_N}, got {n}")


_ROUTES = (
    (Method.GAMMA_CLOSED_FORM, lambda n, cfg: catalan_gamma_closed_form(n)),
    (Method.MALMSTEN, catalan_malmsten),
    (Method.BINET, catalan_binet),
    (Method.PENSON_MOMENT, catalan_penson_moment),
    (Method.PENSON_MELLIN, catalan_penson_mellin),
)


def compare_representations(
    n_max: int, config: QuadConfig
) -> list[RepresentationResult]:
    """Evaluate every route for every n in [0, n_max].

    Returns exactly 5 (n_max + 1) rows ordered by (n, route); a route
    failure is recorded as a non-converged NaN row rather than aborting
    the sweep, so one bad pair cannot mask the rest of the table.
    """
    _check_index(n_max)
    rows: list[RepresentationResult] = []
    for n in range(n_max + 1):
        for method, route in _ROUTES:
            try:
                rows.append(route(n, config))
            except Exception:
                rows.append(
                    _assemble(n, method, float("nan"), float("inf"), 0, False)
                )
    return rows
