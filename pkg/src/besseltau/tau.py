"""Tau-function evaluation, logarithmic derivatives, and ODE residuals.

Three independent routes compute the same normalized tau function
(the full tau divided by t^{nu^2}, so tau(0) = 1):

* ``fredholm``  — determinant of I - A D in the truncated mode basis;
* ``maya``      — direct sum over pairs of Maya diagrams;
* ``nekrasov``  — charge-graded sum of instanton sums.

The log-derivative zeta = t d/dt log tau_full (prefactor included) is
computed analytically for the series routes, by differentiating the
t-powers term by term, and by a 5-point 4th-order stencil for the
Fredholm route; the sigma-form and Painleve III (D8) residuals then
quantify how well each route satisfies the defining ODEs.

Real positive t is assumed for derivatives; complex t is accepted for
plain evaluation with principal branches throughout (branch continuity
across arg t = pi is not tracked).
"""

import cmath
import math
import warnings
from dataclasses import dataclass, field

from .errors import BesselTauError
from .kernel import ModeMatrices, fredholm_det, rank_one_residual
from .monodromy import MonodromyParams
from .nekrasov import (
    SeriesTruncation,
    check_lemma_identities,
    quasi_periodicity_residual,
    tau_series_terms,
    z_dual_terms,
)
from .summation import CompensatedSum, kahan_sum

__all__ = [
    "METHODS",
    "TauValue",
    "tau",
    "zeta",
    "zeta_derivatives",
    "ode_residual",
    "painleve_q",
    "sine_gordon_map",
    "sine_gordon_residual",
    "cross_validate",
]

METHODS = ("fredholm", "maya", "nekrasov")

#: |t| beyond which truncated evaluations are not trusted by default
DEFAULT_RELIABLE_RADIUS = 0.5


@dataclass(frozen=True)
class TauValue:
    """One tau evaluation: normalized value, provenance and error estimate."""

    t: complex
    tau: complex
    method: str
    truncation: dict = field(default_factory=dict)
    est_error: float = 0.0

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.est_error < 0:
            raise ValueError("est_error must be nonnegative")


def _series_terms(params: MonodromyParams, method: str, trunc: SeriesTruncation):
    """(exponent, coefficient) records for the chosen series route."""
    if method == "maya":
        return [(e, c) for (_, _, e, c) in tau_series_terms(params, trunc)]
    if method == "nekrasov":
        return [(e, c) for (_, _, e, c) in z_dual_terms(params, trunc)]
    raise ValueError(f"no series terms for method {method!r}")


def _eval_terms(terms, t: complex) -> complex:
    return kahan_sum(c * t**e for e, c in terms)


def _check_radius(t, reliable_radius, force):
    if abs(t) > reliable_radius and not force:
        warnings.warn(
            f"|t| = {abs(t):.3g} exceeds the reliable radius {reliable_radius}; "
            "truncation error estimates may be optimistic",
            stacklevel=3,
        )


def tau(
    t,
    params: MonodromyParams,
    method: str = "fredholm",
    n_modes: int = 12,
    trunc: SeriesTruncation = None,
    reliable_radius: float = DEFAULT_RELIABLE_RADIUS,
    force: bool = False,
) -> TauValue:
    """Normalized tau function at t by one of the three routes.

    The error estimate is the change of the value at the next-larger
    truncation (two more modes, or weight cutoff + 1).
    """
    t = complex(t)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    trunc = trunc or SeriesTruncation()
    if t == 0:
        meta = (
            {"n_modes": n_modes}
            if method == "fredholm"
            else {"weight_cutoff": trunc.weight_cutoff, "charge_cutoff": trunc.charge_cutoff}
        )
        return TauValue(t=t, tau=1.0 + 0.0j, method=method, truncation=meta, est_error=0.0)
    _check_radius(t, reliable_radius, force)

    if method == "fredholm":
        val = fredholm_det(ModeMatrices.build(params, t, n_modes))
        finer = fredholm_det(ModeMatrices.build(params, t, n_modes + 2))
        return TauValue(
            t=t,
            tau=val,
            method=method,
            truncation={"n_modes": n_modes},
            est_error=abs(val - finer),
        )

    val = _eval_terms(_series_terms(params, method, trunc), t)
    finer_trunc = SeriesTruncation(trunc.weight_cutoff + 1, trunc.charge_cutoff)
    finer = _eval_terms(_series_terms(params, method, finer_trunc), t)
    return TauValue(
        t=t,
        tau=val,
        method=method,
        truncation={
            "weight_cutoff": trunc.weight_cutoff,
            "charge_cutoff": trunc.charge_cutoff,
        },
        est_error=abs(val - finer),
    )


# ---------------------------------------------------------------------------
# Logarithmic derivatives


def _theta_cumulants(terms, t: complex, order: int = 4):
    """Cumulants theta^k log(sum) for theta = t d/dt, k = 1..order.

    With S_k = sum c e^k t^e and R_k = S_k / S_0:
    theta F = R1, theta^2 F = R2 - R1^2, and so on through order 4.
    """
    sums = [CompensatedSum() for _ in range(order + 1)]
    for e, c in terms:
        base = c * t**e
        power = 1.0
        for k in range(order + 1):
            sums[k].add(base * power)
            power *= e
    s0 = sums[0].value
    if s0 == 0:
        raise BesselTauError(f"tau vanishes at t = {t}; log-derivative undefined")
    r = [sums[k].value / s0 for k in range(order + 1)]
    th1 = r[1]
    th2 = r[2] - r[1] ** 2
    th3 = r[3] - 3 * r[1] * r[2] + 2 * r[1] ** 3
    th4 = r[4] - 4 * r[1] * r[3] - 3 * r[2] ** 2 + 12 * r[1] ** 2 * r[2] - 6 * r[1] ** 4
    return th1, th2, th3, th4


def _default_step(t: float) -> float:
    return max(1e-3, t / 100)


def _log_tau_full(t, params, method, n_modes, trunc):
    return params.nu**2 * cmath.log(t) + cmath.log(
        tau(t, params, method, n_modes, trunc, force=True).tau
    )


# 7-point central coefficients for d/ds and d^2/ds^2 (6th order) and for
# d^3/ds^3 and d^4/ds^4 (4th order), at offsets -3..3
_C1 = (-1 / 60, 3 / 20, -3 / 4, 0.0, 3 / 4, -3 / 20, 1 / 60)
_C2 = (1 / 90, -3 / 20, 3 / 2, -49 / 18, 3 / 2, -3 / 20, 1 / 90)
_C3 = (1 / 8, -1.0, 13 / 8, 0.0, -13 / 8, 1.0, -1 / 8)
_C4 = (-1 / 6, 2.0, -13 / 2, 28 / 3, -13 / 2, 2.0, -1 / 6)


def _stencil_theta(t, params, method, h, n_modes, trunc):
    """theta^k log tau_full, k = 1..4, from a stencil in s = log t.

    The step in s is h / max(t, 0.05): comparable to a step of h in t,
    but capped so that small t does not inflate the relative step.
    Differencing in log t keeps the t^{nu^2} prefactor exactly linear in
    the stencil variable, so it contributes no stencil error past k = 1.
    """
    if h <= 0 or h >= t / 4:
        raise ValueError(f"stencil step h = {h} must lie in (0, t/4) = (0, {t / 4})")
    delta = h / max(t, 0.05)
    f = [
        _log_tau_full(t * math.exp(k * delta), params, method, n_modes, trunc)
        for k in range(-3, 4)
    ]
    return tuple(
        sum(c * v for c, v in zip(coeffs, f)) / delta**k
        for k, coeffs in enumerate((_C1, _C2, _C3, _C4), start=1)
    )


def zeta_derivatives(
    t,
    params: MonodromyParams,
    method: str = "maya",
    h: float = None,
    n_modes: int = 12,
    trunc: SeriesTruncation = None,
):
    """(zeta, zeta', zeta'', zeta''') at real positive t.

    Series routes differentiate the t-powers exactly; the Fredholm route
    takes theta-derivatives of log tau_full by the log-space stencil.
    """
    t = float(t)
    if t <= 0:
        raise ValueError("zeta requires t > 0")
    trunc = trunc or SeriesTruncation()
    if method in ("maya", "nekrasov"):
        th1, th2, th3, th4 = _theta_cumulants(_series_terms(params, method, trunc), t)
        th1 += params.nu**2
    elif method == "fredholm":
        h = h or _default_step(t)
        th1, th2, th3, th4 = _stencil_theta(t, params, method, h, n_modes, trunc)
    else:
        raise ValueError(f"unknown method {method!r}")
    return (
        th1,
        th2 / t,
        (th3 - th2) / t**2,
        (th4 - 3 * th3 + 2 * th2) / t**3,
    )


def zeta(
    t,
    params: MonodromyParams,
    method: str = "maya",
    h: float = None,
    n_modes: int = 12,
    trunc: SeriesTruncation = None,
) -> complex:
    """zeta(t) = t d/dt log tau_full, prefactor t^{nu^2} included."""
    return zeta_derivatives(t, params, method, h, n_modes, trunc)[0]


def ode_residual(
    t,
    params: MonodromyParams,
    method: str = "maya",
    h: float = None,
    n_modes: int = 12,
    trunc: SeriesTruncation = None,
) -> float:
    """Defect of the sigma-form: |(t zeta'')^2 - 4 zeta'^2 (zeta - t zeta') + 4 zeta'|."""
    z, zp, zpp, _ = zeta_derivatives(t, params, method, h, n_modes, trunc)
    return abs((t * zpp) ** 2 - 4 * zp**2 * (z - t * zp) + 4 * zp)


def painleve_q(
    t,
    params: MonodromyParams,
    method: str = "maya",
    h: float = None,
    n_modes: int = 12,
    trunc: SeriesTruncation = None,
):
    """(q, residual) with q = -t zeta' and the degenerate-III defect.

    residual = |q'' - q'^2/q + q'/t - 2 q^2/t^2 + 2/t|, derivatives in t.
    Series routes evaluate everything analytically; the Fredholm route
    uses the same log-space stencil as zeta_derivatives.
    """
    t = float(t)
    trunc = trunc or SeriesTruncation()
    if method in ("maya", "nekrasov"):
        _, th2, th3, th4 = _theta_cumulants(_series_terms(params, method, trunc), t)
    elif method == "fredholm":
        h = h or _default_step(t)
        _, th2, th3, th4 = _stencil_theta(t, params, method, h, n_modes, trunc)
    else:
        raise ValueError(f"unknown method {method!r}")
    q = -th2
    qp = -th3 / t
    qpp = (th3 - th4) / t**2
    if q == 0:
        raise BesselTauError(f"q(t) = 0 at t = {t}; equation residual undefined")
    if abs(q) < 1e-8:
        warnings.warn(f"|q(t)| = {abs(q):.2e} is near zero; residual ill-conditioned")
    residual = abs(qpp - qp**2 / q + qp / t - 2 * q**2 / t**2 + 2 / t)
    return q, residual


# ---------------------------------------------------------------------------
# Radial sine-Gordon picture


def _q_at(t, params, method, trunc):
    _, th2, _, _ = _theta_cumulants(_series_terms(params, method, trunc), t)
    return -th2


def sine_gordon_map(
    r,
    params: MonodromyParams,
    method: str = "maya",
    trunc: SeriesTruncation = None,
) -> complex:
    """Field u(r) with q(2^{-12} r^4) = -2^{-6} r^2 exp(i u(r)).

    Principal logarithm; raises when q vanishes at the mapped time.
    """
    r = float(r)
    if r <= 0:
        raise ValueError("sine_gordon_map requires r > 0")
    trunc = trunc or SeriesTruncation()
    t = 2.0**-12 * r**4
    q = _q_at(t, params, method, trunc)
    if q == 0:
        raise BesselTauError(f"q = 0 at t = {t}; sine-Gordon field undefined")
    return -1j * cmath.log(-(2.0**6) * q / r**2)


def sine_gordon_residual(
    r,
    params: MonodromyParams,
    method: str = "maya",
    trunc: SeriesTruncation = None,
    h: float = None,
) -> float:
    """Defect |u_rr + u_r / r + sin u| from a 5-point stencil in r."""
    r = float(r)
    h = h or max(1e-3, r / 200)
    u = [
        sine_gordon_map(r + k * h, params, method, trunc) for k in (-2, -1, 0, 1, 2)
    ]
    ur = (u[0] - 8 * u[1] + 8 * u[3] - u[4]) / (12 * h)
    urr = (-u[0] + 16 * u[1] - 30 * u[2] + 16 * u[3] - u[4]) / (12 * h**2)
    return abs(urr + ur / r + cmath.sin(u[2]))


# ---------------------------------------------------------------------------
# Cross-validation battery


def cross_validate(
    t,
    params: MonodromyParams,
    n_modes: int = 12,
    trunc: SeriesTruncation = None,
    check_modes: bool = True,
) -> dict:
    """Run all three routes at one t and every structural identity check.

    Returns a report dict; nothing is asserted, failures simply show up
    as large residuals (near-resonant parameters amplify them).
    """
    t = complex(t)
    trunc = trunc or SeriesTruncation()
    values = {
        m: tau(t, params, m, n_modes=n_modes, trunc=trunc, force=True) for m in METHODS
    }
    pair_diffs = {}
    for i, m1 in enumerate(METHODS):
        for m2 in METHODS[i + 1 :]:
            v1, v2 = values[m1].tau, values[m2].tau
            scale = max(abs(v1), abs(v2), 1e-300)
            pair_diffs[f"{m1}_vs_{m2}"] = abs(v1 - v2) / scale
    report = {
        "t": t,
        "tau": {m: values[m].tau for m in METHODS},
        "est_error": {m: values[m].est_error for m in METHODS},
        "pairwise_rel_diff": pair_diffs,
        "rank_one_residual": {
            "a": rank_one_residual(params, 4, "a"),
            "d": rank_one_residual(params, 4, "d"),
        },
        "lemma_identities": check_lemma_identities(params.nu, weight_cutoff=2, charge_cutoff=1),
        "quasi_periodicity": quasi_periodicity_residual(
            params, SeriesTruncation(min(trunc.weight_cutoff, 4), trunc.charge_cutoff)
        ),
    }
    if check_modes:
        from .kernel import kernel_a, mode_matrix_a, modes_by_quadrature
        import numpy as np

        n_small = 4
        quad = modes_by_quadrature(
            lambda zp, z: kernel_a(params, zp, z), n_small, radius=1.0, block="a"
        )
        closed = mode_matrix_a(params, n_small)
        report["quadrature_mode_diff"] = float(np.max(np.abs(quad - closed)))
    return report
