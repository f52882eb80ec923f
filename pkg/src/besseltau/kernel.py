"""The generalized Bessel kernel and its Fredholm determinant.

Two faces of the same operator K = [[0, a], [d, 0]]:

* continuous 2x2 matrix kernels a(z', z), d(z', z) built from the matrix
  J_sigma(z', z), bilinear in the entire functions j_sigma;
* their Fourier modes, which are Cauchy matrices up to diagonal factors
  and phases, assembled here into finite blocks A (rows = hole modes,
  columns = particle modes) and D (transposed roles).

The tau function is det(1 - K) = det(I - A D) in the truncated mode
basis.  Fourier modes extracted from circle samples of the continuous
kernels (``modes_by_quadrature``) serve as an independent cross-check of
the closed-form entries.

Mode ordering is the fixed interleaving
[(1/2, +), (1/2, -), (3/2, +), (3/2, -), ...]; determinants do not care,
and this keeps block growth local when the truncation order N increases.
All fractional powers take the principal branch, arg in (-pi, pi].
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import CauchyCollisionError, DegenerateParameterError, QuadratureConvergenceError
from .monodromy import PAULI_Y, MonodromyParams
from .special import j_sigma, ln_gamma, pochhammer

__all__ = [
    "ModeMatrices",
    "bessel_kernel_J",
    "kernel_a",
    "kernel_d",
    "mode_matrix_a",
    "mode_matrix_d",
    "modes_by_quadrature",
    "fredholm_det",
    "fredholm_det_block",
    "adaptive_fredholm_det",
    "rank_one_residual",
    "mode_list",
]

_IDENT = np.eye(2, dtype=complex)

#: relative closeness of z and z' below which the removable singularity
#: at z = z' is evaluated by a symmetric finite difference
_DIAGONAL_TOL = 1e-6
_DIAGONAL_STEP = 1e-5


def _check_sigma(sigma: complex):
    two_sigma = 2 * complex(sigma)
    if abs(two_sigma.imag) + abs(two_sigma.real - round(two_sigma.real)) < 1e-8:
        raise DegenerateParameterError(f"2*sigma = {two_sigma} too close to an integer")


def bessel_kernel_J(sigma, zp, z) -> np.ndarray:
    """The 2x2 matrix J_sigma(z', z); equals the identity at z' = z."""
    _check_sigma(sigma)
    sigma, zp, z = complex(sigma), complex(zp), complex(z)
    pref = cmath.pi / cmath.sin(2 * cmath.pi * sigma)
    jp = j_sigma(sigma + 0.5, z)
    jm = j_sigma(-sigma, z)
    js = j_sigma(sigma, z)
    jms = j_sigma(-sigma - 0.5, z)
    jp_p = j_sigma(sigma + 0.5, zp)
    jm_p = j_sigma(-sigma, zp)
    js_p = j_sigma(sigma, zp)
    jms_p = j_sigma(-sigma - 0.5, zp)
    return pref * np.array(
        [
            [zp * jp * jm_p - js * jms_p, 1j * zp * jms * jm_p - 1j * z * jm * jms_p],
            [1j * jp * js_p - 1j * js * jp_p, z * jm * jp_p - jms * js_p],
        ]
    )


def _j_core(sigma, zp, z) -> np.ndarray:
    """(J_sigma(z', z) - 1)/(z - z'), with the removable diagonal limit."""
    scale = max(abs(z), abs(zp), 1.0)
    if abs(z - zp) < _DIAGONAL_TOL * scale:
        h = _DIAGONAL_STEP * scale
        return (bessel_kernel_J(sigma, zp, z + h) - bessel_kernel_J(sigma, zp, z - h)) / (2 * h)
    return (bessel_kernel_J(sigma, zp, z) - _IDENT) / (z - zp)


def kernel_a(params: MonodromyParams, zp, z) -> np.ndarray:
    """Continuous a-kernel; entire in both arguments."""
    s, e = params.sigma, params.eta
    phase = cmath.exp(1j * cmath.pi * (s - 2 * e))
    left = np.diag([phase, 1 / phase])
    right = np.diag([1 / phase, phase])
    return left @ _j_core(s, zp, z) @ right


def kernel_d(params: MonodromyParams, t, zp, z) -> np.ndarray:
    """Continuous d-kernel; analytic in C* x C*, vanishes as t -> 0."""
    zp, z, t = complex(zp), complex(z), complex(t)
    if zp == 0 or z == 0:
        raise ValueError("kernel_d requires z, z' != 0")
    s, nu = params.sigma, params.nu
    scale = max(abs(z), abs(zp))
    if abs(z - zp) < _DIAGONAL_TOL * scale:
        h = _DIAGONAL_STEP * scale
        core = -(
            bessel_kernel_J(s, t / zp, t / (z + h)) - bessel_kernel_J(s, t / zp, t / (z - h))
        ) / (2 * h)
    else:
        core = (_IDENT - bessel_kernel_J(s, t / zp, t / z)) / (z - zp)
    tw = t**nu * cmath.exp(1j * cmath.pi * s)
    left = np.diag([tw, 1 / tw])
    right = np.diag([1 / tw, tw])
    return left @ PAULI_Y @ core @ PAULI_Y @ right


# ---------------------------------------------------------------------------
# Fourier modes


def mode_list(n: int):
    """Interleaved mode enumeration [(1/2, +1), (1/2, -1), (3/2, +1), ...]."""
    out = []
    for k in range(n):
        out.append((k + 0.5, 1))
        out.append((k + 0.5, -1))
    return out


def _gamma_root(s: int, nu: complex) -> complex:
    """Principal sqrt of Gamma(1+2s nu)/Gamma(1-2s nu) via log-Gammas."""
    return cmath.exp(0.5 * (ln_gamma(1 + 2 * s * nu) - ln_gamma(1 - 2 * s * nu)))


def psi_mode(p: float, s: int, nu: complex, branch_sign: int = 1) -> complex:
    m = int(p - 0.5)
    root = branch_sign * _gamma_root(s, nu)
    return root * cmath.exp(-1j * cmath.pi * s / 4) / (
        math.factorial(m) * pochhammer(1 - 2 * s * nu, m)
    )


def psibar_mode(p: float, s: int, nu: complex, branch_sign: int = 1) -> complex:
    m = int(p - 0.5)
    root = branch_sign / _gamma_root(s, nu)
    return root * cmath.exp(1j * cmath.pi * s / 4) / (
        math.factorial(m) * pochhammer(2 * s * nu, m + 1)
    )


def _denominator(p, sp, q, s, nu):
    """x_{p;s'} - x_{-q;s} = p + q + (s - s') nu, guarded against collision."""
    den = p + q + (s - sp) * nu
    if abs(den) < 1e-10:
        raise CauchyCollisionError(
            f"shifted momenta collide: p={p}, s'={sp}, q={q}, s={s}, nu={nu}"
        )
    return den


def mode_matrix_a(params: MonodromyParams, n: int, branch_sign=None) -> np.ndarray:
    """Closed-form a-modes: rows are hole modes (-q, s), columns particle modes (p, s').

    Each entry is psi^{p;s'}(nu) psibar_{q;s}(nu) / (x_{p;s'} - x_{-q;s})
    times the phase exp(i pi (2 eta - sigma)(s - s')): a Cauchy matrix up
    to diagonal factors.  ``branch_sign`` optionally flips the square-root
    branch inside psi and psibar per color, {+1: +-1, -1: +-1}.
    """
    branch_sign = branch_sign or {1: 1, -1: 1}
    nu, s_par, e_par = params.nu, params.sigma, params.eta
    ms = mode_list(n)
    psis = {(p, s): psi_mode(p, s, nu, branch_sign[s]) for p, s in ms}
    psibars = {(q, s): psibar_mode(q, s, nu, branch_sign[s]) for q, s in ms}
    a = np.empty((2 * n, 2 * n), dtype=complex)
    for r, (q, s) in enumerate(ms):
        for c, (p, sp) in enumerate(ms):
            a[r, c] = (
                psis[p, sp]
                * psibars[q, s]
                / _denominator(p, sp, q, s, nu)
                * cmath.exp(1j * cmath.pi * (2 * e_par - s_par) * (s - sp))
            )
    return a


def mode_matrix_d(params: MonodromyParams, t, n: int, branch_sign=None) -> np.ndarray:
    """Closed-form d-modes: rows are particle modes (p, s'), columns hole modes (-q, s).

    The t dependence is isolated in the factors t^{(s - s') nu + p + q};
    the t-independent core is the a-matrix structure with nu -> -nu and
    phase exp(i pi sigma (s - s')).
    """
    branch_sign = branch_sign or {1: 1, -1: 1}
    t = complex(t)
    nu, s_par = params.nu, params.sigma
    ms = mode_list(n)
    if t == 0:
        return np.zeros((2 * n, 2 * n), dtype=complex)
    psis = {(q, s): psi_mode(q, s, -nu, branch_sign[s]) for q, s in ms}
    psibars = {(p, s): psibar_mode(p, s, -nu, branch_sign[s]) for p, s in ms}
    d = np.empty((2 * n, 2 * n), dtype=complex)
    for r, (p, sp) in enumerate(ms):
        for c, (q, s) in enumerate(ms):
            d[r, c] = (
                psis[q, s]
                * psibars[p, sp]
                / _denominator(p, sp, q, s, nu)
                * cmath.exp(1j * cmath.pi * s_par * (s - sp))
                * t ** ((s - sp) * nu + p + q)
            )
    return d


@dataclass(frozen=True)
class ModeMatrices:
    """Truncated Fourier-mode blocks of K at truncation order N."""

    a: np.ndarray
    d: np.ndarray
    n: int
    t: complex

    @classmethod
    def build(cls, params: MonodromyParams, t, n: int, branch_sign=None):
        return cls(
            a=mode_matrix_a(params, n, branch_sign),
            d=mode_matrix_d(params, t, n, branch_sign),
            n=n,
            t=complex(t),
        )

    @property
    def ordering(self):
        return mode_list(self.n)


def modes_by_quadrature(kern, n: int, radius: float, block: str = "a", samples=None) -> np.ndarray:
    """Extract mode matrices from circle samples of a continuous kernel.

    ``kern`` is a callable (z', z) -> 2x2 array.  The z' grid is offset by
    half a step so the removable diagonal z = z' is never sampled.  For
    block 'a' the coefficients of z'^{p-1/2} z^{q-1/2} are returned in the
    layout of mode_matrix_a; for 'd', the coefficients of
    z'^{-1/2-q} z^{-1/2-p} in the layout of mode_matrix_d.

    Raises QuadratureConvergenceError when the sampled mode spectrum has
    not decayed below 1e-10 (relative) at the Nyquist index.
    """
    if block not in ("a", "d"):
        raise ValueError("block must be 'a' or 'd'")
    m = samples or max(64, 8 * n)
    theta = 2 * np.pi * np.arange(m) / m
    zp = radius * np.exp(1j * (theta + np.pi / m))
    z = radius * np.exp(1j * theta)
    vals = np.empty((2, 2, m, m), dtype=complex)
    for j in range(m):
        for k in range(m):
            vals[:, :, j, k] = kern(zp[j], z[k])
    modes = np.fft.fft2(vals, axes=(2, 3)) / m**2

    top = np.max(np.abs(modes))
    nyq = m // 2
    edge = max(np.max(np.abs(modes[:, :, nyq, :])), np.max(np.abs(modes[:, :, :, nyq])))
    if top > 0 and edge > 1e-10 * top:
        raise QuadratureConvergenceError(
            f"modes at Nyquist index {nyq} not below 1e-10 of peak ({edge / top:.2e})"
        )

    out = np.empty((2 * n, 2 * n), dtype=complex)
    colors = (1, -1)
    for r in range(n):
        for c in range(n):
            if block == "a":
                mzp, mz = c, r  # z'^{p-1/2}, z^{q-1/2}
            else:
                mzp, mz = -1 - c, -1 - r  # z'^{-1/2-q}, z^{-1/2-p}
            coef = modes[:, :, mzp % m, mz % m] * np.exp(-1j * np.pi * mzp / m)
            coef = coef / radius ** (mzp + mz)
            for i, _ in enumerate(colors):
                for j, _ in enumerate(colors):
                    if block == "a":
                        # kernel row s' (z'), column s (z) -> A[(q,s),(p,s')]
                        out[2 * r + j, 2 * c + i] = coef[i, j]
                    else:
                        # kernel row s (z'), column s' (z) -> D[(p,s'),(q,s)]
                        out[2 * r + j, 2 * c + i] = coef[i, j]
    return out


# ---------------------------------------------------------------------------
# Determinants


def fredholm_det(modes: ModeMatrices) -> complex:
    """det(I - A D) by LU factorization with partial pivoting."""
    size = 2 * modes.n
    return complex(np.linalg.det(np.eye(size) - modes.a @ modes.d))


def fredholm_det_block(modes: ModeMatrices) -> complex:
    """Same determinant from the 4N x 4N block form [[I, -A], [-D, I]]."""
    size = 2 * modes.n
    eye = np.eye(size)
    top = np.hstack([eye, -modes.a])
    bottom = np.hstack([-modes.d, eye])
    return complex(np.linalg.det(np.vstack([top, bottom])))


def adaptive_fredholm_det(params: MonodromyParams, t, tol: float = 1e-12, max_n: int = 64):
    """Double N until the determinant stabilizes below tol (or N hits the cap).

    Returns (value, n, est_error).
    """
    n = 4
    prev = fredholm_det(ModeMatrices.build(params, t, n))
    while n < max_n:
        n2 = min(2 * n, max_n)
        cur = fredholm_det(ModeMatrices.build(params, t, n2))
        if abs(cur - prev) < tol:
            return cur, n2, abs(cur - prev)
        prev, n = cur, n2
    return prev, n, abs(cur - prev) if n > 4 else 0.0


def rank_one_residual(params: MonodromyParams, n: int, which: str = "a") -> float:
    """Max deviation from the rank-one factorization of the mode matrices.

    For every retained (p, s'), (q, s) the entry times its Cauchy
    denominator must reproduce the outer product psi x psibar with the
    block's twist phase; 'd' checks the t-independent core, which is the
    same identity under nu -> -nu.
    """
    if n == 0:
        return 0.0
    nu, s_par, e_par = params.nu, params.sigma, params.eta
    ms = mode_list(n)
    worst = 0.0
    if which == "a":
        mat = mode_matrix_a(params, n)
        for r, (q, s) in enumerate(ms):
            for c, (p, sp) in enumerate(ms):
                rhs = (
                    psi_mode(p, sp, nu)
                    * psibar_mode(q, s, nu)
                    * cmath.exp(1j * cmath.pi * (2 * e_par - s_par) * (s - sp))
                )
                lhs = (p + q + (s - sp) * nu) * mat[r, c]
                worst = max(worst, abs(lhs - rhs))
    elif which == "d":
        for p, sp in ms:
            for q, s in ms:
                core = (
                    psi_mode(q, s, -nu)
                    * psibar_mode(p, sp, -nu)
                    / (p + q + (s - sp) * nu)
                    * cmath.exp(1j * cmath.pi * s_par * (s - sp))
                )
                rhs = (
                    psi_mode(q, s, -nu)
                    * psibar_mode(p, sp, -nu)
                    * cmath.exp(1j * cmath.pi * s_par * (s - sp))
                )
                lhs = (p + q + (s - sp) * nu) * core
                worst = max(worst, abs(lhs - rhs))
    else:
        raise ValueError("which must be 'a' or 'd'")
    return worst
