"""Unit tests for the tau engine."""

import math

import pytest

from besseltau.monodromy import MonodromyParams
from besseltau.nekrasov import SeriesTruncation
from besseltau.tau import (
    METHODS,
    TauValue,
    cross_validate,
    ode_residual,
    painleve_q,
    sine_gordon_map,
    sine_gordon_residual,
    tau,
    zeta,
    zeta_derivatives,
)

P_GENERIC = MonodromyParams.from_nu(0.37, 0.11)
P_ELEM_PLUS = MonodromyParams.from_nu(0.25, 0.25)  # tau = t^{1/16} e^{+4 sqrt t}
TRUNC = SeriesTruncation(6, 2)
TRUNC_FINE = SeriesTruncation(8, 4)


class TestTauValue:
    def test_method_validation(self):
        with pytest.raises(ValueError):
            TauValue(t=0.1, tau=1.0, method="magic")

    def test_negative_error_rejected(self):
        with pytest.raises(ValueError):
            TauValue(t=0.1, tau=1.0, method="maya", est_error=-1.0)


class TestTau:
    @pytest.mark.parametrize("method", METHODS)
    def test_normalization_at_origin(self, method):
        tv = tau(0.0, P_GENERIC, method, trunc=TRUNC)
        assert tv.tau == 1 and tv.est_error == 0

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            tau(0.05, P_GENERIC, "lax")

    def test_reliable_region_warning(self):
        with pytest.warns(UserWarning, match="reliable radius"):
            tau(0.7, P_GENERIC, "maya", trunc=TRUNC)

    def test_force_suppresses_warning(self):
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("error")
            tau(0.7, P_GENERIC, "maya", trunc=TRUNC, force=True)

    def test_est_error_brackets_truth(self):
        coarse = tau(0.05, P_GENERIC, "maya", trunc=SeriesTruncation(4, 2))
        fine = tau(0.05, P_GENERIC, "maya", trunc=SeriesTruncation(10, 3))
        assert abs(coarse.tau - fine.tau) < 10 * coarse.est_error

    def test_truncation_metadata(self):
        tv = tau(0.05, P_GENERIC, "fredholm", n_modes=6)
        assert tv.truncation == {"n_modes": 6}
        tv = tau(0.05, P_GENERIC, "nekrasov", trunc=TRUNC)
        assert tv.truncation == {"weight_cutoff": 6, "charge_cutoff": 2}


class TestZeta:
    def test_requires_positive_t(self):
        with pytest.raises(ValueError):
            zeta(-0.1, P_GENERIC, "maya", trunc=TRUNC)

    def test_step_bound_enforced(self):
        with pytest.raises(ValueError, match="stencil step"):
            zeta(0.01, P_GENERIC, "fredholm", h=0.01)

    def test_elementary_solution(self):
        t = 0.05
        expected = 1 / 16 + 2 * math.sqrt(t)
        assert zeta(t, P_ELEM_PLUS, "nekrasov", trunc=TRUNC_FINE) == pytest.approx(
            expected, rel=1e-12
        )

    def test_small_t_limit(self):
        # zeta -> nu^2, with the correction decaying like t^{1 - 2 nu}
        d4 = abs(zeta(1e-4, P_GENERIC, "maya", trunc=TRUNC) - P_GENERIC.nu**2)
        d6 = abs(zeta(1e-6, P_GENERIC, "maya", trunc=TRUNC) - P_GENERIC.nu**2)
        assert d6 < d4 < 0.05
        assert d6 / d4 == pytest.approx(1e-2 ** (1 - 2 * 0.37), rel=0.05)

    def test_stencil_matches_analytic(self):
        t = 0.05
        analytic = zeta(t, P_GENERIC, "maya", trunc=SeriesTruncation(9, 3))
        stencil = zeta(t, P_GENERIC, "fredholm", h=1e-3, n_modes=12)
        assert stencil == pytest.approx(analytic, abs=1e-10)

    def test_stencil_refinement_order(self):
        # halving h must shrink the error by at least the nominal O(h^4)
        t = 0.1
        analytic = zeta(t, P_GENERIC, "maya", trunc=SeriesTruncation(9, 3))
        err = [
            abs(zeta(t, P_GENERIC, "fredholm", h=h, n_modes=12) - analytic)
            for h in (1.6e-2, 8e-3, 4e-3)
        ]
        assert err[0] / err[1] > 12
        assert err[1] / err[2] > 12

    def test_derivative_consistency(self):
        # analytic zeta' against a numerical derivative of analytic zeta
        t, h = 0.05, 1e-4
        trunc = SeriesTruncation(9, 3)
        _, zp, zpp, zppp = zeta_derivatives(t, P_GENERIC, "maya", trunc=trunc)
        fd = (
            zeta(t - 2 * h, P_GENERIC, "maya", trunc=trunc)
            - 8 * zeta(t - h, P_GENERIC, "maya", trunc=trunc)
            + 8 * zeta(t + h, P_GENERIC, "maya", trunc=trunc)
            - zeta(t + 2 * h, P_GENERIC, "maya", trunc=trunc)
        ) / (12 * h)
        assert fd == pytest.approx(zp, rel=1e-10)
        assert zppp is not None


class TestResiduals:
    def test_sigma_form_elementary(self):
        assert ode_residual(0.05, P_ELEM_PLUS, "nekrasov", trunc=TRUNC_FINE) < 1e-10

    def test_q_elementary(self):
        t = 0.05
        q, res = painleve_q(t, P_ELEM_PLUS, "nekrasov", trunc=TRUNC_FINE)
        assert q == pytest.approx(-math.sqrt(t), rel=1e-10)
        assert res < 1e-9

    def test_q_generic(self):
        q, res = painleve_q(0.05, P_GENERIC, "maya", trunc=SeriesTruncation(8, 3))
        assert res < 1e-8

    def test_q_fredholm_stencil(self):
        t = 0.05
        q_series, _ = painleve_q(t, P_GENERIC, "maya", trunc=SeriesTruncation(8, 3))
        q_fred, res = painleve_q(t, P_GENERIC, "fredholm", h=1e-3, n_modes=12)
        assert q_fred == pytest.approx(q_series, abs=1e-9)
        assert res < 1e-4


class TestSineGordon:
    def test_elementary_field_vanishes(self):
        u = sine_gordon_map(1.2, P_ELEM_PLUS, "nekrasov", trunc=TRUNC_FINE)
        assert abs(u) < 1e-12

    def test_requires_positive_radius(self):
        with pytest.raises(ValueError):
            sine_gordon_map(-1.0, P_GENERIC)

    def test_real_field_for_unimodular_ratio(self):
        # elementary eta = 0 solution: q real negative, modulus matched
        p = MonodromyParams.from_nu(0.25, 0.0)
        u = sine_gordon_map(0.9, p, "nekrasov", trunc=TRUNC_FINE)
        assert abs(u.imag / max(abs(u), 1e-3)) < 1e-10

    def test_field_equation_residual(self):
        assert sine_gordon_residual(1.2, P_GENERIC, "maya", trunc=TRUNC_FINE) < 1e-4


class TestCrossValidation:
    def test_report_contents(self):
        report = cross_validate(0.05, P_GENERIC, n_modes=10, trunc=SeriesTruncation(5, 2))
        assert set(report["tau"]) == set(METHODS)
        assert max(report["pairwise_rel_diff"].values()) < 1e-8
        assert report["rank_one_residual"]["a"] < 1e-12
        assert report["lemma_identities"]["cauchy_vs_inst"] < 1e-12
        assert report["quasi_periodicity"] < 1e-11
        assert report["quadrature_mode_diff"] < 1e-12

    def test_trivial_time(self):
        report = cross_validate(0.0, P_GENERIC, trunc=SeriesTruncation(3, 1), check_modes=False)
        assert all(v == 1 for v in report["tau"].values())
        assert max(report["pairwise_rel_diff"].values()) == 0
