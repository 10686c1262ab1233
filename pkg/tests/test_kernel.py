"""Kernel evaluation, norm envelopes, CZ constants, every pointwise bound."""

import math

import numpy as np
import pytest

from shimorin_lab.diskquad import DiskRule
from shimorin_lab.kernel import (
    BoundViolation,
    CzConstants,
    CzNotApplicable,
    bound_report,
    cz_constants,
    cz_pointwise_reports,
    double_integral_eval,
    envelope_reports,
    eval_dz,
    eval_kernel,
    forelli_rudin_check,
    hermitian_report,
    kernel_lp_norm,
    pnorm_envelope,
    ratio_bound_report,
    representation_report,
    sample_boundary_pairs,
    split_at_one,
    supnorm_sandwich,
    universal_size_report,
)
from shimorin_lab.measure import RadialMeasure, total_mass


class TestEval:
    def test_center_gives_mass(self, cat):
        for name, mu in cat.items():
            assert eval_kernel(mu, 0.0, 0.37 + 0.2j) == pytest.approx(total_mass(mu), rel=1e-9)

    def test_nu_alpha_fractional_kernel(self, cat):
        got = eval_kernel(cat["nu_alpha_1.5"], 0.6, 0.6)
        assert got == pytest.approx(0.64 ** -1.5, rel=1e-10)

    def test_bergman_kernel(self, cat):
        r = 0.8
        assert eval_kernel(cat["delta1"], r, r) == pytest.approx((1 - r * r) ** -2.0)

    def test_hermitian_symmetry(self, cat):
        rep = hermitian_report(cat["lebesgue_plus_atom1"], seed=5, n=1000)
        assert rep.passed and rep.n_samples == 1000

    def test_universal_size(self, cat, rng):
        for mu in cat.values():
            assert universal_size_report(mu, seed=11, n=500).passed

    def test_gap_ratio_bound(self):
        assert ratio_bound_report(seed=2, n=1000).passed


class TestEvalDz:
    def test_zero_at_lambda_zero(self, cat):
        assert eval_dz(cat["lebesgue"], 0.4 + 0.1j, 0.0) == 0.0

    def test_bergman_derivative(self, cat):
        assert eval_dz(cat["delta1"], 0.0, 0.5) == pytest.approx(1.0)

    def test_nu_alpha_closed_form(self, cat):
        a, z, lam = 1.5, 0.3, 0.4
        expect = a * lam * (1 - z * lam) ** (-a - 1)
        assert eval_dz(cat["nu_alpha_1.5"], z, lam) == pytest.approx(expect, rel=1e-9)

    def test_finite_difference_oracle(self, cat, rng):
        h = 1e-6
        for name in ("lebesgue", "power_-0.5", "delta_half"):
            mu = cat[name]
            z, lam = 0.35 + 0.2j, 0.5 - 0.3j
            fd = (eval_kernel(mu, z + h, lam) - eval_kernel(mu, z - h, lam)) / (2 * h)
            assert eval_dz(mu, z, lam) == pytest.approx(fd, rel=1e-7)


class TestDoubleIntegral:
    def test_agreement(self, cat):
        for name in ("delta0", "lebesgue", "nu_alpha_1.5", "power_0.5"):
            assert representation_report(cat[name], seed=3, n=60).passed

    def test_rejects_atom_at_one(self, cat):
        with pytest.raises(ValueError):
            double_integral_eval(cat["delta1"], 0.5, 0.5)


class TestKernelNorm:
    def test_center_norm_is_mass(self, cat):
        for name in ("delta0", "lebesgue", "power_0.5"):
            mu = cat[name]
            for p in (1.5, 2.0, 3.0):
                assert kernel_lp_norm(mu, 0.0, p) == pytest.approx(total_mass(mu), rel=1e-9)

    def test_hardy_kernel_series_oracle(self):
        # ||(1 - z conj(lam))^-1||_p^p = sum (Gamma(k+p/2)/(Gamma(p/2) k!))^2 x^k/(k+1)
        from scipy.special import gammaln

        mu = RadialMeasure.dirac(0.0)
        for z, p in ((0.55, 5.8), (0.9, 1.5), (0.3, 2.0)):
            x = z * z
            k = np.arange(3000)
            a = np.exp(gammaln(k + p / 2) - gammaln(p / 2) - gammaln(k + 1))
            oracle = float(np.sum(a ** 2 * x ** k / (k + 1))) ** (1.0 / p)
            assert kernel_lp_norm(mu, z, p) == pytest.approx(oracle, rel=1e-8)

    def test_explicit_rule_cross_check(self, cat):
        rule = DiskRule.make(radial_depth=30, order=10, angular_count=1024)
        for name in ("delta0", "lebesgue"):
            a = kernel_lp_norm(cat[name], 0.6, 1.8)
            b = kernel_lp_norm(cat[name], 0.6, 1.8, rule=rule)
            assert a == pytest.approx(b, rel=1e-7)

    def test_finite_at_stressed_point(self, cat):
        # Hardy kernel at z = 0.9, p = 2: finite, sane against the Forelli-Rudin shape
        val = kernel_lp_norm(cat["delta0"], 0.9, 2.0)
        assert np.isfinite(val) and 1.0 < val < 10.0


class TestEnvelope:
    def test_delta0_center_collapses(self, cat):
        lo, up = pnorm_envelope(cat["delta0"], 0.0, 1.5)
        assert lo == pytest.approx(1.0) and up == pytest.approx(1.0)

    def test_lebesgue_lower_closed_form(self, cat):
        lo, _ = pnorm_envelope(cat["lebesgue"], math.sqrt(0.75), 1.5)
        assert lo == pytest.approx(0.25 ** (1.0 / 3.0) * (4.0 / 3.0) * math.log(4.0), rel=1e-10)

    def test_sandwich_on_catalog(self, cat):
        for name in ("delta0", "lebesgue", "power_-0.5", "power_0.5",
                     "nu_alpha_1.5", "delta_half"):
            reps = envelope_reports(cat[name], seed=7, n=12)
            assert all(r.passed for r in reps)

    def test_rejects_atom_at_one(self, cat):
        with pytest.raises(ValueError):
            pnorm_envelope(cat["delta1"], 0.5, 1.5)

    def test_fractional_family_stressed_point(self, cat):
        # the norm sits inside the envelope at the stressed (z, p) = (0.99, 1.3)
        # even though p = 1.3 is outside the band asserted in bulk
        n = kernel_lp_norm(cat["nu_alpha_1.5"], 0.99, 1.3)
        lo, up = pnorm_envelope(cat["nu_alpha_1.5"], 0.99, 1.3)
        assert lo <= n <= up

    def test_stated_upper_fails_outside_band(self, cat):
        # documentation of the known defect: at p = 8 the norm genuinely
        # exceeds the stated upper side even for the Hardy kernel
        mu = cat["delta0"]
        z, p = 0.55, 8.0
        norm = kernel_lp_norm(mu, z, p)
        _, up = pnorm_envelope(mu, z, p)
        assert norm > up * 1.01


class TestSupnormSandwich:
    @pytest.mark.parametrize("p,beta", [(1.5, 1.0), (1.2, 0.5), (1.8, 1.0)])
    def test_power_measures(self, p, beta):
        mu = RadialMeasure.power(1.0, beta)
        mx, lo, up = supnorm_sandwich(mu, p)
        assert lo <= mx <= up

    def test_rejects_divergent_moment(self, cat):
        with pytest.raises(ValueError):
            supnorm_sandwich(cat["power_-0.5"], 1.5)  # beta - (2 - 2/p) <= -1


class TestCzConstants:
    def test_delta1_projection_constants(self, cat):
        pred = cz_constants(cat["delta1"])
        assert pred == CzConstants(2.0, 2.0, 6.0, "c=1")

    def test_power_half_negative(self, cat):
        pred = cz_constants(cat["power_-0.5"])
        assert pred.order == pytest.approx(1.5)
        c = 4.0 / 3.0
        assert pred.size == pytest.approx(2.0 * c * 2 ** 0.5 / (2 - c))
        assert pred.smooth == pytest.approx(2.0 * c * 2 ** 1.5 * (1 / (2 * (2 - c)) + 1))

    def test_power_half_positive(self, cat):
        pred = cz_constants(cat["power_0.5"])
        assert pred.case == "c=2" and pred.order == 1.0
        assert pred.size == pytest.approx(2.0 + 2.0 / 3.0)
        assert pred.smooth == pytest.approx(2.0 + 10.0 / 3.0)

    def test_lebesgue_not_applicable(self, cat):
        pred = cz_constants(cat["lebesgue"])
        assert isinstance(pred, CzNotApplicable)
        assert "hyperbolic" in pred.reason

    def test_pointwise_bounds(self, cat):
        for name in ("delta1", "power_-0.5", "power_0.5"):
            for rep in cz_pointwise_reports(cat[name], seed=13, n=400):
                assert rep.passed


class TestSplit:
    def test_pure_atom(self, cat):
        rest, mass = split_at_one(cat["delta1"])
        assert rest is None and mass == 1.0

    def test_no_atom(self, cat):
        rest, mass = split_at_one(cat["lebesgue"])
        assert rest is cat["lebesgue"] and mass == 0.0

    def test_two_sided_pointwise_bound(self, cat, rng):
        mu = cat["lebesgue_plus_atom1"]
        nu1, mass = split_at_one(mu)
        assert mass == 0.5
        z, lam = sample_boundary_pairs(rng, 100, depth=3.0)
        k_full = np.abs(eval_kernel(mu, z, lam))
        k_rest = np.abs(eval_kernel(nu1, z, lam))
        atom_part = mass / np.abs(1.0 - z * np.conj(lam)) ** 2
        assert np.all(k_full <= atom_part + k_rest + 1e-12)
        assert np.all(k_full >= 0.5 * (atom_part + k_rest) * (1 - 1e-12))


class TestForelliRudin:
    def test_center_trivial(self):
        integral, shape = forelli_rudin_check(0.0, 1.0, 0.0)
        assert integral == pytest.approx(1.0, rel=1e-9)
        assert shape == 1.0

    def test_ratio_bounded_on_sweep(self):
        ratios = []
        for z in (0.5, 0.9, 0.99, 0.999):
            integral, shape = forelli_rudin_check(0.0, 1.0, z)
            ratios.append(integral / shape)
        assert max(ratios) / min(ratios) < 10.0

    def test_self_consistency_c2(self):
        i1, s1 = forelli_rudin_check(0.0, 2.0, 0.9)
        i2, s2 = forelli_rudin_check(0.0, 2.0, 0.99)
        assert (i2 / s2) == pytest.approx(i1 / s1, rel=3.0)  # within a factor 4

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            forelli_rudin_check(-1.5, 1.0, 0.5)
        with pytest.raises(ValueError):
            forelli_rudin_check(0.0, 0.0, 0.5)


class TestBoundReport:
    def test_violation_carries_witness(self):
        with pytest.raises(BoundViolation) as err:
            bound_report("demo", np.array([1.0, 3.0]), np.array([2.0, 2.0]),
                         (np.array([10.0, 20.0]),))
        assert err.value.witness == (20.0,)
        assert err.value.bound_name == "demo"

    def test_non_strict_returns_failed_report(self):
        rep = bound_report("demo", np.array([3.0]), np.array([2.0]),
                           (np.array([1.0]),), strict=False)
        assert not rep.passed and rep.worst_margin < 0.0
