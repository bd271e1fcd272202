"""
Pruebas de los diagnósticos: L, c̃₃, c₃, c₄, hipótesis A2, LSI y reporte.
"""

import math

import numpy as np
import pytest
from scipy.optimize import minimize

from core.domain.errors import ArgumentError
from core.domain.tensors import SymTensor3, SymTensor4
from core.solvers.diagnostics import (
    LsiEstimator,
    assemble_report,
    check_a2_left,
    estimate_c3,
    estimate_c4,
    estimate_L,
    lsi_bound_estimate,
    radius_conditions,
    tilde_c3,
)
from core.solvers.hermite import cubic_second_moment
from core.solvers.laplace import fit, whitened_third_tensor
from core.solvers.models import (
    AffineTransformedModel,
    QuarticTestModel,
    RescaledModel,
    gaussian_sigmoid_moments,
    generate_dataset,
    logistic_model,
    population_logistic_model,
    quartic_test_model,
)
from core.solvers.oracle import lemma31_lower_bound, population_L_exact

E_ABS_Z_CUBED = 2.0 * math.sqrt(2.0 / math.pi)


def one_dimensional_quartic(s: float, t: float, n: float = 1.0) -> QuarticTestModel:
    """v = x²/2 + s·x³/6 + t·x⁴/24 con modo en 0."""
    return QuarticTestModel(
        np.eye(1), SymTensor3(np.full((1, 1, 1), s)), SymTensor4(np.full((1, 1, 1, 1), t)), n=n
    )


def fibonacci_sphere(count: int) -> np.ndarray:
    i = np.arange(count) + 0.5
    phi = np.arccos(1.0 - 2.0 * i / count)
    theta = math.pi * (1.0 + math.sqrt(5.0)) * i
    return np.column_stack([np.cos(theta) * np.sin(phi), np.sin(theta) * np.sin(phi), np.cos(phi)])


def sphere_max_oracle(tensor: SymTensor3, count: int = 200_000, polish: int = 8) -> float:
    """max |⟨S, u⊗3⟩| en S² por rejilla de Fibonacci refinada con Nelder–Mead desde los mejores nodos."""
    points = fibonacci_sphere(count)
    values = np.abs(tensor.contract_batch(points))
    best = float(np.max(values))
    for start in points[np.argsort(values)[-polish:]]:
        result = minimize(
            lambda u: -abs(tensor.contract(u / np.linalg.norm(u))),
            start,
            method="Nelder-Mead",
            options={"xatol": 1e-11, "fatol": 1e-15, "maxiter": 4000},
        )
        best = max(best, -float(result.fun))
    return best


@pytest.fixture
def logistic_d3():
    model = logistic_model(generate_dataset(3, 50, seed=12))
    return model, fit(model)


# ==================== TÉRMINO PRINCIPAL ====================

class TestLeadingTerm:

    def test_gaussian_is_zero(self):
        model = quartic_test_model(3, np.eye(3), n=10.0)
        assert estimate_L(fit(model), model, samples=5000) == (0.0, 0.0)

    def test_one_dimensional_cubic(self):
        a = 0.6
        model = one_dimensional_quartic(a, 1.0)
        estimate, stderr = estimate_L(fit(model), model, samples=100_000, seed=3)
        assert abs(estimate - a / 12.0 * E_ABS_Z_CUBED) <= 3.0 * stderr

    def test_deterministic_across_workers(self, logistic_d3):
        model, fitted = logistic_d3
        assert estimate_L(fitted, model, samples=20_000, seed=4, workers=1) == estimate_L(
            fitted, model, samples=20_000, seed=4, workers=4
        )

    def test_rejects_too_few_samples(self, logistic_d3):
        model, fitted = logistic_d3
        with pytest.raises(ArgumentError):
            estimate_L(fitted, model, samples=10)


# ==================== c̃₃ ====================

class TestTildeC3:

    def test_one_dimensional_reduction(self):
        s = 0.8
        model = one_dimensional_quartic(s, 1.0, n=7.0)
        # En d = 1: ‖S‖_F² = ‖tr S‖² = s², sin dependencia de n
        assert tilde_c3(fit(model), model) == pytest.approx(math.sqrt(5.0 / 6.0) * s, rel=1e-12)

    def test_rank_one_matches_dense(self, logistic_d3):
        model, fitted = logistic_d3
        assert tilde_c3(fitted, model, method="rank_one") == pytest.approx(
            tilde_c3(fitted, model, method="dense"), rel=1e-10
        )

    def test_second_moment_identity(self, logistic_d3):
        model, fitted = logistic_d3
        d = fitted.dim
        tensor = whitened_third_tensor(fitted, model)
        lhs = tilde_c3(fitted, model) ** 2 * d * d / model.n
        assert lhs == pytest.approx(cubic_second_moment(tensor) / 18.0, rel=1e-12)

    def test_unknown_method(self, logistic_d3):
        model, fitted = logistic_d3
        with pytest.raises(ArgumentError):
            tilde_c3(fitted, model, method="sparse")


# ==================== c₃ y c₄ ====================

class TestC3:

    def test_axis_tensor(self, make_tensor4):
        S = SymTensor3.from_entries(3, {(0, 0, 0): 2.0})
        model = QuarticTestModel(np.eye(3), S, make_tensor4(3, 1.0), n=25.0, scale=0.5)
        assert estimate_c3(fit(model), model) == pytest.approx(1.0, rel=1e-6)

    def test_zero_cubic(self, make_tensor4):
        model = QuarticTestModel(np.eye(3), None, make_tensor4(3, 1.0), n=5.0)
        assert estimate_c3(fit(model), model) == 0.0

    def test_matches_dense_grid(self, logistic_d3):
        model, fitted = logistic_d3
        oracle = math.sqrt(model.n) * sphere_max_oracle(whitened_third_tensor(fitted, model))
        assert estimate_c3(fitted, model) == pytest.approx(oracle, rel=1e-4)


class TestC4:

    @pytest.mark.parametrize("R", [1.0, 4.0])
    def test_quartic_independent_of_radius(self, make_tensor4, R):
        model = QuarticTestModel(np.eye(3), None, make_tensor4(3, 2.0), n=9.0)
        assert estimate_c4(fit(model), model, R=R, probe_count=4) == pytest.approx(2.0, rel=1e-6)

    def test_quadratic_is_zero(self):
        model = quartic_test_model(2, np.eye(2), n=3.0)
        assert estimate_c4(fit(model), model, probe_count=2) == 0.0

    def test_logistic_at_least_center_value(self, logistic_d3):
        model, fitted = logistic_d3
        center_only = estimate_c4(fitted, model, probe_count=0)
        assert estimate_c4(fitted, model, probe_count=8) >= center_only

    def test_deterministic_across_workers(self, logistic_d3):
        model, fitted = logistic_d3
        assert estimate_c4(fitted, model, probe_count=6, seed=2, workers=1) == estimate_c4(
            fitted, model, probe_count=6, seed=2, workers=3
        )


# ==================== HIPÓTESIS A2 ====================

class TestAssumptions:

    def test_both_conditions_hold(self):
        check = check_a2_left(0.5, 0.5, R0=1.0, d=1, n=1.0)
        assert check.c0 == pytest.approx(0.25)
        assert check.reason is None

    def test_c3_condition_fails(self):
        check = check_a2_left(2.0, 0.5, R0=1.0, d=1, n=1.0)
        assert check.c0 is None
        assert check.reason == "c3 condition"

    def test_both_conditions_fail(self):
        assert check_a2_left(2.0, 2.0, R0=1.0, d=1, n=1.0).reason == "c3 condition and c4 condition"

    def test_boundary_is_inclusive(self):
        assert check_a2_left(1.0, 1.0, R0=2.0, d=1, n=1.0).c0 == pytest.approx(0.5)

    def test_radius_conditions(self):
        check = radius_conditions(40.0, 1.0, 1.0)
        assert check.admissible and check.theorem_form and check.lemma_form
        tight = radius_conditions(4.0, 0.25, 1.0)
        assert tight.admissible and not tight.theorem_form and not tight.lemma_form
        assert radius_conditions(4.0, None, 1.0).model_dump() == {
            "admissible": False, "theorem_form": False, "lemma_form": False
        }


# ==================== LSI ====================

class TestLsiBound:

    def test_gaussian(self):
        model = quartic_test_model(2, np.eye(2), n=3.0)
        assert lsi_bound_estimate(fit(model), model, samples=5000) == pytest.approx(0.0, abs=1e-20)

    def test_one_dimensional_polynomial(self):
        a, b = 0.4, 0.3
        model = one_dimensional_quartic(a, b)
        result = LsiEstimator().solve(fitted=fit(model), model=model, samples=200_000, seed=6)
        # ∇W(z) − z = (a/2)z² + (b/6)z³
        expected = 3.0 * a * a / 4.0 + 15.0 * b * b / 36.0
        assert abs(result.estimate - expected) <= 3.0 * result.stderr


# ==================== REPORTE ====================

class TestReport:

    def test_gaussian_report(self):
        model = quartic_test_model(2, np.eye(2), n=10.0)
        report = assemble_report(fit(model), model, samples=2000, probe_count=2, restarts=4)
        assert report.L_hat == 0.0
        assert report.tilde_c3 == 0.0
        assert report.c3_hat == 0.0
        assert report.tv_interval == pytest.approx([0.0, math.exp(-1.0)])

    def test_logistic_report_is_consistent(self):
        model = logistic_model(generate_dataset(8, 128, seed=21))
        report = assemble_report(fit(model), model, samples=20_000, restarts=8, probe_count=4, seed=1)
        values = [report.L_hat, report.L_stderr, report.tilde_c3, report.c3_hat, report.c4_hat,
                  report.remainder_bound, report.overall_bound, report.lsi_bound_hat]
        assert all(math.isfinite(v) for v in values)
        assert report.L_hat <= report.tilde_leading_bound + 3.0 * report.L_stderr
        assert "L includes the 1/12 prefactor" in report.flags

    def test_population_matches_exact_leading_term(self):
        d, n = 4, 1e4
        model = population_logistic_model(d, n)
        report = assemble_report(fit(model), model, samples=50_000, restarts=4, probe_count=2)
        exact = population_L_exact(gaussian_sigmoid_moments(), d, n)
        assert abs(report.L_hat - exact) <= 4.0 * report.L_stderr
        assert report.L_hat >= lemma31_lower_bound(gaussian_sigmoid_moments(), d, n) - 3.0 * report.L_stderr

    def test_a2_records_c4_radius(self):
        model = quartic_test_model(2, np.eye(2), n=10.0)
        fitted = fit(model)
        kwargs = dict(samples=500, probe_count=2, restarts=4)
        report = assemble_report(fitted, model, R=6.0, R0=1.0, **kwargs)
        assert report.a2_c4_radius == 6.0
        assert report.R_used == 6.0
        assert any("c4(R=6)" in flag for flag in report.flags)
        same = assemble_report(fitted, model, R=2.0, R0=2.0, **kwargs)
        assert same.a2_c4_radius == 2.0
        assert not any("in place of c4(R0" in flag for flag in same.flags)

    def test_reproducible(self, logistic_d3):
        model, fitted = logistic_d3
        kwargs = dict(samples=5000, restarts=4, probe_count=3, seed=7)
        first = assemble_report(fitted, model, workers=1, **kwargs)
        second = assemble_report(fitted, model, workers=4, **kwargs)
        assert first.model_dump() == second.model_dump()


# ==================== CADENA DE COTAS ====================

class TestLeadingTermChain:
    """L ≤ (1/√8)·c̃₃d/√n, c̃₃ ≤ c₃ y L ≤ c₃d/√n, con c₃ del oráculo denso en d = 3."""

    @pytest.fixture
    def quantities(self, logistic_d3):
        model, fitted = logistic_d3
        d, n = fitted.dim, model.n
        c3_oracle = math.sqrt(n) * sphere_max_oracle(whitened_third_tensor(fitted, model))
        L, stderr = estimate_L(fitted, model, samples=50_000, seed=4)
        return d, n, L, stderr, tilde_c3(fitted, model), c3_oracle

    def test_leading_term_below_operator_bound(self, quantities):
        d, n, L, stderr, _, c3_oracle = quantities
        assert L - 3.0 * stderr <= c3_oracle * d / math.sqrt(n)

    def test_leading_term_below_tilde_bound(self, quantities):
        d, n, L, stderr, tilde, _ = quantities
        assert L - 3.0 * stderr <= tilde * d / math.sqrt(8.0 * n)

    def test_tilde_below_operator_coefficient(self, quantities):
        *_, tilde, c3_oracle = quantities
        assert 0.0 < tilde <= c3_oracle

    def test_one_dimensional_cubic(self):
        model = one_dimensional_quartic(1.2, 2.0, n=40.0)
        fitted = fit(model)
        c3 = estimate_c3(fitted, model)
        L, stderr = estimate_L(fitted, model, samples=50_000, seed=9)
        assert L - 3.0 * stderr <= c3 / math.sqrt(model.n)
        assert tilde_c3(fitted, model) <= c3


# ==================== INVARIANZAS ====================

def cubic_quartic_2d(make_tensor4) -> QuarticTestModel:
    S = SymTensor3.from_entries(2, {(0, 0, 0): 1.0, (0, 1, 1): -0.5})
    return QuarticTestModel(np.eye(2), S, make_tensor4(2, 2.0), n=20.0)


AFFINE_MAPS = [
    (np.array([[2.0, 0.3], [-0.4, 1.5]]), np.array([0.2, -0.1])),
    (np.array([[1.0, 0.0], [0.5, 1.0]]), np.zeros(2)),
]


class TestRescalingInvariance:
    """(v, n) → (λv, n/λ) deja V intacto y con él L, c̃₃d/√n y c₃d/√n."""

    @pytest.mark.parametrize("lam", [3.0, 0.25])
    def test_logistic(self, logistic_d3, lam):
        model, _ = logistic_d3
        scaled = RescaledModel(model, lam)
        d = model.dim
        fitted, fitted_scaled = fit(model, tol=1e-12), fit(scaled, tol=1e-12)

        L, _ = estimate_L(fitted, model, samples=20_000, seed=3)
        L_scaled, _ = estimate_L(fitted_scaled, scaled, samples=20_000, seed=3)
        assert L_scaled == pytest.approx(L, rel=1e-10)

        def normalized(value, m):
            return value * d / math.sqrt(m.n)

        assert normalized(tilde_c3(fitted_scaled, scaled), scaled) == pytest.approx(
            normalized(tilde_c3(fitted, model), model), rel=1e-10
        )
        assert normalized(estimate_c3(fitted_scaled, scaled, seed=5), scaled) == pytest.approx(
            normalized(estimate_c3(fitted, model, seed=5), model), rel=1e-8
        )


class TestAffineInvariance:
    """x → Ax + b solo rota las coordenadas blanqueadas."""

    @pytest.mark.parametrize("A, b", AFFINE_MAPS)
    def test_coefficients(self, make_tensor4, A, b):
        base = cubic_quartic_2d(make_tensor4)
        moved = AffineTransformedModel(base, A, b)
        fitted, fitted_moved = fit(base, tol=1e-12), fit(moved, tol=1e-12)
        assert tilde_c3(fitted_moved, moved) == pytest.approx(tilde_c3(fitted, base), rel=1e-8)
        assert estimate_c3(fitted_moved, moved) == pytest.approx(estimate_c3(fitted, base), rel=1e-6)

    @pytest.mark.parametrize("A, b", AFFINE_MAPS)
    def test_leading_term(self, make_tensor4, A, b):
        # La factorización de Cholesky difiere en una rotación: mismas leyes, distintas muestras
        base = cubic_quartic_2d(make_tensor4)
        moved = AffineTransformedModel(base, A, b)
        L, se = estimate_L(fit(base, tol=1e-12), base, samples=200_000, seed=6)
        L_moved, se_moved = estimate_L(fit(moved, tol=1e-12), moved, samples=200_000, seed=6)
        assert abs(L - L_moved) <= 4.0 * math.hypot(se, se_moved)
