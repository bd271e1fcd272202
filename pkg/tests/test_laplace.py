"""
Pruebas de la búsqueda del modo, el ajuste de Laplace y el blanqueo.
"""

import numpy as np
import pytest
from scipy.optimize import minimize

from core.domain.errors import ConvergenceError, ModeDivergedError
from core.domain.fit import FitRecord
from core.domain.tensors import SymTensor3
from core.solvers.laplace import (
    find_mode,
    fit,
    r3,
    r3_batch,
    r4,
    whitened_gradient,
    whitened_potential,
    whitened_third_contract,
)
from core.solvers.diagnostics import estimate_c4
from core.solvers.laplace import whitened_third_tensor
from core.solvers.models import QuarticTestModel, generate_dataset, logistic_model, quartic_test_model
from core.solvers.tensor import opnorm_sphere, weighted_opnorm


@pytest.fixture
def quartic(rng, make_tensor3, make_tensor4):
    H = np.array([[2.0, 0.3, 0.0], [0.3, 1.0, 0.1], [0.0, 0.1, 1.5]])
    return QuarticTestModel(H, make_tensor3(3, rng), make_tensor4(3, 3.0), n=50.0, scale=0.5)


class TestNewton:

    def test_quadratic_converges_immediately(self, rng):
        model = quartic_test_model(3, np.diag([1.0, 2.0, 3.0]), n=10.0)
        mode, iterations = find_mode(model, rng.standard_normal(3))
        np.testing.assert_allclose(mode, np.zeros(3), atol=1e-12)
        assert iterations <= 2

    def test_separable_data_diverges(self, separable_dataset):
        with pytest.raises(ModeDivergedError, match="mode diverged"):
            fit(logistic_model(separable_dataset))

    def test_logistic_stationary_point(self):
        model = logistic_model(generate_dataset(4, 200, seed=1))
        fitted = fit(model)
        assert np.linalg.norm(model.grad_v(fitted.mode)) <= 1e-9

        # Oráculo independiente: L-BFGS-B sobre la misma función
        oracle = minimize(model.v, np.zeros(4), jac=model.grad_v, method="L-BFGS-B", options={"gtol": 1e-12, "ftol": 1e-15})
        np.testing.assert_allclose(fitted.mode, oracle.x, atol=1e-6)

    def test_iteration_limit(self):
        model = logistic_model(generate_dataset(3, 100, seed=2))
        with pytest.raises(ConvergenceError):
            fit(model, max_iter=1)


class TestLaplaceFit:

    def test_hessian_factorization(self, quartic):
        fitted = fit(quartic)
        np.testing.assert_allclose(fitted.chol @ fitted.chol.T, fitted.hessian, rtol=1e-12)
        np.testing.assert_allclose(fitted.hessian, quartic.n * quartic.hess_v(fitted.mode), rtol=1e-10)
        assert fitted.lambda_min_Hv == pytest.approx(np.linalg.eigvalsh(quartic.H).min(), rel=1e-8)

    def test_record_restores_fit(self, quartic):
        fitted = fit(quartic)
        restored = FitRecord.model_validate(fitted.to_record().model_dump()).to_fit()
        np.testing.assert_array_equal(restored.mode, fitted.mode)
        np.testing.assert_allclose(restored.hessian, fitted.hessian, rtol=1e-14)


class TestWhitening:

    def test_origin_is_potential_at_mode(self, quartic):
        fitted = fit(quartic)
        assert whitened_potential(fitted, quartic, np.zeros(3)) == pytest.approx(quartic.V(fitted.mode), rel=1e-14)

    def test_gaussian_potential(self, rng):
        model = quartic_test_model(2, np.array([[2.0, 0.5], [0.5, 1.0]]), n=7.0)
        fitted = fit(model)
        z = rng.standard_normal(2)
        w0 = whitened_potential(fitted, model, np.zeros(2))
        assert whitened_potential(fitted, model, z) - w0 == pytest.approx(0.5 * z @ z, rel=1e-12)

    def test_unit_hessian_at_origin(self):
        model = logistic_model(generate_dataset(3, 200, seed=8))
        fitted = fit(model)
        h = 1e-5
        hessian = np.empty((3, 3))
        for i in range(3):
            e = np.zeros(3)
            e[i] = h
            hessian[:, i] = (whitened_gradient(fitted, model, e) - whitened_gradient(fitted, model, -e)) / (2 * h)
        np.testing.assert_allclose(hessian, np.eye(3), atol=1e-4)


class TestRemainders:

    def test_vanish_at_origin(self, quartic):
        fitted = fit(quartic)
        assert r3(fitted, quartic, np.zeros(3)) == pytest.approx(0.0, abs=1e-12)
        assert r4(fitted, quartic, np.zeros(3)) == pytest.approx(0.0, abs=1e-12)

    def test_gaussian_remainder_is_zero(self, rng):
        model = quartic_test_model(3, np.eye(3), n=4.0)
        fitted = fit(model)
        values = r3_batch(fitted, model, rng.standard_normal((10, 3)))
        np.testing.assert_allclose(values, np.zeros(10), atol=1e-12)

    def test_polynomial_expansion(self, quartic, rng):
        fitted = fit(quartic)
        np.testing.assert_allclose(fitted.mode, np.zeros(3), atol=1e-12)
        z = rng.standard_normal(3)
        u = np.linalg.solve(np.linalg.cholesky(quartic.n * quartic.H).T, z)
        cubic = quartic.n * quartic.scale / 6.0 * quartic.S.contract(u)
        quart = quartic.n / 24.0 * quartic.T.contract(u)
        assert r3(fitted, quartic, z) == pytest.approx(cubic + quart, rel=1e-10, abs=1e-12)
        assert r4(fitted, quartic, z) == pytest.approx(quart, rel=1e-10, abs=1e-12)

    def test_third_contract_matches_model(self, quartic, rng):
        fitted = fit(quartic)
        z = rng.standard_normal(3)
        expected = quartic.n * quartic.third_contract_v(fitted.mode, fitted.whiten(z))
        assert whitened_third_contract(fitted, quartic, z) == pytest.approx(expected, rel=1e-12)

    def test_fourth_order_remainder_bounded_on_ball(self, quartic, rng):
        fitted = fit(quartic)
        d, n, R = 3, quartic.n, 4.0
        bound = estimate_c4(fitted, quartic, R=R, probe_count=4) / (24.0 * n)

        directions = rng.standard_normal((200, d))
        directions /= np.linalg.norm(directions, axis=1, keepdims=True)
        radii = rng.uniform(0.5, R * np.sqrt(d), size=200)
        for z in directions * radii[:, None]:
            assert abs(r4(fitted, quartic, z)) / np.sum(z * z) ** 2 <= bound * (1 + 1e-3)

    def test_fourth_order_bound_is_attained(self, quartic):
        fitted = fit(quartic)
        bound = estimate_c4(fitted, quartic, R=4.0, probe_count=4) / (24.0 * quartic.n)
        # Dirección de mínima curvatura: L⁻ᵀz = w con w autovector de λ_min(H)
        w = np.linalg.eigh(quartic.H)[1][:, 0]
        z = fitted.chol.T @ w
        assert r4(fitted, quartic, z) / np.sum(z * z) ** 2 == pytest.approx(bound, rel=1e-6)


class TestWhitenedOperatorNorm:
    """‖∇³W(0)‖ = ‖∇³v(x̂)‖_{H_v}/√n: el blanqueo solo reescala la norma de operador."""

    def test_three_dimensional_quartic(self, quartic):
        fitted = fit(quartic)
        whitened = opnorm_sphere(whitened_third_tensor(fitted, quartic), seed=1)
        weighted = weighted_opnorm(quartic.third_tensor_v(fitted.mode), fitted.hessian / quartic.n, seed=2)
        assert whitened == pytest.approx(weighted / np.sqrt(quartic.n), rel=1e-6)

    def test_two_dimensional_quartic(self, make_tensor4):
        S = SymTensor3.from_entries(2, {(0, 0, 0): 1.5, (0, 0, 1): -0.4, (1, 1, 1): 0.7})
        H = np.array([[3.0, -0.5], [-0.5, 0.8]])
        model = QuarticTestModel(H, S, make_tensor4(2, 2.0), n=30.0)
        fitted = fit(model)
        whitened = opnorm_sphere(whitened_third_tensor(fitted, model), seed=3)
        weighted = weighted_opnorm(model.third_tensor_v(fitted.mode), fitted.hessian / model.n, seed=4)
        assert whitened == pytest.approx(weighted / np.sqrt(model.n), rel=1e-6)
