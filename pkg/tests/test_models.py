"""
Pruebas de los potenciales: logístico, poblacional, cuártico y transformaciones.
"""

import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.stats import norm

from core.domain.errors import ArgumentError
from core.domain.tensors import SymTensor3
from core.solvers.models import (
    AffineTransformedModel,
    PopulationLogisticModel,
    QuarticTestModel,
    RescaledModel,
    default_beta,
    gaussian_sigmoid_moments,
    generate_dataset,
    logistic_model,
    population_logistic_model,
    quartic_test_model,
    sigmoid,
    sigmoid_derivative,
)


def directional_third_fd(model, x, u, h=1e-4) -> float:
    """d³/dt³ v(x + tu) en t = 0 por diferencias centradas del Hessiano."""
    plus = u @ model.hess_v(x + h * u) @ u
    minus = u @ model.hess_v(x - h * u) @ u
    return (plus - minus) / (2.0 * h)


def gradient_fd(model, x, h=1e-6) -> np.ndarray:
    grad = np.empty(model.dim)
    for i in range(model.dim):
        e = np.zeros(model.dim)
        e[i] = h
        grad[i] = (model.v(x + e) - model.v(x - e)) / (2.0 * h)
    return grad


def quad_moment(k: int, p: int) -> float:
    value, _ = quad(
        lambda z: sigmoid_derivative(z, k) * z ** p * norm.pdf(z), -12.0, 12.0, epsabs=1e-14, epsrel=1e-12, limit=400
    )
    return value


# ==================== SIGMOIDE Y MOMENTOS ====================

class TestSigmoid:

    @pytest.mark.parametrize("order", [1, 2, 3])
    def test_derivatives_match_finite_differences(self, order):
        t = np.linspace(-4.0, 4.0, 9)
        h = 1e-5
        fd = (sigmoid_derivative(t + h, order - 1) - sigmoid_derivative(t - h, order - 1)) / (2.0 * h)
        np.testing.assert_allclose(sigmoid_derivative(t, order), fd, atol=1e-8)

    def test_stable_for_large_arguments(self):
        assert sigmoid(800.0) == 1.0
        assert sigmoid(-800.0) == 0.0

    def test_rejects_unknown_order(self):
        with pytest.raises(ArgumentError):
            sigmoid_derivative(0.0, 7)


class TestGaussianMoments:

    def test_odd_moments_vanish(self):
        moments = gaussian_sigmoid_moments()
        assert abs(moments.moment(1, 1)) <= 1e-12
        assert abs(moments.moment(2, 0)) <= 1e-12

    @pytest.mark.parametrize("k,p", [(1, 0), (1, 2), (2, 1), (2, 3)])
    def test_matches_adaptive_quadrature(self, k, p):
        assert gaussian_sigmoid_moments().moment(k, p) == pytest.approx(quad_moment(k, p), abs=1e-9)

    def test_signs_used_by_population_formulas(self):
        moments = gaussian_sigmoid_moments()
        assert moments.moment(1, 0) > 0 and moments.moment(1, 2) > 0
        assert moments.moment(2, 1) < 0 and moments.moment(2, 3) < 0

    def test_rejects_low_order(self):
        with pytest.raises(ArgumentError):
            gaussian_sigmoid_moments(8)


# ==================== GENERACIÓN DE DATOS ====================

class TestDataGeneration:

    def test_default_beta(self):
        np.testing.assert_array_equal(default_beta(3), [1.0, 0.0, 0.0])

    def test_deterministic(self):
        a = generate_dataset(4, 100, seed=9)
        b = generate_dataset(4, 100, seed=9)
        np.testing.assert_array_equal(a.features, b.features)
        np.testing.assert_array_equal(a.labels, b.labels)

    def test_zero_beta_balanced_labels(self):
        n = 100_000
        data = generate_dataset(3, n, beta=np.zeros(3), seed=4)
        assert abs(data.labels.mean() - 0.5) <= 3.0 * 0.5 / math.sqrt(n)

    def test_default_beta_balanced_labels(self):
        n = 100_000
        data = generate_dataset(2, n, seed=5)
        assert abs(data.labels.mean() - 0.5) <= 3.0 * 0.5 / math.sqrt(n)

    def test_rejects_wrong_beta_shape(self):
        with pytest.raises(ArgumentError):
            generate_dataset(3, 10, beta=np.ones(2))


# ==================== LOGÍSTICO ====================

class TestLogisticModel:

    def test_value_at_origin(self, small_dataset):
        assert logistic_model(small_dataset).v(np.zeros(3)) == pytest.approx(math.log(2.0), rel=1e-14)

    def test_hessian_psd(self, small_dataset, rng):
        model = logistic_model(small_dataset)
        eigenvalues = np.linalg.eigvalsh(model.hess_v(rng.standard_normal(3)))
        assert eigenvalues.min() >= -1e-12

    def test_gradient_matches_finite_differences(self, small_dataset, rng):
        model = logistic_model(small_dataset)
        x = rng.standard_normal(3)
        np.testing.assert_allclose(model.grad_v(x), gradient_fd(model, x), rtol=1e-6, atol=1e-8)

    def test_third_contract_matches_finite_differences(self, small_dataset, rng):
        model = logistic_model(small_dataset)
        x, u = rng.standard_normal(3), rng.standard_normal(3)
        assert model.third_contract_v(x, u) == pytest.approx(directional_third_fd(model, x, u), rel=1e-3)

    def test_dense_tensors_agree_with_contractions(self, small_dataset, rng):
        model = logistic_model(small_dataset)
        x, u = rng.standard_normal(3), rng.standard_normal(3)
        assert model.third_tensor_v(x).contract(u) == pytest.approx(model.third_contract_v(x, u), rel=1e-10)
        assert model.fourth_tensor_v(x).contract(u) == pytest.approx(model.fourth_contract_v(x, u), rel=1e-10)
        np.testing.assert_allclose(
            model.third_tensor_v(x).vector_contract(u), model.third_gradient_v(x, u), rtol=1e-10, atol=1e-14
        )

    def test_batches_agree_with_pointwise(self, small_dataset, rng):
        model = logistic_model(small_dataset)
        X = rng.standard_normal((6, 3))
        x = rng.standard_normal(3)
        np.testing.assert_allclose(model.v_batch(X), [model.v(p) for p in X], rtol=1e-12)
        np.testing.assert_allclose(model.grad_v_batch(X), [model.grad_v(p) for p in X], rtol=1e-10, atol=1e-14)
        np.testing.assert_allclose(
            model.third_contract_v_batch(x, X), [model.third_contract_v(x, u) for u in X], rtol=1e-10, atol=1e-14
        )

    def test_rank_one_structure_reconstructs_hessian(self, small_dataset, rng):
        model = logistic_model(small_dataset)
        x = rng.standard_normal(3)
        structure = model.rank_one_structure(x)
        assert structure is not None
        assert structure.vectors.shape == (small_dataset.n, 3)

    @pytest.mark.parametrize("method", ["third_contract_v", "third_gradient_v", "fourth_contract_v", "fourth_gradient_v"])
    def test_direction_length_is_checked(self, small_dataset, method):
        model = logistic_model(small_dataset)
        with pytest.raises(ArgumentError):
            getattr(model, method)(np.zeros(3), np.ones(2))

    def test_batch_direction_width_is_checked(self, small_dataset):
        with pytest.raises(ArgumentError):
            logistic_model(small_dataset).third_contract_v_batch(np.zeros(3), np.ones((4, 2)))


# ==================== POBLACIONAL ====================

class TestPopulationModel:

    def test_mode_is_beta(self):
        model = population_logistic_model(4, 1e4)
        np.testing.assert_allclose(model.grad_v(model.beta), np.zeros(4), atol=1e-12)

    def test_hessian_at_beta(self):
        model = population_logistic_model(3, 1e4)
        moments = gaussian_sigmoid_moments()
        expected = np.diag([moments.moment(1, 2), moments.moment(1, 0), moments.moment(1, 0)])
        np.testing.assert_allclose(model.hess_v(model.beta), expected, atol=1e-9)

    def test_third_contract_vanishes_off_axis(self, rng):
        model = population_logistic_model(3, 1e4)
        b = np.array([0.0, 1.0, 0.0])
        assert model.third_contract_v(b, rng.standard_normal(3)) == pytest.approx(0.0, abs=1e-12)

    def test_gradient_matches_finite_differences(self, rng):
        model = population_logistic_model(3, 1e4)
        x = 0.7 * rng.standard_normal(3)
        np.testing.assert_allclose(model.grad_v(x), gradient_fd(model, x), rtol=1e-5, atol=1e-8)

    def test_third_contract_matches_finite_differences(self, rng):
        model = population_logistic_model(3, 1e4)
        x, u = 0.7 * rng.standard_normal(3), rng.standard_normal(3)
        assert model.third_contract_v(x, u) == pytest.approx(directional_third_fd(model, x, u), rel=1e-3)

    def test_dense_tensors_agree_with_contractions(self, rng):
        model = population_logistic_model(3, 1e4)
        x, u = 0.7 * rng.standard_normal(3), rng.standard_normal(3)
        assert model.third_tensor_v(x).contract(u) == pytest.approx(model.third_contract_v(x, u), rel=1e-10)
        assert model.fourth_tensor_v(x).contract(u) == pytest.approx(model.fourth_contract_v(x, u), rel=1e-10)
        np.testing.assert_allclose(
            4.0 * model.fourth_gradient_v(x, u),
            4.0 * model.fourth_tensor_v(x).vector_contract(u),
            rtol=1e-10, atol=1e-14,
        )

    def test_batch_value(self, rng):
        model = population_logistic_model(3, 1e4)
        X = rng.standard_normal((5, 3))
        np.testing.assert_allclose(model.v_batch(X), [model.v(p) for p in X], rtol=1e-12)

    def test_factory_requires_two_dimensions(self):
        with pytest.raises(ArgumentError):
            population_logistic_model(1, 100.0)
        assert PopulationLogisticModel(1, 100.0).dim == 1


# ==================== CUÁRTICO ====================

class TestQuarticModel:

    def test_gaussian_case(self, rng):
        model = quartic_test_model(3, np.eye(3))
        np.testing.assert_array_equal(model.grad_v(np.zeros(3)), np.zeros(3))
        assert model.third_contract_v(rng.standard_normal(3), rng.standard_normal(3)) == 0.0

    def test_third_contract_at_origin(self, rng, make_tensor3, make_tensor4):
        S = make_tensor3(3, rng)
        model = quartic_test_model(3, np.eye(3), S, make_tensor4(3, 1.0), scale=0.4)
        u = rng.standard_normal(3)
        assert model.third_contract_v(np.zeros(3), u) == pytest.approx(0.4 * S.contract(u), rel=1e-14)

    def test_derivatives_match_finite_differences(self, rng, make_tensor3, make_tensor4):
        model = QuarticTestModel(2.0 * np.eye(3), make_tensor3(3, rng), make_tensor4(3, 2.0), scale=0.3)
        x, u = rng.standard_normal(3), rng.standard_normal(3)
        np.testing.assert_allclose(model.grad_v(x), gradient_fd(model, x), rtol=1e-6, atol=1e-8)
        assert model.third_contract_v(x, u) == pytest.approx(directional_third_fd(model, x, u), rel=1e-6)

    def test_batch_value_matches_pointwise(self, rng, make_tensor3, make_tensor4):
        model = QuarticTestModel(2.0 * np.eye(3), make_tensor3(3, rng), make_tensor4(3, 2.0), scale=0.3)
        X = rng.standard_normal((7, 3))
        np.testing.assert_allclose(model.v_batch(X), [model.v(p) for p in X], rtol=1e-12)

    def test_rejects_cubic_without_quartic(self):
        S = SymTensor3.from_entries(2, {(0, 0, 0): 1.0})
        with pytest.raises(ArgumentError):
            QuarticTestModel(np.eye(2), S)

    def test_rejects_indefinite_hessian(self):
        with pytest.raises(ArgumentError):
            QuarticTestModel(np.diag([1.0, -1.0]))

    def test_rejects_dimension_mismatch(self):
        with pytest.raises(ArgumentError):
            quartic_test_model(3, np.eye(2))


# ==================== TRANSFORMACIONES ====================

class TestTransforms:

    def test_affine_composition(self, small_dataset, rng):
        base = logistic_model(small_dataset)
        A = rng.standard_normal((3, 3)) + 3.0 * np.eye(3)
        b = rng.standard_normal(3)
        model = AffineTransformedModel(base, A, b)
        y, u = rng.standard_normal(3), rng.standard_normal(3)
        assert model.v(y) == pytest.approx(base.v(A @ y + b), rel=1e-14)
        assert model.third_contract_v(y, u) == pytest.approx(base.third_contract_v(A @ y + b, A @ u), rel=1e-12)
        np.testing.assert_allclose(model.grad_v(y), A.T @ base.grad_v(A @ y + b), rtol=1e-12)

    def test_affine_rejects_singular_matrix(self, small_dataset):
        with pytest.raises(ArgumentError):
            AffineTransformedModel(logistic_model(small_dataset), np.zeros((3, 3)))

    def test_rescaled_preserves_potential(self, small_dataset, rng):
        base = logistic_model(small_dataset)
        model = RescaledModel(base, 4.0)
        x = rng.standard_normal(3)
        assert model.n == pytest.approx(base.n / 4.0)
        assert model.n * model.v(x) == pytest.approx(base.n * base.v(x), rel=1e-14)
        assert model.V(x) == pytest.approx(base.V(x), rel=1e-14)

    def test_rescaled_rejects_nonpositive_factor(self, small_dataset):
        with pytest.raises(ArgumentError):
            RescaledModel(logistic_model(small_dataset), 0.0)
