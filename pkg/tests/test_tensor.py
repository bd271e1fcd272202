"""
Pruebas de tensores simétricos, contracciones y normas de operador.
"""

import math
from itertools import product

import numpy as np
import pytest

from core.domain.errors import ArgumentError, DimensionMismatchError, DomainError
from core.domain.tensors import SymTensor3, SymTensor4
from core.solvers.tensor import (
    contract3,
    contract4,
    contract_matrix,
    frobenius,
    opnorm_sphere,
    opnorm_sphere4,
    sphere_minimum4,
    weighted_opnorm,
)


def fibonacci_sphere(count: int) -> np.ndarray:
    i = np.arange(count) + 0.5
    phi = np.arccos(1.0 - 2.0 * i / count)
    theta = math.pi * (1.0 + math.sqrt(5.0)) * i
    return np.column_stack([np.cos(theta) * np.sin(phi), np.sin(theta) * np.sin(phi), np.cos(phi)])


def grid_opnorm(S: SymTensor3, count: int = 400_000) -> float:
    return float(np.max(np.abs(S.contract_batch(fibonacci_sphere(count)))))


# ==================== CONTRACCIONES ====================

class TestContract3:

    def test_monomial(self):
        S = SymTensor3.from_entries(4, {(0, 0, 0): 1.0})
        assert contract3(S, [2.0, 0.0, 0.0, 0.0]) == pytest.approx(8.0)

    def test_zero_vector(self, rng, make_tensor3):
        assert contract3(make_tensor3(3, rng), np.zeros(3)) == 0.0

    def test_matches_triple_loop(self, rng, make_tensor3):
        S = make_tensor3(3, rng)
        u = rng.standard_normal(3)
        expected = sum(S.entries[i, j, k] * u[i] * u[j] * u[k] for i, j, k in product(range(3), repeat=3))
        assert contract3(S, u) == pytest.approx(expected, rel=1e-12)

    def test_cubic_homogeneity(self, rng, make_tensor3):
        S = make_tensor3(4, rng)
        u = rng.standard_normal(4)
        assert contract3(S, -2.5 * u) == pytest.approx((-2.5) ** 3 * contract3(S, u), rel=1e-12)

    def test_dimension_mismatch(self, rng, make_tensor3):
        with pytest.raises(DimensionMismatchError):
            contract3(make_tensor3(3, rng), np.ones(4))

    def test_rejects_asymmetric_entries(self, rng):
        with pytest.raises(ArgumentError):
            SymTensor3(rng.standard_normal((3, 3, 3)))

    def test_batch_agrees_with_single(self, rng, make_tensor3):
        S = make_tensor3(5, rng)
        U = rng.standard_normal((7, 5))
        np.testing.assert_allclose(S.contract_batch(U), [S.contract(u) for u in U], rtol=1e-12)


class TestContractMatrix:

    def test_identity(self):
        S = SymTensor3.from_entries(3, {(0, 0, 0): 1.0})
        np.testing.assert_allclose(contract_matrix(S, np.eye(3)), [1.0, 0.0, 0.0])

    def test_zero_tensor(self):
        np.testing.assert_array_equal(contract_matrix(SymTensor3.zeros(3), np.eye(3)), np.zeros(3))

    def test_matches_double_loop(self, rng, make_tensor3):
        S = make_tensor3(4, rng)
        A = rng.standard_normal((4, 4))
        A = A + A.T
        expected = [
            sum(S.entries[i, j, k] * A[j, k] for j, k in product(range(4), repeat=2)) for i in range(4)
        ]
        np.testing.assert_allclose(contract_matrix(S, A), expected, rtol=1e-12)

    def test_rejects_asymmetric_matrix(self, rng, make_tensor3):
        with pytest.raises(ArgumentError):
            contract_matrix(make_tensor3(3, rng), np.arange(9.0).reshape(3, 3))


class TestFrobenius:

    def test_diagonal_generator(self):
        assert frobenius(SymTensor3.from_entries(3, {(0, 0, 0): 1.0})) == pytest.approx(1.0)

    def test_orbit_multiplicity(self):
        S = SymTensor3.from_entries(3, {(0, 1, 2): 1.0})
        assert frobenius(S) == pytest.approx(math.sqrt(6.0))

    def test_matches_full_sum(self, rng, make_tensor3):
        S = make_tensor3(4, rng)
        assert frobenius(S) == pytest.approx(math.sqrt(np.sum(S.entries ** 2)), rel=1e-12)


# ==================== NORMAS DE OPERADOR ====================

class TestOpnormSphere:

    def test_axis_maximizer(self):
        S = SymTensor3.from_entries(4, {(0, 0, 0): 2.5})
        assert opnorm_sphere(S) == pytest.approx(2.5, rel=1e-8)

    def test_zero_tensor(self):
        assert opnorm_sphere(SymTensor3.zeros(3)) == 0.0

    def test_matches_grid_at_d3(self, rng, make_tensor3):
        S = make_tensor3(3, rng)
        grid = grid_opnorm(S)
        estimate = opnorm_sphere(S)
        assert estimate >= grid - 1e-9
        assert estimate <= grid * (1.0 + 1e-3)

    def test_deterministic_given_seed(self, rng, make_tensor3):
        S = make_tensor3(5, rng)
        assert opnorm_sphere(S, seed=11) == opnorm_sphere(S, seed=11)


class TestWeightedOpnorm:

    def test_identity_weight(self, rng, make_tensor3):
        S = make_tensor3(3, rng)
        assert weighted_opnorm(S, np.eye(3)) == pytest.approx(opnorm_sphere(S), rel=1e-8)

    def test_scaled_identity(self):
        S = SymTensor3.from_entries(3, {(0, 0, 0): 1.0})
        assert weighted_opnorm(S, 4.0 * np.eye(3)) == pytest.approx(1.0 / 8.0, rel=1e-8)

    def test_square_root_invariance(self, rng, make_tensor3, make_spd):
        S = make_tensor3(3, rng)
        H = make_spd(3, rng)
        eigval, eigvec = np.linalg.eigh(H)
        root_inverse = eigvec @ np.diag(eigval ** -0.5) @ eigvec.T
        via_symmetric_root = opnorm_sphere(S.whiten(root_inverse))
        assert weighted_opnorm(S, H) == pytest.approx(via_symmetric_root, rel=1e-8)

    def test_matches_ellipsoid_grid(self, rng, make_tensor3, make_spd):
        S = make_tensor3(3, rng)
        H = make_spd(3, rng)
        Z = fibonacci_sphere(400_000)
        L = np.linalg.cholesky(H)
        U = np.linalg.solve(L.T, Z.T).T
        grid = float(np.max(np.abs(S.contract_batch(U))))
        assert weighted_opnorm(S, H) == pytest.approx(grid, rel=1e-3)

    def test_rejects_indefinite_weight(self, rng, make_tensor3):
        with pytest.raises(DomainError):
            weighted_opnorm(make_tensor3(2, rng), np.diag([1.0, -1.0]))


class TestTwoNormInequalities:

    def test_contract_and_frobenius_bounds(self, rng, make_tensor3):
        violations = 0
        for trial in range(100):
            d = int(rng.integers(2, 9))
            S = make_tensor3(d, rng)
            A = rng.standard_normal((d, d))
            A = A + A.T
            norm = opnorm_sphere(S, seed=trial)
            a_op = float(np.max(np.abs(np.linalg.eigvalsh(A))))
            if np.linalg.norm(contract_matrix(S, A)) > d * a_op * norm * (1 + 1e-9):
                violations += 1
            if frobenius(S) > d * norm * (1 + 1e-9):
                violations += 1
        assert violations == 0


# ==================== ORDEN 4 ====================

class TestOrderFour:

    def test_isotropic_contract(self, make_tensor4):
        T = make_tensor4(3, 2.0)
        u = np.array([1.0, 2.0, -1.0])
        assert contract4(T, u) == pytest.approx(2.0 * np.dot(u, u) ** 2, rel=1e-12)

    def test_opnorm_and_minimum(self, make_tensor4):
        T = make_tensor4(4, 1.5)
        assert opnorm_sphere4(T) == pytest.approx(1.5, rel=1e-8)
        assert sphere_minimum4(T) == pytest.approx(1.5, rel=1e-8)

    def test_tensor_contract_gives_order_three(self, rng):
        T = SymTensor4.symmetrize(rng.standard_normal((3, 3, 3, 3)))
        x = rng.standard_normal(3)
        u = rng.standard_normal(3)
        assert T.tensor_contract(x).contract(u) == pytest.approx(
            float(np.einsum("ijkl,i,j,k,l->", T.entries, x, u, u, u)), rel=1e-10
        )
