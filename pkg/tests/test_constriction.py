import math

import numpy as np
import pytest

from fcpso.constriction import (
    MapState,
    activation_event,
    activation_threshold,
    chi_momentum,
    chi_vanilla,
    eigenvalues,
    evolution_matrix,
    lambda_max,
    step_map,
)


class TestChiVanilla:
    def test_inactive_branch(self):
        assert chi_vanilla(3.0) == 1.0

    def test_phi_4_5(self):
        # sqrt(20.25 - 18) = 1.5, 2/(2 - 4.5 - 1.5)
        assert chi_vanilla(4.5) == pytest.approx(-0.5, abs=1e-15)

    def test_phi_4_1(self):
        expected = 2.0 / (2.0 - 4.1 - math.sqrt(4.1**2 - 4 * 4.1))
        assert chi_vanilla(4.1) == pytest.approx(expected, abs=1e-15)
        assert chi_vanilla(4.1) == pytest.approx(-0.7298438, abs=1e-6)

    def test_negative_on_active_branch(self, rng):
        for phi in rng.uniform(4.0 + 1e-9, 10.0, size=200):
            assert chi_vanilla(phi) < 0.0

    @pytest.mark.parametrize("bad", [0.0, -1.0, float("nan"), float("inf")])
    def test_domain_errors(self, bad):
        with pytest.raises(ValueError):
            chi_vanilla(bad)


class TestChiMomentum:
    def test_inactive_below_threshold(self):
        # threshold 4/1.2 = 3.333... > 3
        assert chi_momentum(3.0, 0.2) == 1.0

    def test_phi4_beta_half(self):
        assert chi_momentum(4.0, 0.5) == pytest.approx(-1.0 / (1.0 + math.sqrt(2)), abs=1e-12)

    def test_beta_zero_reduces_to_vanilla(self):
        assert chi_momentum(4.5, 0.0) == chi_vanilla(4.5) == -0.5

    def test_reduction_on_grid(self):
        for phi in np.linspace(1e-3, 6.0, 1000):
            assert chi_momentum(float(phi), 0.0) == chi_vanilla(float(phi))

    @pytest.mark.parametrize("phi,beta", [(0.0, 0.5), (4.0, 1.0), (4.0, -0.1), (float("nan"), 0.5)])
    def test_domain_errors(self, phi, beta):
        with pytest.raises(ValueError):
            chi_momentum(phi, beta)


class TestActivation:
    def test_examples(self):
        assert activation_event(3.5, 0.2) is True  # 3.5 > 3.333...
        assert activation_event(2.0, 0.99) is False  # threshold ~2.0100
        assert activation_event(5.0, 0.0) is True  # vanilla phi > 4

    def test_boundary_is_inactive(self):
        beta = 0.25
        assert activation_event(activation_threshold(beta), beta) is False

    def test_active_implies_positive_discriminant(self, rng):
        for _ in range(2000):
            phi = rng.uniform(1e-3, 6.0)
            beta = rng.uniform(0.0, 1.0 - 1e-12)
            if activation_event(phi, beta):
                assert phi * phi - 4.0 * (1.0 - beta) * phi > 0.0


class TestEvolutionMatrix:
    def test_paper_substitution(self):
        expected = np.array([[0.5, 4.0, 0.5], [-0.5, -3.0, -0.5], [0.5, 0.0, 0.5]])
        np.testing.assert_array_equal(evolution_matrix(4.0, 0.5), expected)

    def test_beta_zero_structure(self):
        expected = np.array([[1.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
        np.testing.assert_array_equal(evolution_matrix(1.0, 0.0), expected)

    def test_matrix_equals_map(self, rng):
        for _ in range(100):
            phi = rng.uniform(0.1, 6.0)
            beta = rng.uniform(0.0, 0.999)
            state = MapState(*rng.normal(size=3))
            u = evolution_matrix(phi, beta)
            stepped = step_map(state, phi, beta)
            via_matrix = u @ np.array([state.v, state.y, state.m])
            got = np.array([stepped.v, stepped.y, stepped.m])
            np.testing.assert_allclose(got, via_matrix, rtol=1e-12, atol=1e-12)


class TestStepMap:
    def test_hand_example(self):
        out = step_map(MapState(1.0, 1.0, 0.0), 4.0, 0.5)
        assert (out.v, out.y, out.m) == (4.5, -3.5, 0.5)

    def test_origin_fixed_point(self, rng):
        for _ in range(20):
            phi = rng.uniform(0.1, 6.0)
            beta = rng.uniform(0.0, 0.999)
            out = step_map(MapState(0.0, 0.0, 0.0), phi, beta)
            assert (out.v, out.y, out.m) == (0.0, 0.0, 0.0)

    def test_momentum_free_degeneration(self, rng):
        v, y, m = rng.normal(size=3)
        phi = 2.5
        out = step_map(MapState(v, y, m), phi, 0.0)
        assert out.v == pytest.approx(v + phi * y)
        assert out.y == pytest.approx(-v + (1 - phi) * y)
        assert out.m == pytest.approx(v)


class TestEigenvalues:
    def test_real_case(self):
        pair = eigenvalues(4.0, 0.5)
        assert pair.discriminant == pytest.approx(8.0)
        assert pair.lambda_plus.real == pytest.approx((-2 + 2 * math.sqrt(2)) / 2, abs=1e-12)
        assert pair.lambda_minus.real == pytest.approx((-2 - 2 * math.sqrt(2)) / 2, abs=1e-12)

    def test_complex_modulus(self):
        pair = eigenvalues(1.0, 0.5)
        assert pair.discriminant < 0.0
        assert abs(pair.lambda_plus) == pytest.approx(math.sqrt(0.5), abs=1e-12)
        assert abs(pair.lambda_minus) == pytest.approx(math.sqrt(0.5), abs=1e-12)

    def test_chi_is_reciprocal_lambda_max(self):
        pair = eigenvalues(4.5, 0.0)
        assert pair.lambda_minus.real == pytest.approx(-2.0)
        assert lambda_max(4.5, 0.0) == pytest.approx(2.0)
        assert chi_vanilla(4.5) == pytest.approx(-1.0 / lambda_max(4.5, 0.0))

    def test_trace_relation(self, rng):
        for _ in range(200):
            phi = rng.uniform(0.1, 6.0)
            beta = rng.uniform(0.0, 0.999)
            pair = eigenvalues(phi, beta)
            assert pair.lambda_plus + pair.lambda_minus == pytest.approx(2.0 - phi, abs=1e-10)

    def test_roots_are_matrix_eigenvalues(self, rng):
        # lambda+- must appear among numpy's eigenvalues of the full 3x3 matrix
        for _ in range(200):
            phi = rng.uniform(0.1, 6.0)
            beta = rng.uniform(0.0, 0.999)
            pair = eigenvalues(phi, beta)
            spectrum = np.linalg.eigvals(evolution_matrix(phi, beta))
            for lam in (pair.lambda_plus, pair.lambda_minus):
                assert np.min(np.abs(spectrum - lam)) < 1e-8

    def test_characteristic_polynomial(self, rng):
        for _ in range(200):
            phi = rng.uniform(0.1, 6.0)
            beta = rng.uniform(0.0, 0.999)
            u = evolution_matrix(phi, beta)
            pair = eigenvalues(phi, beta)
            scale = max(1.0, np.abs(u).max()) ** 3
            for lam in (pair.lambda_plus, pair.lambda_minus):
                det = np.linalg.det(u - lam * np.eye(3))
                assert abs(det) / scale <= 1e-9


class TestLambdaMax:
    def test_hand_values(self):
        assert lambda_max(4.0, 0.5) == pytest.approx((2 + 2 * math.sqrt(2)) / 2, abs=1e-12)
        assert lambda_max(4.5, 0.0) == pytest.approx(2.0, abs=1e-15)

    def test_agrees_with_eigenvalues(self, rng):
        checked = 0
        while checked < 1000:
            phi = rng.uniform(0.1, 6.0)
            beta = rng.uniform(0.0, 0.999)
            if phi * phi - 4.0 * (1.0 - beta) * phi <= 0.0:
                continue
            pair = eigenvalues(phi, beta)
            expected = max(abs(pair.lambda_plus), abs(pair.lambda_minus))
            assert lambda_max(phi, beta) == pytest.approx(expected, rel=1e-12)
            checked += 1

    def test_complex_case_rejected(self):
        with pytest.raises(ValueError):
            lambda_max(1.0, 0.5)


class TestStabilityProperties:
    def test_active_chi_times_lambda_bounded(self, rng):
        checked = 0
        while checked < 10_000:
            phi = rng.uniform(1e-3, 6.0)
            beta = rng.uniform(0.0, 1.0 - 1e-12)
            if not activation_event(phi, beta):
                continue
            assert abs(chi_momentum(phi, beta)) * lambda_max(phi, beta) <= 1.0 + 1e-12
            checked += 1

    def test_inactive_complex_case_is_stable(self, rng):
        # inactive draws with a non-positive discriminant have modulus
        # sqrt(1 - beta*phi) <= 1
        checked = 0
        while checked < 5000:
            phi = rng.uniform(1e-3, 6.0)
            beta = rng.uniform(0.0, 1.0 - 1e-12)
            disc = phi * phi - 4.0 * (1.0 - beta) * phi
            if activation_event(phi, beta) or disc > 0.0:
                continue
            pair = eigenvalues(phi, beta)
            assert abs(pair.lambda_plus) == pytest.approx(math.sqrt(1.0 - beta * phi), abs=1e-12)
            assert abs(pair.lambda_plus) <= 1.0 + 1e-12
            checked += 1
