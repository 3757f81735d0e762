"""Tests for ordinary least squares."""

import numpy as np
import pytest

from src.analytics.regressors.linear import linear_predict, ols_fit
from src.analytics.regressors.models import LinearModel
from src.errors import DimensionMismatch, EmptyInput, RankDeficient


class TestOlsFit:
    def test_two_points(self):
        m = ols_fit([[0.0], [1.0]], [1.0, 3.0])
        assert m.intercept == pytest.approx(1.0)
        assert m.coefficients == pytest.approx([2.0])

    def test_constant_target(self, linear_data):
        x, _ = linear_data
        m = ols_fit(x, np.full(x.shape[0], 42.0))
        assert m.intercept == pytest.approx(42.0)
        assert m.coefficients == pytest.approx(np.zeros(3), abs=1e-10)

    def test_recovers_coefficients(self, linear_data):
        x, y = linear_data
        m = ols_fit(x, y)
        assert m.intercept == pytest.approx(4.0, abs=0.05)
        assert m.coefficients == pytest.approx([2.0, -1.5, 0.5], abs=0.05)

    def test_residuals_orthogonal_to_design(self, linear_data):
        x, y = linear_data
        residual = y - linear_predict(ols_fit(x, y), x)
        design = np.column_stack([np.ones(x.shape[0]), x])
        assert np.abs(design.T @ residual).max() < 1e-6

    def test_matches_normal_equations(self):
        rng = np.random.default_rng(2024)
        for _ in range(100):
            d = int(rng.integers(1, 6))
            n = int(rng.integers(d + 2, 51))
            x = rng.normal(size=(n, d))
            y = rng.normal(size=n) * 10 + x @ rng.normal(size=d)
            design = np.column_stack([np.ones(n), x])
            beta = np.linalg.solve(design.T @ design, design.T @ y)
            m = ols_fit(x, y)
            fitted = np.concatenate([[m.intercept], m.coefficients])
            assert fitted == pytest.approx(beta, rel=1e-6, abs=1e-9)

    def test_duplicate_column(self):
        x = np.column_stack([np.arange(10.0), np.arange(10.0)])
        with pytest.raises(RankDeficient):
            ols_fit(x, np.arange(10.0))

    def test_constant_feature_collides_with_intercept(self):
        x = np.column_stack([np.arange(10.0), np.ones(10)])
        with pytest.raises(RankDeficient):
            ols_fit(x, np.arange(10.0))

    def test_too_few_rows(self):
        with pytest.raises(RankDeficient):
            ols_fit(np.eye(3)[:2], [1.0, 2.0])

    def test_single_row(self):
        with pytest.raises(EmptyInput):
            ols_fit([[1.0]], [1.0])

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatch):
            ols_fit([[0.0], [1.0], [2.0]], [1.0, 2.0])

    def test_deterministic(self, linear_data):
        x, y = linear_data
        a, b = ols_fit(x, y), ols_fit(x, y)
        assert np.array_equal(linear_predict(a, x), linear_predict(b, x))


class TestLinearPredict:
    def test_zero_row_gives_intercept(self):
        m = LinearModel(intercept=3.5, coefficients=np.array([1.0, -2.0]))
        assert linear_predict(m, [[0.0, 0.0]]).tolist() == [3.5]

    def test_extrapolates(self):
        m = ols_fit([[0.0], [1.0]], [1.0, 3.0])
        assert linear_predict(m, [[2.0]])[0] == pytest.approx(5.0)

    def test_interpolates_exact_fit(self):
        x = np.array([[0.0, 1.0], [1.0, 0.0], [2.0, 2.0], [3.0, 5.0]])
        y = 1.0 + x @ np.array([3.0, -1.0])
        assert linear_predict(ols_fit(x, y), x) == pytest.approx(y)

    def test_feature_count(self):
        m = LinearModel(intercept=0.0, coefficients=np.array([1.0, 2.0]))
        with pytest.raises(DimensionMismatch):
            linear_predict(m, [[1.0, 2.0, 3.0]])
