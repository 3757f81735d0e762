"""Tests for k-fold index generation and the cross-validation harness."""

import numpy as np
import pytest

from src.analytics.evaluation.cross_validation import cross_validate, kfold_indices, weighted_mean_r2
from src.analytics.evaluation.metrics import r2_from_rmse
from src.analytics.evaluation.models import CvReport, FoldScore
from src.analytics.preprocess import encode
from src.analytics.regressors.registry import ModelSpec
from src.errors import BadK, FoldError


class TestKfoldIndices:
    def test_ten_by_ten(self):
        folds = kfold_indices(10, 10, seed=42)
        assert [f.size for f in folds] == [1] * 10

    def test_filtered_dataset_size(self):
        sizes = [f.size for f in kfold_indices(1017, 10, seed=42)]
        assert sorted(sizes) == [101] * 3 + [102] * 7
        assert sum(sizes) == 1017

    def test_deterministic(self):
        a, b = kfold_indices(50, 5, seed=1), kfold_indices(50, 5, seed=1)
        assert all(np.array_equal(x, y) for x, y in zip(a, b))

    def test_partition_sweep(self):
        for n in range(2, 201):
            for k in range(2, n + 1):
                folds = kfold_indices(n, k, seed=n * 1000 + k)
                sizes = [f.size for f in folds]
                assert len(folds) == k
                assert max(sizes) - min(sizes) <= 1
                assert np.array_equal(np.sort(np.concatenate(folds)), np.arange(n))

    @pytest.mark.parametrize("n,k", [(10, 1), (10, 11), (1, 2), (10, 0)])
    def test_bad_k(self, n, k):
        with pytest.raises(BadK):
            kfold_indices(n, k, seed=0)


class TestWeightedMean:
    def test_equal_sizes_is_arithmetic_mean(self):
        scores = [FoldScore(i, 10, r2, 1.0, 1.0, 1.0) for i, r2 in enumerate([0.5, 0.7, 0.9])]
        assert weighted_mean_r2(scores) == pytest.approx(0.7)

    def test_weights_by_size(self):
        scores = [FoldScore(0, 1, 0.0, 1.0, 1.0, 1.0), FoldScore(1, 3, 1.0, 1.0, 1.0, 1.0)]
        assert weighted_mean_r2(scores) == pytest.approx(0.75)

    def test_skips_undefined_folds(self):
        scores = [FoldScore(0, 1, None, 1.0, 1.0, 0.0), FoldScore(1, 3, 0.6, 1.0, 1.0, 1.0)]
        assert weighted_mean_r2(scores) == pytest.approx(0.6)
        assert weighted_mean_r2(scores[:1]) is None


class TestCrossValidate:
    @pytest.mark.parametrize("kind,params", [
        ("linear_regression", {}),
        ("gradient_boosting", {"n_estimators": 10}),
        ("svr", {"max_iters": 300}),
    ])
    def test_report_well_formed(self, insurance_dataset, kind, params):
        m = encode(insurance_dataset)
        report = cross_validate(ModelSpec(kind, params), m.x, m.y, k=5, seed=42)
        assert report.k == 5 and report.seed == 42
        assert [f.index for f in report.fold_scores] == list(range(5))
        assert report.n == m.n_rows
        expected = sum(f.size * f.r2 for f in report.fold_scores) / m.n_rows
        assert report.weighted_mean_r2 == pytest.approx(expected)

    def test_fold_identity(self, insurance_dataset):
        m = encode(insurance_dataset)
        report = cross_validate(ModelSpec("linear_regression"), m.x, m.y, k=10, seed=3)
        for f in report.fold_scores:
            assert f.r2 == pytest.approx(r2_from_rmse(f.rmse, f.size, f.tss), abs=1e-9)
            assert f.mse == pytest.approx(f.rmse ** 2, rel=1e-12)

    def test_deterministic(self, insurance_dataset):
        m = encode(insurance_dataset)
        spec = ModelSpec("gradient_boosting", {"n_estimators": 5})
        a = cross_validate(spec, m.x, m.y, k=4, seed=9)
        b = cross_validate(spec, m.x, m.y, k=4, seed=9)
        assert a.to_dict() == b.to_dict()

    def test_leave_one_out_degenerate_folds(self):
        x = np.array([[0.0], [1.0], [2.0], [3.0], [4.0]])
        y = np.array([1.0, 3.0, 5.0, 7.0, 9.0])
        spec = ModelSpec("gradient_boosting", {"n_estimators": 1, "learning_rate": 1.0, "max_depth": 5})
        report = cross_validate(spec, x, y, k=5, seed=0)
        assert len(report.fold_scores) == 5
        assert all(np.isfinite(f.rmse) for f in report.fold_scores)
        assert all(f.size == 1 and f.r2 is None for f in report.fold_scores)
        assert report.weighted_mean_r2 is None

    def test_fold_failure_names_the_fold(self):
        x = np.column_stack([np.arange(12.0), np.arange(12.0)])
        with pytest.raises(FoldError, match="fold 0"):
            cross_validate(ModelSpec("linear_regression"), x, np.arange(12.0), k=3, seed=0)

    def test_bad_k(self, insurance_dataset):
        m = encode(insurance_dataset)
        with pytest.raises(BadK):
            cross_validate(ModelSpec("linear_regression"), m.x, m.y, k=1, seed=0)

    def test_report_dict_round_trip(self, insurance_dataset):
        m = encode(insurance_dataset)
        report = cross_validate(ModelSpec("linear_regression"), m.x, m.y, k=3, seed=1)
        assert CvReport.from_dict(report.to_dict()).to_dict() == report.to_dict()
