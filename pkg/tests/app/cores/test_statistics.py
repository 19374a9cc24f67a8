"""Tests for the distance-correlation test."""

import numpy as np
import pytest

from app.cores.statistics import distance_correlation, distance_correlation_test


class TestDistanceCorrelation:
	"""Test the statistic and its permutation test."""

	def test_linear_dependence(self):
		"""Test that an exact linear relation has distance correlation 1."""
		sample = np.random.default_rng(0).random(200)

		assert distance_correlation(sample, 3.0 * sample + 1.0) == pytest.approx(1.0)

	def test_constant_sample(self):
		"""Test that a constant sample gives 0."""
		assert distance_correlation(np.ones(10), np.arange(10.0)) == 0.0

	def test_dependent_pair_rejected(self):
		"""Test that a nonlinear dependence fails the permutation test."""
		sample = np.random.default_rng(1).normal(size=300)

		report = distance_correlation_test(sample, sample**2, seed=2, n_permutations=99)

		assert not report.passed
		assert report.n_samples == 300

	def test_independent_pair(self):
		"""Test that independent samples give a small statistic."""
		rng = np.random.default_rng(3)

		report = distance_correlation_test(rng.random(300), rng.random(300), seed=4, n_permutations=99)

		assert report.statistic < 0.2
		assert report.diagnostics['permutations'] == 99.0
