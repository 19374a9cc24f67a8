"""Tests for the independence and kernel tests on raw paths."""

import numpy as np
import pytest

from app.cores.errors import InsufficientSampleError, PreconditionError
from app.cores.path_sim import (
	factorization_test,
	kernel_uniformity_test,
	ratio_power_test,
	ratio_test_window,
	simulate_batch,
)
from app.cores.path_sim.independence import contingency_table, independence_report
from app.schemas.levy import LevyModel
from app.schemas.paths import LadderChain


class TestIndependenceReport:
	"""Test the chi-square test on equal-frequency bins."""

	def test_contingency_table_margins(self):
		"""Test that equal-frequency bins give balanced margins."""
		rng = np.random.default_rng(0)
		table = contingency_table(rng.random(900), rng.random(900), 3)

		np.testing.assert_array_equal(table.sum(axis=1), [300, 300, 300])
		assert table.sum() == 900

	def test_dependent_pair_fails(self):
		"""Test that a functional dependence is detected."""
		first = np.random.default_rng(1).random(2_000)

		report = independence_report(first, first**2, 4, name='dependent')

		assert not report.passed
		assert report.p_value < 1e-6

	def test_independent_pair(self):
		"""Test that independent samples are not rejected outright."""
		rng = np.random.default_rng(2)

		report = independence_report(rng.random(5_000), rng.random(5_000), 4, name='independent')

		assert report.p_value > 1e-4
		assert report.diagnostics['degrees_of_freedom'] == 9.0

	def test_single_bin_passes(self):
		"""Test the trivial one-bin test."""
		report = independence_report(np.arange(3.0), np.arange(3.0), 1, name='trivial')

		assert report.passed
		assert report.p_value == 1.0

	def test_too_few_samples(self):
		"""Test the minimum cell count."""
		with pytest.raises(InsufficientSampleError):
			independence_report(np.arange(10.0), np.arange(10.0), 3, name='small')


class TestPreconditions:
	"""Test the model checks of path-based tests."""

	def test_factorization_needs_symmetric_model(self):
		"""Test that skewed models are refused."""
		with pytest.raises(PreconditionError):
			factorization_test(LevyModel(alpha=1.5, skew=0.5), 1.0, 100, 2, 1e-2, seed=0)

	def test_kernel_test_needs_first_case(self):
		"""Test that the Lebesgue proxy is refused."""
		model = LevyModel(alpha=1.5, killing={'mode': 'lebesgue-proxy'})

		with pytest.raises(PreconditionError):
			kernel_uniformity_test(model, 100, 1e-2, seed=0)

	def test_single_bin_factorization(self):
		"""Test that one bin needs no simulation."""
		report = factorization_test(LevyModel(alpha=1.5), 1.0, 100, 1, 1e-2, seed=0)

		assert report.passed


class TestRatioPowerTest:
	"""Test the kernel law for power-law dual functions."""

	def test_exact_kernel_draws(self):
		"""Test chains whose second height follows the x**delta kernel exactly."""
		rng = np.random.default_rng(3)
		delta = 0.75
		chains = []
		for _ in range(3_000):
			first = rng.exponential()
			second = -first * rng.random() ** (1.0 / delta)
			chains.append(LadderChain(times=np.zeros(3), heights=np.array([first, second])))

		report = ratio_power_test(chains, delta)

		assert report.n_samples == 3_000
		assert report.p_value > 1e-4

	def test_wrong_exponent_fails(self):
		"""Test that a wrong delta is rejected."""
		rng = np.random.default_rng(4)
		chains = [
			LadderChain(times=np.zeros(3), heights=np.array([1.0, -(rng.random() ** 2.0)])) for _ in range(3_000)
		]

		assert not ratio_power_test(chains, 1.0).passed


	def test_window_keeps_power_law_range(self):
		"""Test that chains outside [min_height, max_height] do not enter the test."""
		rng = np.random.default_rng(5)
		delta = 0.5
		chains = []
		for _ in range(2_000):
			first = rng.uniform(0.01, 0.1)
			second = -first * rng.random() ** (1.0 / delta)
			chains.append(LadderChain(times=np.zeros(3), heights=np.array([first, second])))
		# Large and tiny first heights with a distorted kernel
		for first in (5.0, 1e-5):
			chains.extend(LadderChain(times=np.zeros(3), heights=np.array([first, -first])) for _ in range(2_000))

		report = ratio_power_test(chains, delta, min_height=0.01, max_height=0.1)

		assert report.n_samples == 2_000
		assert report.p_value > 1e-4
		assert report.diagnostics['min_height'] == 0.01
		assert report.diagnostics['max_height'] == 0.1
		assert not ratio_power_test(chains, delta).passed

	def test_empty_window(self):
		"""Test that a window without chains is refused."""
		chains = [LadderChain(times=np.zeros(3), heights=np.array([2.0, -1.0]))]

		with pytest.raises(InsufficientSampleError):
			ratio_power_test(chains, 0.5, max_height=0.1)

	def test_window_scales(self):
		"""Test the grid and killing scales of the window."""
		min_height, max_height = ratio_test_window(LevyModel(alpha=1.0, killing={'rate': 4.0}), 1e-4)

		assert min_height == pytest.approx(0.02)
		assert max_height == pytest.approx(0.025)

		min_height, max_height = ratio_test_window(LevyModel(alpha=0.5), 1e-4)

		assert min_height == pytest.approx(2e-6)
		assert max_height == pytest.approx(0.1)


@pytest.mark.slow
class TestCauchyPaths:
	"""Test the raw-path tests on simulated Cauchy paths."""

	def test_kernel_uniformity(self):
		"""Test the ladder kernel on exponentially killed paths."""
		report = kernel_uniformity_test(LevyModel(alpha=1.0), 5_000, 2e-3, seed=21, reference_paths=30_000)

		assert report.n_samples > 1_000
		assert report.p_value > 0.01

	def test_ratio_law_below_killing_scale(self):
		"""Test (-Z_2 / Z_1)**(1/2) against Uniform(0, 1) on the Lebesgue proxy."""
		model = LevyModel(alpha=1.0, killing={'mode': 'lebesgue-proxy'})
		dt = 1e-4
		batch = simulate_batch(model, 5_000, dt, seed=22)
		min_height, max_height = ratio_test_window(model, dt)

		report = ratio_power_test(batch.chains, 0.5, min_height, max_height)

		assert report.n_samples > 200
		assert report.p_value > 0.01

	def test_factorization(self):
		"""Test that depth and rise are independent with the post-minimum marginal on {M - m <= 2}."""
		report = factorization_test(LevyModel(alpha=1.0), 2.0, 20_000, 3, 1e-2, seed=23)

		assert report.n_samples > 1_000
		assert report.p_value > 0.01
		assert report.diagnostics['depth_marginal_p'] > 0.01
		assert report.diagnostics['rise_marginal_p'] > 0.01
