"""Tests for path extrema and the alternating ladder chain."""

import math

import numpy as np
import pytest

from app.cores.errors import DomainError
from app.cores.path_sim import (
	chain_sum_error,
	check_resolution,
	extract_ladder_chain,
	fluctuation_summary,
	sample_path,
)
from app.cores.path_sim.fluctuations import suffix_argmax, suffix_argmin
from app.schemas.levy import LevyModel
from app.schemas.paths import PathSample


@pytest.fixture
def zigzag():
	return PathSample(dt=0.5, values=np.array([0.0, 2.0, -1.0, 1.0, -0.5, 3.0, 2.0]), lifetime=3.2)


class TestSuffixExtrema:
	"""Test the earliest argmax and argmin of suffixes."""

	def test_suffix_argmax(self):
		"""Test ties going to the earliest index."""
		values = np.array([1.0, 3.0, 2.0, 3.0, 0.0])

		np.testing.assert_array_equal(suffix_argmax(values), [1, 1, 3, 3, 4])

	def test_suffix_argmin(self):
		"""Test the suffix minimum positions."""
		values = np.array([1.0, -1.0, 2.0, 0.5])

		np.testing.assert_array_equal(suffix_argmin(values), [1, 1, 3, 3])


class TestFluctuationSummary:
	"""Test grid extrema."""

	def test_summary(self, zigzag):
		"""Test minimum, maximum, final value and argmin time."""
		summary = fluctuation_summary(zigzag)

		assert (summary.min, summary.max, summary.final) == (-1.0, 3.0, 2.0)
		assert summary.argmin == 1.0
		assert summary.amplitude == 4.0
		np.testing.assert_array_equal(summary.running_inf, [0.0, 0.0, -1.0, -1.0, -1.0, -1.0, -1.0])


class TestLadderChain:
	"""Test the alternating extrema after the minimum."""

	def test_chain_heights_and_times(self, zigzag):
		"""Test Z_1 = 4 (up to 3) then Z_2 = -1 (down to the final value 2)."""
		chain = extract_ladder_chain(zigzag)

		np.testing.assert_allclose(chain.heights, [4.0, -1.0])
		np.testing.assert_allclose(chain.times, [1.0, 2.5, 3.0])
		assert chain_sum_error(zigzag, chain) == 0.0

	def test_minimum_at_end(self):
		"""Test that a path ending at its minimum has an empty chain."""
		path = PathSample(dt=1.0, values=np.array([0.0, 1.0, -2.0]), lifetime=2.5)

		chain = extract_ladder_chain(path)

		assert len(chain.heights) == 0
		assert chain.first == 0.0

	def test_chain_sums_to_rise_on_random_paths(self):
		"""Test sum Z_n = F - m on sampled paths."""
		model = LevyModel(alpha=1.2)
		for seed in range(5):
			path = sample_path(model, 1e-2, seed, check=False)
			chain = extract_ladder_chain(path)

			assert chain_sum_error(path, chain) < 1e-9
			assert np.all(np.sign(chain.heights[::2]) >= 0.0)

	def test_record(self, zigzag):
		"""Test the JSON record of a chain."""
		record = extract_ladder_chain(zigzag).to_record(7)

		assert record == {'index': 7, 'times': [1.0, 2.5, 3.0], 'heights': [4.0, -1.0]}


class TestSamplePath:
	"""Test killed path sampling."""

	def test_reproducible(self):
		"""Test that a seed fixes the path."""
		model = LevyModel(alpha=1.5)
		first = sample_path(model, 1e-3, 11)
		second = sample_path(model, 1e-3, 11)

		np.testing.assert_array_equal(first.values, second.values)
		assert first.lifetime == second.lifetime

	def test_grid_covers_lifetime(self):
		"""Test that the path has ceil(lifetime / dt) values starting at 0."""
		path = sample_path(LevyModel(family='brownian'), 1e-3, 4)

		assert path.values[0] == 0.0
		assert path.n_steps == max(math.ceil(path.lifetime / 1e-3), 1)

	def test_non_positive_step(self):
		"""Test that dt must be positive."""
		with pytest.raises(DomainError):
			sample_path(LevyModel(), 0.0, 1)

	def test_resolution_guard(self):
		"""Test the lifetime-to-step warning."""
		model = LevyModel(killing={'rate': 1.0})

		assert check_resolution(model, 1e-4) is True
		assert check_resolution(model, 0.1) is False
