"""Tests for batches of paths and the empirical H."""

import numpy as np
import pytest

from app.cores.errors import InsufficientSampleError
from app.cores.path_sim import (
	BATCH_HEADER,
	batch_rows,
	chain_records,
	dt_halving_check,
	empirical_cdf,
	estimate_H,
	simulate_batch,
)
from app.schemas.levy import LevyModel

BROWNIAN = LevyModel(family='brownian')


class TestSimulateBatch:
	"""Test deterministic batches."""

	def test_independent_of_workers(self):
		"""Test that the worker count does not change the batch."""
		serial = simulate_batch(BROWNIAN, 12, 1e-2, seed=5, workers=1)
		parallel = simulate_batch(BROWNIAN, 12, 1e-2, seed=5, workers=3)

		assert [record.model_dump() for record in serial.records] == [record.model_dump() for record in parallel.records]

	def test_rows_follow_header(self):
		"""Test CSV rows and chain records."""
		batch = simulate_batch(BROWNIAN, 3, 1e-2, seed=1)
		rows = batch_rows(batch)
		records = chain_records(batch)

		assert len(rows) == 3
		assert len(rows[0]) == len(BATCH_HEADER)
		assert [row[0] for row in rows] == [0, 1, 2]
		assert [record['index'] for record in records] == [0, 1, 2]

	def test_extrema_are_consistent(self):
		"""Test m <= 0 <= M and m <= F <= M."""
		batch = simulate_batch(LevyModel(alpha=0.8), 20, 1e-2, seed=2)

		assert np.all(batch.minima <= 0.0)
		assert np.all(batch.maxima >= 0.0)
		assert np.all((batch.finals >= batch.minima) & (batch.finals <= batch.maxima))


class TestEmpiricalCdf:
	"""Test the empirical distribution function."""

	def test_values_and_errors(self):
		"""Test fractions of samples at or below each node."""
		probabilities, errors = empirical_cdf(np.array([0.1, 0.2, 0.3, 0.4]), np.array([0.0, 0.2, 1.0]))

		np.testing.assert_allclose(probabilities, [0.0, 0.5, 1.0])
		np.testing.assert_allclose(errors, [0.0, 0.25, 0.0])


class TestEstimateH:
	"""Test the empirical ladder function."""

	def test_too_few_paths(self):
		"""Test that small batches are refused."""
		with pytest.raises(InsufficientSampleError):
			estimate_H(BROWNIAN, [0.5, 1.0], 100, 1e-3, seed=0)

	@pytest.mark.slow
	def test_brownian_first_case(self):
		"""Test the estimate against tanh(x / 2) for mu = 1."""
		xs = np.array([0.5, 1.0, 2.0])

		estimate = estimate_H(BROWNIAN, xs, 4_000, 1e-3, seed=8)

		np.testing.assert_allclose(estimate.values, np.tanh(xs / 2.0), atol=0.05)
		assert np.all(estimate.standard_errors < 0.02)

	@pytest.mark.slow
	def test_dt_halving_report(self):
		"""Test that the halving check compares both steps on the midpoints."""
		report = dt_halving_check(BROWNIAN, [0.5, 1.0, 2.0], 2_000, 1e-2, seed=4)

		assert report.name == 'dt_halving'
		assert report.n_samples == 2_000
		assert report.statistic >= 0.0
		assert 0.0 <= report.p_value <= 1.0
		assert report.diagnostics['max_abs_difference'] < 0.2
