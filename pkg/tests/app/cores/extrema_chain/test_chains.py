"""Tests for the alternating extrema chain driven by power-law tables."""

import numpy as np
import pytest

from app.cores.errors import DegenerateStateError, DomainError
from app.cores.extrema_chain import f_over_m_test, kernel_step, phi_mc, sample_below, simulate_chain, simulate_chains
from app.cores.specfun import beta_laplace
from app.cores.tables import MonotoneTable
from app.schemas.specfun import BetaParams

GRID = np.geomspace(1e-8, 1e2, 400)


@pytest.fixture
def cauchy_tables():
	table = MonotoneTable.from_power(1.0, 0.5, GRID)
	return table, table


class TestKernel:
	"""Test single kernel draws."""

	def test_sample_below_inverts_power_law(self):
		"""Test draws cap * u**(1/delta) from x**delta."""
		table = MonotoneTable.from_power(1.0, 0.5, GRID)
		uniforms = np.array([0.25, 0.5, 1.0])

		draws = sample_below(table, np.full(3, 2.0), uniforms)

		np.testing.assert_allclose(draws, 2.0 * uniforms**2.0, rtol=1e-8)

	def test_kernel_step_signs(self, cauchy_tables):
		"""Test that the kernel alternates sides and stays below |z|."""
		Hplus, Hminus = cauchy_tables

		down = kernel_step(Hplus, Hminus, 1.5, seed=1)
		up = kernel_step(Hplus, Hminus, -1.5, seed=1)

		assert -1.5 <= down <= 0.0
		assert 0.0 <= up <= 1.5
		assert up == pytest.approx(-down)

	def test_kernel_step_zero_height(self, cauchy_tables):
		"""Test that z = 0 is refused."""
		with pytest.raises(DomainError):
			kernel_step(*cauchy_tables, 0.0, seed=1)

	def test_degenerate_table(self):
		"""Test that a vanishing table value is reported."""
		table = MonotoneTable.from_power(1.0, 0.5, GRID)

		with pytest.raises(DegenerateStateError):
			sample_below(table, np.array([0.0]), np.array([0.5]))


class TestSimulateChains:
	"""Test chain batches."""

	def test_ordering(self, cauchy_tables):
		"""Test 0 <= F <= M <= x_cap."""
		outcome = simulate_chains(*cauchy_tables, 2.0, 5_000, seed=3)

		assert np.all(outcome.finals >= 0.0)
		assert np.all(outcome.finals <= outcome.maxima)
		assert np.all(outcome.maxima <= 2.0)
		assert np.all(outcome.steps >= 1)

	def test_independent_of_workers(self, cauchy_tables):
		"""Test that blocks use fixed streams."""
		serial = simulate_chains(*cauchy_tables, 1.0, 9_000, seed=4, workers=1)
		parallel = simulate_chains(*cauchy_tables, 1.0, 9_000, seed=4, workers=3)

		np.testing.assert_array_equal(serial.finals, parallel.finals)

	def test_single_chain(self, cauchy_tables):
		"""Test the one-chain entry point."""
		maximum, final, steps = simulate_chain(*cauchy_tables, 1.0, seed=5)

		assert 0.0 <= final <= maximum <= 1.0
		assert steps >= 1

	def test_final_over_max_law(self, cauchy_tables):
		"""Test F / M ~ Beta(gamma + 1, delta) = Beta(3/2, 1/2)."""
		outcome = simulate_chains(*cauchy_tables, 1.0, 20_000, seed=6)

		ks_report, dcor_report = f_over_m_test(outcome, BetaParams(a=1.5, b=0.5), seed=7)

		assert np.mean(outcome.ratios) == pytest.approx(0.75, abs=0.01)
		assert ks_report.p_value > 0.01
		assert dcor_report.name == 'f_over_m_independence'
		assert dcor_report.p_value > 0.01


class TestPhiMc:
	"""Test the chain estimator of phi."""

	def test_zero_lambda_is_exact(self, cauchy_tables):
		"""Test phi(x, 0) = H(x)."""
		estimate = phi_mc(*cauchy_tables, 4.0, 0.0, 10, seed=0)

		assert estimate.real == pytest.approx(2.0)
		assert estimate.standard_error == 0.0

	def test_matches_stable_closed_form(self, cauchy_tables):
		"""Test phi(x, lam) = x**gamma * E exp(-lam x B), B ~ Beta(gamma, delta + 1)."""
		estimate = phi_mc(*cauchy_tables, 1.0, 1.0, 20_000, seed=8)
		expected = beta_laplace(BetaParams(a=0.5, b=1.5), 1.0).real

		assert abs(estimate.real - expected) < 4.0 * estimate.standard_error + 1e-3
