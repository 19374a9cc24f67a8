"""Tests for the spectral density fit and the entropy formula."""

import numpy as np
import pytest

from app.constants.numerics import FIT_RESIDUAL_THRESHOLD
from app.cores.errors import PreconditionError
from app.cores.krein_string import default_u_grid, entropy_formula, entropy_lhs, fit_spectral_density, string_phase
from app.schemas.strings import SpectralDensity, StringMeasure

LEBESGUE_DENSITY = SpectralDensity(us=[1e-3, 1e3], density=[1.0, 1.0])


class TestFitSpectralDensity:
	"""Test the regularized inversion of D(0, lam)."""

	def test_lebesgue_values(self):
		"""Test that D(0, lam) = 1 / lam is fitted within the residual threshold."""
		lams = np.geomspace(0.1, 10.0, 12)

		density = fit_spectral_density(lams, 1.0 / lams)

		assert density.residual < FIT_RESIDUAL_THRESHOLD
		assert not density.ill_posed

	def test_too_few_samples(self):
		"""Test PreconditionError for fewer samples than required."""
		lams = np.geomspace(0.1, 10.0, 4)

		with pytest.raises(PreconditionError):
			fit_spectral_density(lams, 1.0 / lams)

	def test_too_narrow_range(self):
		"""Test PreconditionError when lam spans less than 1.5 decades."""
		lams = np.linspace(1.0, 2.0, 12)

		with pytest.raises(PreconditionError):
			fit_spectral_density(lams, 1.0 / lams)

	def test_length_mismatch(self):
		"""Test PreconditionError for mismatched samples."""
		with pytest.raises(PreconditionError):
			fit_spectral_density([1.0, 2.0], [1.0])

	def test_default_grid_brackets_lams(self):
		"""Test that the default grid extends a decade beyond the samples."""
		grid = default_u_grid(np.array([0.1, 10.0]))

		assert grid[0] == pytest.approx(0.01)
		assert grid[-1] == pytest.approx(100.0)


class TestEntropy:
	"""Test both sides of the entropy formula."""

	def test_lebesgue_lhs_vanishes(self):
		"""Test that log 1 integrates to 0."""
		assert entropy_lhs(LEBESGUE_DENSITY, 1.0) == pytest.approx(0.0, abs=1e-12)

	def test_lhs_needs_positive_density(self):
		"""Test PreconditionError when the density touches 0."""
		density = SpectralDensity(us=[1.0, 2.0], density=[0.0, 1.0])

		with pytest.raises(PreconditionError):
			entropy_lhs(density, 1.0)

	def test_phase_of_lebesgue(self):
		"""Test Phi(x) = x for rho = 1."""
		xs = np.linspace(0.0, 3.0, 7)

		np.testing.assert_allclose(string_phase(StringMeasure.lebesgue(3.0), xs), xs)

	def test_lebesgue_formula(self):
		"""Test that both sides vanish with a plateau for dm = dx."""
		result = entropy_formula(StringMeasure.lebesgue(10.0), None, LEBESGUE_DENSITY, 1.0)

		assert result.plateau_reached
		assert result.lhs == pytest.approx(0.0, abs=1e-12)
		assert result.rhs == pytest.approx(0.0, abs=1e-6)
		assert result.gap < 1e-6
