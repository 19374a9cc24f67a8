"""Tests for characteristic exponents and model validation."""

import numpy as np
import pytest
from pydantic import ValidationError

from app.cores.errors import TableTooCoarseError, UnsupportedModelError
from app.cores.levy_models import bounded_variation, psi, psi_tail_exponent
from app.schemas.levy import Family, LevyModel


def custom_model(exponent: float, nodes: int = 40) -> LevyModel:
	us = np.geomspace(1e-2, 1e2, nodes)
	return LevyModel(family=Family.CUSTOM, psi_us=us.tolist(), psi_values=(us**exponent).tolist())


class TestLevyModel:
	"""Test model validation."""

	def test_brownian_forces_alpha_two(self):
		"""Test that the Brownian family is the alpha = 2 symmetric member."""
		model = LevyModel(family='brownian', alpha=0.7, skew=0.5)

		assert model.alpha == 2.0
		assert model.is_symmetric

	def test_custom_needs_table(self):
		"""Test that a custom model without a table is rejected."""
		with pytest.raises(ValidationError):
			LevyModel(family='custom')

	def test_custom_rejects_unsorted_nodes(self):
		"""Test node validation of the custom table."""
		with pytest.raises(ValidationError):
			LevyModel(family='custom', psi_us=[2.0, 1.0], psi_values=[1.0, 2.0])

	def test_killing_defaults_to_first_case(self):
		"""Test the default exponential killing at rate 1."""
		model = LevyModel(alpha=1.5)

		assert model.is_first_case
		assert model.killing.rate == 1.0


class TestPsi:
	"""Test exponent evaluation."""

	def test_stable_exponent(self):
		"""Test psi(u) = |u|^alpha, even in u."""
		np.testing.assert_allclose(psi(LevyModel(alpha=1.5), [-4.0, 0.0, 4.0]), [8.0, 0.0, 8.0])

	def test_brownian_exponent(self):
		"""Test psi(u) = u^2."""
		assert float(psi(LevyModel(family='brownian'), 3.0)) == pytest.approx(9.0)

	def test_skewed_exponent_refused(self):
		"""Test that skewed exponents are not real."""
		with pytest.raises(UnsupportedModelError):
			psi(LevyModel(alpha=1.5, skew=0.5), 1.0)

	def test_custom_exponent_interpolates_and_extends(self):
		"""Test interpolation inside the table and the fitted power tail beyond it."""
		model = custom_model(0.5)

		assert float(psi(model, 1.0)) == pytest.approx(1.0, rel=1e-2)
		assert float(psi(model, 1e4)) == pytest.approx(100.0, rel=1e-6)
		assert psi_tail_exponent(model) == pytest.approx(0.5)


class TestBoundedVariation:
	"""Test the bounded-variation predicate."""

	@pytest.mark.parametrize(('alpha', 'expected'), [(0.5, True), (0.99, True), (1.0, False), (1.5, False)])
	def test_stable(self, alpha, expected):
		"""Test alpha < 1."""
		assert bounded_variation(LevyModel(alpha=alpha)) is expected

	def test_brownian(self):
		"""Test that Brownian paths have unbounded variation."""
		assert bounded_variation(LevyModel(family='brownian')) is False

	def test_custom_slow_growth(self):
		"""Test a custom exponent growing like sqrt(u)."""
		assert bounded_variation(custom_model(0.5)) is True
		assert bounded_variation(custom_model(1.5)) is False

	def test_custom_too_coarse(self):
		"""Test that a short table cannot decide."""
		with pytest.raises(TableTooCoarseError):
			bounded_variation(custom_model(0.5, nodes=4))

	def test_custom_borderline_exponent(self):
		"""Test that a tail exponent near 1 cannot decide."""
		with pytest.raises(TableTooCoarseError):
			bounded_variation(custom_model(1.01))
