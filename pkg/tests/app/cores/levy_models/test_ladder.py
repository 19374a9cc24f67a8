"""Tests for closed-form ladder functions."""

import numpy as np
import pytest

from app.cores.levy_models import closed_form_H, ladder_tables
from app.schemas.levy import LevyModel

XS = np.geomspace(1e-4, 1e2, 200)
SECOND_CASE = {'mode': 'lebesgue-proxy', 'rate': 1.0}


class TestClosedFormH:
	"""Test H where it is known."""

	def test_second_case_power(self):
		"""Test H(x) = x^(alpha / 2)."""
		H = closed_form_H(LevyModel(alpha=0.8, killing=SECOND_CASE), XS)

		np.testing.assert_allclose(H(XS), XS**0.4)
		assert H.lower_exponent == pytest.approx(0.4)

	def test_brownian_first_case(self):
		"""Test H(x) = tanh(sqrt(mu) x / 2)."""
		model = LevyModel(family='brownian', killing={'rate': 4.0})
		H = closed_form_H(model, XS)
		x = np.array([0.01, 0.5, 3.0])

		np.testing.assert_allclose(H(x), np.tanh(x), rtol=1e-3)
		assert H.lower_exponent == pytest.approx(1.0, abs=1e-3)

	def test_stable_first_case_unknown(self):
		"""Test that stable processes in the first case have no closed form."""
		assert closed_form_H(LevyModel(alpha=1.5), XS) is None

	def test_skewed_unknown(self):
		"""Test that skewed processes are not handled."""
		assert closed_form_H(LevyModel(alpha=1.5, skew=0.5, killing=SECOND_CASE), XS) is None


class TestLadderTables:
	"""Test the pair of H and its dual."""

	def test_skewed_stable_powers(self):
		"""Test H = x^gamma and dual x^delta from the positivity parameters."""
		model = LevyModel(alpha=1.5, skew=1.0, killing=SECOND_CASE)

		Hplus, Hminus, stable = ladder_tables(model, XS, n_mc=100_000, seed=0)

		assert stable
		assert Hplus.lower_exponent + Hminus.lower_exponent == pytest.approx(1.5)
		assert Hplus.lower_exponent == pytest.approx(0.5, abs=0.02)

	def test_symmetric_stable_shares_table(self):
		"""Test that symmetric stable processes use x^(alpha/2) for both."""
		Hplus, Hminus, stable = ladder_tables(LevyModel(alpha=1.0, killing=SECOND_CASE), XS)

		assert stable
		np.testing.assert_allclose(Hplus.ys, Hminus.ys)

	def test_brownian_first_case(self):
		"""Test that the Brownian closed form serves as both tables."""
		Hplus, Hminus, stable = ladder_tables(LevyModel(family='brownian'), XS)

		assert not stable
		assert Hplus is Hminus

	def test_unknown(self):
		"""Test that the stable first case has no tables."""
		assert ladder_tables(LevyModel(alpha=1.5), XS) is None
