"""Tests for beta-law primitives."""

import cmath
import math

import numpy as np
import pytest

from app.cores.errors import DomainError
from app.cores.specfun import beta_density, beta_laplace, beta_laplace_many, gamma, incomplete_beta
from app.schemas.specfun import BetaParams

UNIFORM = BetaParams(a=1.0, b=1.0)
ARCSINE = BetaParams(a=0.5, b=0.5)


def uniform_laplace(lam: complex) -> complex:
	return (1.0 - cmath.exp(-lam)) / lam


class TestDensity:
	"""Test the beta density and distribution function."""

	def test_density_value(self):
		"""Test the Beta(2, 1) density 2t."""
		assert beta_density(BetaParams(a=2.0, b=1.0), 0.4) == pytest.approx(0.8)

	def test_density_outside_unit_interval(self):
		"""Test that arguments outside [0, 1] are rejected."""
		with pytest.raises(DomainError):
			beta_density(UNIFORM, 1.5)

	def test_arcsine_distribution(self):
		"""Test the arcsine law mass of [0, 1/4], which is 1/3."""
		assert incomplete_beta(ARCSINE, 0.25) == pytest.approx(1.0 / 3.0, abs=1e-12)

	def test_incomplete_beta_complementarity(self):
		"""Test I_x(a, b) + I_(1-x)(b, a) = 1."""
		first = incomplete_beta(BetaParams(a=0.7, b=1.3), 0.35)
		second = incomplete_beta(BetaParams(a=1.3, b=0.7), 0.65)

		assert first + second == pytest.approx(1.0, abs=1e-12)

	def test_gamma(self):
		"""Test Gamma(1/2) = sqrt(pi)."""
		assert gamma(0.5) == pytest.approx(math.sqrt(math.pi))


class TestLaplace:
	"""Test the Laplace transform of the beta density."""

	def test_zero_argument(self):
		"""Test that the transform is 1 at lam = 0."""
		assert beta_laplace(ARCSINE, 0.0) == 1.0

	@pytest.mark.parametrize('lam', [0.3, 2.0, -1.5, 4.0 + 3.0j, 80.0, 25.0j])
	def test_uniform_transform(self, lam):
		"""Test the uniform law across the series, Kummer and quadrature branches."""
		assert beta_laplace(UNIFORM, lam) == pytest.approx(uniform_laplace(lam), rel=1e-8, abs=1e-12)

	def test_arcsine_transform_real(self):
		"""Test E exp(-lam T) = exp(-lam/2) I_0(lam/2) for the arcsine law."""
		lam = 3.0
		expected = math.exp(-lam / 2.0) * np.i0(lam / 2.0)

		assert beta_laplace(ARCSINE, lam).real == pytest.approx(expected, rel=1e-9)

	def test_many_keeps_shape(self):
		"""Test vectorized evaluation."""
		lams = np.array([[0.5, 1.0], [2.0, 3.0]])

		values = beta_laplace_many(UNIFORM, lams)

		assert values.shape == (2, 2)
		assert values[1, 0] == pytest.approx(uniform_laplace(2.0))
