"""Beta density, incomplete beta and the Laplace transform of the beta law."""

import math

import numpy as np
from scipy import integrate, special, stats

from app.constants.error_messages import ERROR_OUTSIDE_UNIT_INTERVAL
from app.constants.numerics import BETA_SERIES_MAX_TERMS, BETA_SERIES_THRESHOLD, OSCILLATION_THRESHOLD, QUAD_LIMIT
from app.cores.errors import DomainError
from app.schemas.specfun import BetaParams


def _check_unit(value: float) -> None:
	if not 0.0 <= value <= 1.0:
		raise DomainError(ERROR_OUTSIDE_UNIT_INTERVAL.format(value=value))


def gamma(value: float) -> float:
	return float(special.gamma(value))


def beta_density(params: BetaParams, t: float) -> float:
	"""Beta(a, b) density at t.

	Examples:
		>>> beta_density(BetaParams(a=2.0, b=1.0), 0.4)
		0.8
	"""
	_check_unit(t)
	return float(stats.beta.pdf(t, params.a, params.b))


def incomplete_beta(params: BetaParams, x: float) -> float:
	"""Regularized incomplete beta: the Beta(a, b) mass of [0, x]."""
	_check_unit(x)
	return float(special.betainc(params.a, params.b, x))


def _confluent_series(a: float, c: float, z: complex) -> complex:
	"""Kummer series 1F1(a; c; z)."""
	term = complex(1.0)
	total = complex(1.0)

	for n in range(BETA_SERIES_MAX_TERMS):
		term *= (a + n) / (c + n) * z / (n + 1)
		total += term
		if n > abs(z) and abs(term) < 1e-17 * max(abs(total), 1e-300):
			break

	return total


def _laplace_quadrature(params: BetaParams, lam: complex) -> complex:
	# Algebraic weights absorb the t^(a-1) (1-t)^(b-1) endpoint singularities
	weight = dict(weight='alg', wvar=(params.a - 1.0, params.b - 1.0), limit=QUAD_LIMIT, epsabs=1e-15, epsrel=1e-12)
	real, _ = integrate.quad(lambda t: math.exp(-lam.real * t) * math.cos(lam.imag * t), 0.0, 1.0, **weight)
	imag, _ = integrate.quad(lambda t: -math.exp(-lam.real * t) * math.sin(lam.imag * t), 0.0, 1.0, **weight)

	return complex(real, imag) / float(special.beta(params.a, params.b))


def beta_laplace(params: BetaParams, lam: complex) -> complex:
	"""Laplace transform of the Beta(a, b) density, 1F1(a; a+b; -lam).

	The series is used while |lam| * max(1, a, b) stays moderate. For Re(lam) > 0
	the terms of 1F1(a; c; -lam) alternate, so Kummer's transformation
	exp(-lam) 1F1(c - a; c; lam) is summed instead. Large or strongly
	oscillating arguments go to adaptive quadrature.
	"""
	lam = complex(lam)
	if lam == 0:
		return complex(1.0)

	c = params.a + params.b
	small = abs(lam) * max(1.0, params.a, params.b) < BETA_SERIES_THRESHOLD
	if small and abs(lam.imag) < OSCILLATION_THRESHOLD:
		if lam.real > 0.0:
			return complex(np.exp(-lam)) * _confluent_series(params.b, c, lam)
		return _confluent_series(params.a, c, -lam)

	return _laplace_quadrature(params, lam)


def beta_laplace_many(params: BetaParams, lams: np.ndarray) -> np.ndarray:
	return np.array([beta_laplace(params, complex(lam)) for lam in np.ravel(lams)]).reshape(np.shape(lams))
