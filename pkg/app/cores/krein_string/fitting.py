"""Regularized inversion of D(0, lam) = (2/pi) int Delta'(u) / (u^2 + lam^2) du."""

import math
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike
from scipy import integrate, optimize

from app.constants.error_messages import ERROR_SPECTRAL_PRECONDITION
from app.constants.numerics import (
	FIT_RESIDUAL_THRESHOLD,
	MIN_SPECTRAL_DECADES,
	MIN_SPECTRAL_SAMPLES,
	QUAD_LIMIT,
)
from app.cores.errors import PreconditionError
from app.cores.specfun import power_tail_integral
from app.schemas.strings import SpectralDensity
from app.services.logger import logger_service

logger = logger_service.get_logger(__name__, category='Krein')

DEFAULT_RIDGE = 1e-6
GRID_POINTS_PER_DECADE = 8
TAIL_NODES = 5
TAIL_REFITS = 2
TAIL_EXPONENT_LIMIT = 0.95


def _hat_integral(lam: float, lower: float, peak: float, rising: bool) -> float:
	"""int over [lower, peak] of a hat linear in log u, rising to 1 or falling from 1."""
	log_lower, log_peak = math.log(lower), math.log(peak)
	width = log_peak - log_lower

	def hat(u: float) -> float:
		weight = (math.log(u) - log_lower) / width
		return (weight if rising else 1.0 - weight) / (u * u + lam * lam)

	value, _ = integrate.quad(hat, lower, peak, limit=QUAD_LIMIT, epsabs=1e-15, epsrel=1e-10)
	return value


def _kernel_matrix(lams: np.ndarray, us: np.ndarray, tail_exponent: float) -> np.ndarray:
	kernel = np.zeros((len(lams), len(us)))
	for i, lam in enumerate(lams):
		for j in range(len(us)):
			if j > 0:
				kernel[i, j] += _hat_integral(lam, us[j - 1], us[j], rising=True)
			if j < len(us) - 1:
				kernel[i, j] += _hat_integral(lam, us[j], us[j + 1], rising=False)

		kernel[i, 0] += math.atan(us[0] / lam) / lam
		kernel[i, -1] += power_tail_integral(us[-1] ** -tail_exponent, tail_exponent, lam, us[-1], 1e-10)

	return 2.0 / math.pi * kernel


def _tail_slope(us: np.ndarray, coefficients: np.ndarray) -> float:
	tail_us = us[-TAIL_NODES:]
	tail = coefficients[-TAIL_NODES:]
	if np.any(tail <= 0.0):
		return 0.0

	slope = np.polyfit(np.log(tail_us), np.log(tail), 1)[0]
	return float(np.clip(slope, -TAIL_EXPONENT_LIMIT, TAIL_EXPONENT_LIMIT))


def default_u_grid(lams: np.ndarray) -> np.ndarray:
	lower, upper = lams.min() / 10.0, lams.max() * 10.0
	decades = math.log10(upper / lower)
	return np.geomspace(lower, upper, int(math.ceil(decades * GRID_POINTS_PER_DECADE)) + 1)


def fit_spectral_density(
	lams: ArrayLike, values: ArrayLike, u_grid: Optional[ArrayLike] = None, ridge: float = DEFAULT_RIDGE
) -> SpectralDensity:
	"""Nonnegative Delta' on u_grid whose Stieltjes transform matches the samples.

	Delta' is linear in log u between nodes, constant below the grid and a power
	u^p above it, p being re-estimated from the fitted tail. Rows are weighted
	by 1 / value and a second-difference penalty of weight ridge keeps the
	solution smooth. A forward residual above FIT_RESIDUAL_THRESHOLD flags the
	result as ill-posed.
	"""
	lam_array = np.asarray(lams, dtype=float)
	value_array = np.asarray(values, dtype=float)
	if len(lam_array) != len(value_array):
		raise PreconditionError('lams and values must have the same length')

	order = np.argsort(lam_array)
	lam_array, value_array = lam_array[order], value_array[order]
	decades = math.log10(lam_array[-1] / lam_array[0]) if lam_array[0] > 0.0 else 0.0
	if len(lam_array) < MIN_SPECTRAL_SAMPLES or decades < MIN_SPECTRAL_DECADES or np.any(value_array <= 0.0):
		raise PreconditionError(
			ERROR_SPECTRAL_PRECONDITION.format(samples=MIN_SPECTRAL_SAMPLES, decades=MIN_SPECTRAL_DECADES)
		)

	us = np.asarray(u_grid, dtype=float) if u_grid is not None else default_u_grid(lam_array)
	scale = float(np.median(lam_array * value_array))
	penalty = np.zeros((max(len(us) - 2, 0), len(us)))
	for row in range(len(penalty)):
		penalty[row, row : row + 3] = [1.0, -2.0, 1.0]
	penalty *= math.sqrt(ridge) / scale

	tail_exponent = 0.0
	for attempt in range(TAIL_REFITS + 1):
		kernel = _kernel_matrix(lam_array, us, tail_exponent)
		system = np.vstack([kernel / value_array[:, None], penalty])
		target = np.concatenate([np.ones(len(value_array)), np.zeros(len(penalty))])
		coefficients, _ = optimize.nnls(system, target, maxiter=50 * len(us))

		if attempt < TAIL_REFITS:
			tail_exponent = _tail_slope(us, coefficients)

	relative = kernel @ coefficients / value_array - 1.0
	residual = float(np.sqrt(np.mean(relative**2)))
	ill_posed = residual > FIT_RESIDUAL_THRESHOLD
	if ill_posed:
		logger.warning(f'Spectral fit residual {residual:.3g} exceeds {FIT_RESIDUAL_THRESHOLD:g}')
	else:
		logger.info(f'Spectral fit on {len(us)} nodes: residual {residual:.3g}, tail exponent {tail_exponent:.3f}')

	return SpectralDensity(
		us=us.tolist(),
		density=coefficients.tolist(),
		tail_exponent=tail_exponent,
		residual=residual,
		ill_posed=ill_posed,
	)
