"""Empirical H(x) = Q(Z_1 <= x) in both killing cases, and its dt-halving check."""

import math

import numpy as np
from numpy.typing import ArrayLike

from app.constants.error_messages import ERROR_TOO_FEW_PATHS
from app.constants.numerics import LEBESGUE_SCHEDULE_DEPTH, MIN_H_PATHS
from app.cores.errors import InsufficientSampleError
from app.schemas.levy import Killing, KillingMode, LevyModel
from app.schemas.paths import HEstimate
from app.schemas.reports import HypothesisReport
from app.services.logger import logger_service
from app.services.seeds import seed_service

from .batch import simulate_batch

logger = logger_service.get_logger(__name__, category='PathSim')

# |z| above this many pooled standard errors fails the dt-halving check
HALVING_Z_LIMIT = 3.0


def empirical_cdf(samples: np.ndarray, xs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
	"""Fraction of samples <= x, with binomial standard errors."""
	ordered = np.sort(samples)
	probabilities = np.searchsorted(ordered, xs, side='right') / len(ordered)
	standard_errors = np.sqrt(probabilities * (1.0 - probabilities) / len(ordered))
	return probabilities, standard_errors


def _first_case(model: LevyModel, xs: np.ndarray, n_paths: int, dt: float, seed: int, workers: int) -> HEstimate:
	batch = simulate_batch(model, n_paths, dt, seed, workers)
	values, standard_errors = empirical_cdf(batch.first_heights, xs)
	return HEstimate(xs=xs, values=values, standard_errors=standard_errors, n_paths=n_paths)


def _ratio_to_reference(estimate: HEstimate, reference_index: int) -> tuple[np.ndarray, np.ndarray]:
	reference = estimate.values[reference_index]
	reference_se = estimate.standard_errors[reference_index]
	if reference <= 0.0:
		return np.zeros_like(estimate.values), np.full_like(estimate.values, np.inf)

	ratios = estimate.values / reference
	with np.errstate(divide='ignore', invalid='ignore'):
		relative = np.sqrt((estimate.standard_errors / estimate.values) ** 2 + (reference_se / reference) ** 2)
	standard_errors = np.where(estimate.values > 0.0, ratios * relative, np.inf)

	return ratios, standard_errors


def _extrapolate(rates: np.ndarray, ratios: np.ndarray, standard_errors: np.ndarray) -> tuple[float, float]:
	"""Weighted least-squares line in mu; returns the mu = 0 intercept and its standard error."""
	usable = np.isfinite(standard_errors) & (standard_errors > 0.0)
	if usable.sum() < 2:
		last = int(np.argmin(rates))
		return float(ratios[last]), float(standard_errors[last])

	weights = 1.0 / standard_errors[usable] ** 2
	design = np.column_stack([np.ones(usable.sum()), rates[usable]])
	normal = design.T @ (weights[:, None] * design)
	coefficients = np.linalg.solve(normal, design.T @ (weights * ratios[usable]))
	covariance = np.linalg.inv(normal)

	return float(coefficients[0]), float(math.sqrt(covariance[0, 0]))


def _second_case(model: LevyModel, xs: np.ndarray, n_paths: int, dt: float, seed: int, workers: int) -> HEstimate:
	reference_index = len(xs) - 1
	rates = model.killing.rate * 2.0 ** -np.arange(LEBESGUE_SCHEDULE_DEPTH + 1)

	ratio_rows, se_rows = [], []
	for level, rate in enumerate(rates):
		level_model = model.model_copy(update={'killing': Killing(mode=KillingMode.LEBESGUE_PROXY, rate=float(rate))})
		estimate = _first_case(level_model, xs, n_paths, dt, seed_service.child_seed(seed, level), workers)
		ratios, standard_errors = _ratio_to_reference(estimate, reference_index)
		ratio_rows.append(ratios)
		se_rows.append(standard_errors)
		logger.debug(f'mu={rate:g}: H(x)/H(x_ref) at first node {ratios[0]:.4g}')

	ratio_rows = np.array(ratio_rows)
	se_rows = np.array(se_rows)

	values = np.empty(len(xs))
	standard_errors = np.empty(len(xs))
	for column in range(len(xs)):
		values[column], standard_errors[column] = _extrapolate(rates, ratio_rows[:, column], se_rows[:, column])

	values[reference_index], standard_errors[reference_index] = 1.0, 0.0
	# Extrapolation noise can break monotonicity; the envelope keeps the table valid
	values = np.maximum.accumulate(np.clip(values, 0.0, None))

	return HEstimate(
		xs=xs,
		values=values,
		standard_errors=standard_errors,
		n_paths=n_paths,
		reference_x=float(xs[reference_index]),
		diagnostics={'rates': rates.tolist()},
	)


def estimate_H(
	model: LevyModel, x_grid: ArrayLike, n_paths: int, dt: float, seed: int, workers: int = 1
) -> HEstimate:
	"""Empirical H on x_grid.

	First case: the CDF of the post-minimum maximum Z_1. Second case: the same
	CDF over the killing schedule mu_k = rate * 2**-k, normalized at the last
	grid node and extrapolated linearly in mu to mu = 0.
	"""
	if n_paths < MIN_H_PATHS:
		raise InsufficientSampleError(ERROR_TOO_FEW_PATHS.format(required=MIN_H_PATHS, actual=n_paths))

	xs = np.asarray(x_grid, dtype=float)
	if model.is_first_case:
		return _first_case(model, xs, n_paths, dt, seed, workers)

	return _second_case(model, xs, n_paths, dt, seed, workers)


def dt_halving_check(
	model: LevyModel,
	x_grid: ArrayLike,
	n_paths: int,
	dt: float,
	seed: int,
	workers: int = 1,
	midpoints: bool = True,
) -> HypothesisReport:
	"""Compare H at dt and dt / 2 on independent streams; report the largest pooled z-score."""
	xs = np.asarray(x_grid, dtype=float)
	if midpoints and len(xs) > 1:
		xs = 0.5 * (xs[:-1] + xs[1:])

	coarse = estimate_H(model, xs, n_paths, dt, seed_service.child_seed(seed, 0), workers)
	fine = estimate_H(model, xs, n_paths, dt / 2.0, seed_service.child_seed(seed, 1), workers)

	pooled = np.sqrt(coarse.standard_errors**2 + fine.standard_errors**2)
	with np.errstate(divide='ignore', invalid='ignore'):
		scores = np.where(pooled > 0.0, np.abs(coarse.values - fine.values) / pooled, 0.0)

	max_score = float(np.max(scores))
	logger.info(f'dt halving: max z-score {max_score:.3f} over {len(xs)} nodes')

	return HypothesisReport(
		name='dt_halving',
		statistic=max_score,
		p_value=float(min(1.0, len(xs) * math.erfc(max_score / math.sqrt(2.0)))),
		n_samples=n_paths,
		passed=max_score < HALVING_Z_LIMIT,
		diagnostics={'max_abs_difference': float(np.max(np.abs(coarse.values - fine.values)))},
	)
