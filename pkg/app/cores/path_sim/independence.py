"""Statistical tests of the path decomposition at the minimum and of the ladder kernel."""

import math
from typing import Sequence

import numpy as np
from scipy import stats

from app.constants.error_messages import (
	ERROR_NO_KERNEL_PAIRS,
	ERROR_NOT_FIRST_CASE,
	ERROR_NOT_SYMMETRIC,
	ERROR_TOO_FEW_ACCEPTED,
)
from app.constants.numerics import MIN_CELL_COUNT, RATIO_MIN_GRID_STEPS, RATIO_TEST_WINDOW, SIGNIFICANCE_LEVEL
from app.cores.errors import InsufficientSampleError, PreconditionError
from app.schemas.levy import LevyModel
from app.schemas.paths import LadderChain, PathBatch
from app.schemas.reports import HypothesisReport
from app.services.logger import logger_service
from app.services.seeds import seed_service

from .batch import simulate_batch
from .estimators import empirical_cdf

logger = logger_service.get_logger(__name__, category='PathSim')


def _require_symmetric_first_case(model: LevyModel):
	if not model.is_symmetric:
		raise PreconditionError(ERROR_NOT_SYMMETRIC)
	if not model.is_first_case:
		raise PreconditionError(ERROR_NOT_FIRST_CASE)


def _equal_frequency_bins(samples: np.ndarray, n_bins: int) -> np.ndarray:
	edges = np.quantile(samples, np.linspace(0.0, 1.0, n_bins + 1)[1:-1])
	return np.searchsorted(edges, samples, side='right')


def contingency_table(first: np.ndarray, second: np.ndarray, n_bins: int) -> np.ndarray:
	"""n_bins x n_bins counts of a pair binned at the empirical quantiles of each coordinate."""
	rows = _equal_frequency_bins(first, n_bins)
	columns = _equal_frequency_bins(second, n_bins)
	table = np.zeros((n_bins, n_bins), dtype=int)
	np.add.at(table, (rows, columns), 1)
	return table


def independence_report(first: np.ndarray, second: np.ndarray, n_bins: int, name: str) -> HypothesisReport:
	"""Chi-square independence test on an equal-frequency grid."""
	if n_bins == 1:
		return HypothesisReport(name=name, statistic=0.0, p_value=1.0, n_samples=len(first), passed=True)

	required = MIN_CELL_COUNT * n_bins**2
	if len(first) < required:
		raise InsufficientSampleError(ERROR_TOO_FEW_ACCEPTED.format(accepted=len(first), required=required, bins=n_bins))

	table = contingency_table(first, second, n_bins)
	# Empty rows or columns (heavy ties) would make the expected counts singular
	table = table[table.sum(axis=1) > 0][:, table.sum(axis=0) > 0]
	statistic, p_value, dof, _ = stats.chi2_contingency(table, correction=False)

	return HypothesisReport(
		name=name,
		statistic=float(statistic),
		p_value=float(p_value),
		n_samples=len(first),
		passed=bool(p_value > SIGNIFICANCE_LEVEL),
		diagnostics={'degrees_of_freedom': float(dof)},
	)


def factorization_from_batch(batch: PathBatch, x: float, n_bins: int) -> HypothesisReport:
	"""Independence of (-m, F - m) on {M - m <= x}, plus marginal two-sample checks.

	Even replicates form the tested sample; odd replicates give the reference
	law of F under the post-minimum measure on {M <= x}, read off the
	post-minimum segments (Z_1 <= x, final value F - m).
	"""
	minima, maxima, finals = batch.minima, batch.maxima, batch.finals
	first_heights = batch.first_heights
	parity = np.arange(len(minima)) % 2

	accepted = (maxima - minima <= x) & (parity == 0)
	depth = -minima[accepted]
	rise = finals[accepted] - minima[accepted]

	report = independence_report(depth, rise, n_bins, name='factorization')
	if n_bins == 1:
		return report

	reference_mask = (first_heights <= x) & (parity == 1)
	reference = finals[reference_mask] - minima[reference_mask]

	depth_test = stats.ks_2samp(depth, reference)
	rise_test = stats.ks_2samp(rise, reference)
	marginal_p = min(float(depth_test.pvalue), float(rise_test.pvalue))

	logger.info(
		f'Factorization at x={x}: chi2 p={report.p_value:.4f}, marginal p={marginal_p:.4f}, accepted={len(depth)}'
	)

	return report.model_copy(
		update={
			'passed': report.passed and marginal_p > SIGNIFICANCE_LEVEL,
			'diagnostics': {
				**report.diagnostics,
				'depth_marginal_p': float(depth_test.pvalue),
				'rise_marginal_p': float(rise_test.pvalue),
				'reference_samples': float(len(reference)),
			},
		}
	)


def factorization_test(
	model: LevyModel, x: float, n_paths: int, n_bins: int, dt: float, seed: int, workers: int = 1
) -> HypothesisReport:
	"""Test that depth -m and rise F - m are independent given the amplitude M - m <= x.

	x = inf removes the amplitude restriction. One bin is a trivially passing test.
	"""
	_require_symmetric_first_case(model)
	if n_bins == 1:
		return HypothesisReport(name='factorization', statistic=0.0, p_value=1.0, n_samples=0, passed=True)

	batch = simulate_batch(model, n_paths, dt, seed, workers)
	return factorization_from_batch(batch, x, n_bins)


def _second_heights(chains: Sequence[LadderChain]) -> tuple[np.ndarray, np.ndarray]:
	pairs = [
		(chain.heights[0], chain.heights[1]) for chain in chains if len(chain.heights) >= 2 and chain.heights[0] > 0.0
	]
	if not pairs:
		return np.array([]), np.array([])

	first, second = np.array(pairs).T
	return first, second


def kernel_uniformity_test(
	model: LevyModel, n_paths: int, dt: float, seed: int, reference_paths: int = 0, workers: int = 1
) -> HypothesisReport:
	"""Probability-integral-transform test of the ladder kernel on raw paths.

	Given Z_1 = z, Z_2 has law dual_H(-dy) / dual_H(z) on [-z, 0], so
	U = dual_H(-Z_2) / dual_H(Z_1) is uniform. dual_H = H for symmetric models
	and is estimated from an independent batch. On the grid dual_H has an atom at 0,
	the chains ending at their maximum; they carry no Z_2 and the atom is taken out of U.
	"""
	_require_symmetric_first_case(model)
	reference_paths = reference_paths or n_paths

	batch = simulate_batch(model, n_paths, dt, seed_service.child_seed(seed, 0), workers)
	reference = simulate_batch(model, reference_paths, dt, seed_service.child_seed(seed, 1), workers)

	first, second = _second_heights(batch.chains)
	reference_heights = reference.first_heights

	atom, _ = empirical_cdf(reference_heights, np.zeros(1))
	numerator, _ = empirical_cdf(reference_heights, -second)
	denominator, _ = empirical_cdf(reference_heights, first)
	numerator, denominator = numerator - atom[0], denominator - atom[0]
	usable = denominator > 0.0
	uniforms = np.clip(numerator[usable] / denominator[usable], 0.0, 1.0)

	result = stats.kstest(uniforms, 'uniform')
	logger.info(f'Kernel uniformity on {len(uniforms)} chains: KS p={result.pvalue:.4f}')

	return HypothesisReport(
		name='kernel_uniformity',
		statistic=float(result.statistic),
		p_value=float(result.pvalue),
		n_samples=len(uniforms),
		passed=bool(result.pvalue > SIGNIFICANCE_LEVEL),
	)


def ratio_test_window(model: LevyModel, dt: float) -> tuple[float, float]:
	"""First heights resolved by the grid and still in the power-law range of H.

	Between RATIO_MIN_GRID_STEPS grid resolutions dt**(1/alpha) and RATIO_TEST_WINDOW
	times the killing scale mu**(-1/alpha).
	"""
	lower = RATIO_MIN_GRID_STEPS * dt ** (1.0 / model.alpha)
	upper = RATIO_TEST_WINDOW * model.killing.rate ** (-1.0 / model.alpha)
	return lower, upper


def ratio_power_test(
	chains: Sequence[LadderChain], delta: float, min_height: float = 0.0, max_height: float = math.inf
) -> HypothesisReport:
	"""KS test of (-Z_2 / Z_1)**delta against Uniform(0, 1), the kernel law for power-law dual_H = x**delta.

	For killed paths dual_H is a power law only well below the killing scale,
	and grid extrema distort the smallest heights, so only chains with
	min_height <= Z_1 <= max_height enter (see ratio_test_window).
	"""
	first, second = _second_heights(chains)
	window = (first >= min_height) & (first <= max_height)
	if not np.any(window):
		raise InsufficientSampleError(ERROR_NO_KERNEL_PAIRS.format(min_height=min_height, max_height=max_height))

	uniforms = (-second[window] / first[window]) ** delta
	result = stats.kstest(uniforms, 'uniform')
	logger.info(
		f'Ratio test on {len(uniforms)} chains with Z_1 in [{min_height:g}, {max_height:g}]: KS p={result.pvalue:.4f}'
	)

	return HypothesisReport(
		name='ratio_power',
		statistic=float(result.statistic),
		p_value=float(result.pvalue),
		n_samples=len(uniforms),
		passed=bool(result.pvalue > SIGNIFICANCE_LEVEL),
		diagnostics={'delta': delta, 'min_height': min_height, 'max_height': max_height},
	)
