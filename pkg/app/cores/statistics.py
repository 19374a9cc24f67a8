"""Distance-correlation independence test."""

import numpy as np
from scipy import stats

from app.constants.numerics import SIGNIFICANCE_LEVEL
from app.schemas.reports import HypothesisReport
from app.services.seeds import SeedLike, seed_service

DEFAULT_PERMUTATIONS = 199


def _centered_distances(sample: np.ndarray) -> np.ndarray:
	distances = np.abs(sample[:, None] - sample[None, :])
	return distances - distances.mean(axis=0) - distances.mean(axis=1)[:, None] + distances.mean()


def distance_correlation(first: np.ndarray, second: np.ndarray) -> float:
	"""Sample distance correlation of two real samples; 0 iff independent in the limit."""
	a = _centered_distances(np.asarray(first, dtype=float))
	b = _centered_distances(np.asarray(second, dtype=float))

	covariance = (a * b).mean()
	variance = np.sqrt((a * a).mean() * (b * b).mean())
	if variance <= 0.0:
		return 0.0

	return float(np.sqrt(max(covariance, 0.0) / variance))


def distance_correlation_test(
	first: np.ndarray,
	second: np.ndarray,
	seed: SeedLike,
	n_permutations: int = DEFAULT_PERMUTATIONS,
	name: str = 'distance_correlation',
) -> HypothesisReport:
	"""Permutation test of independence based on the distance correlation.

	The sample is O(n^2) in memory; callers subsample to a few thousand pairs.
	"""
	result = stats.permutation_test(
		(np.asarray(first, dtype=float), np.asarray(second, dtype=float)),
		distance_correlation,
		permutation_type='pairings',
		n_resamples=n_permutations,
		alternative='greater',
		random_state=seed_service.generator(seed),
	)

	return HypothesisReport(
		name=name,
		statistic=float(result.statistic),
		p_value=float(min(result.pvalue, 1.0)),
		n_samples=len(first),
		passed=bool(result.pvalue > SIGNIFICANCE_LEVEL),
		diagnostics={'permutations': float(n_permutations)},
	)
