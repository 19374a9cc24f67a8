"""Extrema, final value and the alternating ladder chain of a discrete path."""

from typing import Optional

import numpy as np

from app.constants.numerics import EPS_CHAIN_RELATIVE, MAX_CHAIN_STEPS
from app.schemas.paths import FluctuationSummary, LadderChain, PathSample


def _first_record_from(is_record: np.ndarray) -> np.ndarray:
	"""For each i, the smallest j >= i with is_record[j]."""
	indices = np.where(is_record, np.arange(len(is_record)), len(is_record))
	return np.minimum.accumulate(indices[::-1])[::-1]


def suffix_argmax(values: np.ndarray) -> np.ndarray:
	"""Earliest index of the maximum of values[i:], for each i."""
	suffix_max = np.maximum.accumulate(values[::-1])[::-1]
	return _first_record_from(values == suffix_max)


def suffix_argmin(values: np.ndarray) -> np.ndarray:
	"""Earliest index of the minimum of values[i:], for each i."""
	suffix_min = np.minimum.accumulate(values[::-1])[::-1]
	return _first_record_from(values == suffix_min)


def fluctuation_summary(path: PathSample) -> FluctuationSummary:
	"""Exact grid extrema; ties in the argmin go to the earliest index.

	Examples:
		>>> summary = fluctuation_summary(PathSample(dt=0.5, values=np.array([0.0, 2.0, -1.0, 1.0]), lifetime=2.0))
		>>> summary.min, summary.max, summary.final, summary.argmin
		(-1.0, 2.0, 1.0, 1.0)
	"""
	values = path.values
	argmin_index = int(np.argmin(values))

	return FluctuationSummary(
		min=float(values[argmin_index]),
		max=float(np.max(values)),
		final=float(values[-1]),
		argmin=argmin_index * path.dt,
		argmin_index=argmin_index,
		running_sup=np.maximum.accumulate(values),
		running_inf=np.minimum.accumulate(values),
	)


def extract_ladder_chain(path: PathSample, argmin_index: Optional[int] = None) -> LadderChain:
	"""Heights Z_1 > 0, Z_2 < 0, ... of the alternating extrema after the minimum.

	Z_1 is the maximum after the minimum, relative to it; then each Z_n is the
	extremum of the remaining path relative to X at T_{n-1}. The heights sum to
	F - m. The chain stops at the end of the path, once |Z_n| falls below
	EPS_CHAIN_RELATIVE * Z_1, or after MAX_CHAIN_STEPS heights.
	"""
	values = path.values
	last = len(values) - 1
	position = int(np.argmin(values)) if argmin_index is None else argmin_index

	times = [position * path.dt]
	heights: list[float] = []
	if position == last:
		return LadderChain(times=np.array(times), heights=np.array(heights))

	after_max = suffix_argmax(values)
	after_min = suffix_argmin(values)
	threshold = 0.0
	rising = True

	while position < last and len(heights) < MAX_CHAIN_STEPS:
		following = int(after_max[position + 1] if rising else after_min[position + 1])
		height = float(values[following] - values[position])

		heights.append(height)
		times.append(following * path.dt)
		position = following
		rising = not rising

		if len(heights) == 1:
			threshold = EPS_CHAIN_RELATIVE * abs(height)
		elif abs(height) < threshold:
			break

	return LadderChain(times=np.array(times), heights=np.array(heights))


def chain_sum_error(path: PathSample, chain: LadderChain) -> float:
	"""|sum Z_n - (F - m)| for a path and its chain."""
	return abs(chain.total - (float(path.values[-1]) - float(np.min(path.values))))
