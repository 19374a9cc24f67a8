"""Tabulated nondecreasing functions with power-law ends (H, its dual, s, m, t)."""

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike

from app.constants.error_messages import ERROR_DIVERGENT_TAIL
from app.cores.errors import DivergenceError, DomainError


def _fit_log_slope(xs: np.ndarray, ys: np.ndarray) -> float:
	if len(xs) < 2:
		return 0.0

	slope, _ = np.polyfit(np.log(xs), np.log(ys), 1)
	return float(slope)


def _decade_mask(xs: np.ndarray, lower: bool) -> np.ndarray:
	if lower:
		mask = xs <= 10.0 * xs[0]
	else:
		mask = xs >= xs[-1] / 10.0

	if mask.sum() < 2:
		mask = np.zeros_like(xs, dtype=bool)
		if lower:
			mask[:2] = True
		else:
			mask[-2:] = True

	return mask


@dataclass(frozen=True)
class MonotoneTable:
	"""A nondecreasing positive function known at nodes.

	Between nodes the table is log-log linear; below the first node and above
	the last it follows power laws whose exponents are fitted on the first and
	last decade of nodes.
	"""

	xs: np.ndarray
	ys: np.ndarray
	lower_exponent: float = field(init=False)
	upper_exponent: float = field(init=False)

	def __post_init__(self):
		xs = np.asarray(self.xs, dtype=float)
		ys = np.asarray(self.ys, dtype=float)

		if xs.ndim != 1 or xs.shape != ys.shape or len(xs) < 2:
			raise DomainError('A table needs two matching 1-d arrays with at least two nodes')
		if np.any(xs <= 0.0) or np.any(np.diff(xs) <= 0.0):
			raise DomainError('Table nodes must be positive and strictly increasing')
		if np.any(ys <= 0.0) or np.any(np.diff(ys) < 0.0):
			raise DomainError('Table values must be positive and nondecreasing')

		lower = _decade_mask(xs, lower=True)
		upper = _decade_mask(xs, lower=False)

		object.__setattr__(self, 'xs', xs)
		object.__setattr__(self, 'ys', ys)
		object.__setattr__(self, 'lower_exponent', max(_fit_log_slope(xs[lower], ys[lower]), 0.0))
		object.__setattr__(self, 'upper_exponent', max(_fit_log_slope(xs[upper], ys[upper]), 0.0))

	@classmethod
	def from_points(cls, xs: ArrayLike, ys: ArrayLike) -> 'MonotoneTable':
		"""Build a table from raw points, dropping nodes where the value is not positive.

		Empirical CDFs start with zeros below their smallest sample; those nodes
		carry no log-log information and the lower power law replaces them.
		"""
		xs_array = np.asarray(xs, dtype=float)
		ys_array = np.maximum.accumulate(np.asarray(ys, dtype=float))
		keep = (ys_array > 0.0) & (xs_array > 0.0)

		return cls(xs_array[keep], ys_array[keep])

	@classmethod
	def from_power(cls, coefficient: float, exponent: float, xs: ArrayLike) -> 'MonotoneTable':
		"""Table of coefficient * x**exponent.

		Examples:
			>>> MonotoneTable.from_power(1.0, 0.5, [1.0, 4.0])(9.0)
			array(3.)
		"""
		xs_array = np.asarray(xs, dtype=float)
		return cls(xs_array, coefficient * xs_array**exponent)

	@classmethod
	def from_function(cls, function, xs: ArrayLike) -> 'MonotoneTable':
		xs_array = np.asarray(xs, dtype=float)
		return cls.from_points(xs_array, function(xs_array))

	def __call__(self, x: ArrayLike) -> np.ndarray:
		x_array = np.asarray(x, dtype=float)
		safe = np.where(x_array > 0.0, x_array, self.xs[0])
		log_x = np.log(safe)

		inside = np.exp(np.interp(log_x, np.log(self.xs), np.log(self.ys)))
		below = self.ys[0] * (safe / self.xs[0]) ** self.lower_exponent
		above = self.ys[-1] * (safe / self.xs[-1]) ** self.upper_exponent

		values = np.where(safe < self.xs[0], below, np.where(safe > self.xs[-1], above, inside))
		return np.where(x_array > 0.0, values, 0.0)

	def inverse(self, y: ArrayLike) -> np.ndarray:
		"""Smallest x with table(x) = y, following the power-law ends outside the nodes."""
		y_array = np.asarray(y, dtype=float)
		safe = np.where(y_array > 0.0, y_array, self.ys[0])

		unique_ys, first_index = np.unique(self.ys, return_index=True)
		inside = np.exp(np.interp(np.log(safe), np.log(unique_ys), np.log(self.xs[first_index])))

		if self.lower_exponent > 0.0:
			below = self.xs[0] * (safe / self.ys[0]) ** (1.0 / self.lower_exponent)
		else:
			below = np.full_like(safe, self.xs[0])

		if self.upper_exponent > 0.0:
			above = self.xs[-1] * (safe / self.ys[-1]) ** (1.0 / self.upper_exponent)
		else:
			above = np.full_like(safe, self.xs[-1])

		values = np.where(safe < self.ys[0], below, np.where(safe > self.ys[-1], above, inside))
		return np.where(y_array > 0.0, values, 0.0)

	def power_integral(self, power: float) -> np.ndarray:
		"""Cumulative integral of table(t)**power from 0 to each node.

		Each cell is a power law, so the integral is exact for the table's own
		interpolation. Raises DivergenceError when the lower power law makes the
		integral diverge at 0.
		"""
		lower_order = power * self.lower_exponent + 1.0
		if lower_order <= 0.0:
			raise DivergenceError(ERROR_DIVERGENT_TAIL.format(order=-power * self.lower_exponent))

		start = self.ys[0] ** power * self.xs[0] / lower_order

		left, right = self.xs[:-1], self.xs[1:]
		ratio = right / left
		cell_exponent = np.log(self.ys[1:] / self.ys[:-1]) / np.log(ratio)
		order = power * cell_exponent + 1.0
		near_log = np.abs(order) < 1e-12
		safe_order = np.where(near_log, 1.0, order)

		scale = self.ys[:-1] ** power * left
		cells = np.where(near_log, scale * np.log(ratio), scale * np.expm1(safe_order * np.log(ratio)) / safe_order)

		return start + np.concatenate([[0.0], np.cumsum(cells)])

	def scaled(self, factor: float) -> 'MonotoneTable':
		return MonotoneTable(self.xs, factor * self.ys)

	def restricted(self, x_max: float) -> 'MonotoneTable':
		"""Nodes up to x_max, keeping at least two."""
		keep = self.xs <= x_max
		keep[:2] = True
		return MonotoneTable(self.xs[keep], self.ys[keep])

	def to_rows(self) -> list[tuple[float, float]]:
		return [(float(x), float(y)) for x, y in zip(self.xs, self.ys)]
