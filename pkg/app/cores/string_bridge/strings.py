"""The Krein string of a ladder function H."""

from typing import Optional

import numpy as np
from numpy.typing import ArrayLike
from scipy import interpolate, ndimage

from app.constants.error_messages import ERROR_UNBOUNDED_VARIATION
from app.cores.errors import DomainError, UnboundedVariationError
from app.cores.tables import MonotoneTable
from app.schemas.bridge import StringConvention, StringOfH
from app.schemas.strings import StringMeasure
from app.services.logger import logger_service

logger = logger_service.get_logger(__name__, category='Bridge')

# Power of H integrated against dx in m(s(x)) = int_0^x H^p / 4
_MASS_POWER = {StringConvention.DENSITY_IN_S: 2.0, StringConvention.PRINTED: 4.0}


def smooth_monotone(xs: ArrayLike, values: ArrayLike, window: int = 5, n_points: Optional[int] = None) -> MonotoneTable:
	"""Nondecreasing PCHIP table through a running mean of noisy positive samples.

	The running mean is taken over `window` neighbouring nodes, monotonicity is
	restored by a running maximum and PCHIP keeps it between nodes.
	"""
	xs_array = np.asarray(xs, dtype=float)
	values_array = np.asarray(values, dtype=float)
	keep = (xs_array > 0.0) & (values_array > 0.0)
	if keep.sum() < 2:
		raise DomainError('Need at least two positive samples to smooth')

	xs_array, values_array = xs_array[keep], values_array[keep]
	smoothed = ndimage.uniform_filter1d(values_array, size=max(window, 1), mode='nearest')
	smoothed = np.maximum.accumulate(smoothed)

	log_xs = np.log(xs_array)
	spline = interpolate.PchipInterpolator(log_xs, smoothed)
	grid = np.geomspace(xs_array[0], xs_array[-1], n_points or 4 * len(xs_array))

	return MonotoneTable.from_points(grid, np.maximum.accumulate(spline(np.log(grid))))


def build_string(H: MonotoneTable, convention: StringConvention = StringConvention.DENSITY_IN_S) -> StringOfH:
	"""s = int H^-2, s^-1 and the string m in the y = s(x) coordinate.

	Bounded variation is read off the lower power law H ~ x^gamma: s is finite
	only for 2 gamma < 1. The string density dm/dy is H^4/4 or H^6/4 at
	y = s(x) depending on the convention, and the phase int sqrt(dm/dy) dy
	equals s^-1 / 2 in the DENSITY_IN_S convention.

	Examples:
		>>> string = build_string(MonotoneTable.from_power(1.0, 0.25, np.geomspace(1e-6, 1e2, 400)))
		>>> round(float(string.m_of_s(2.0)), 6)  # y**3 / 48 at y = 2
		0.166667
	"""
	gamma = H.lower_exponent
	if 2.0 * gamma >= 1.0:
		raise UnboundedVariationError(ERROR_UNBOUNDED_VARIATION.format(gamma=gamma))

	s_nodes = H.power_integral(-2.0)
	mass_nodes = H.power_integral(_MASS_POWER[convention]) / 4.0
	h_values = H.ys

	if convention == StringConvention.DENSITY_IN_S:
		density = h_values**4 / 4.0
	else:
		density = h_values**6 / 4.0

	start_density = 0.0 if gamma > 0.0 else float(density[0])
	measure = StringMeasure.from_density(np.concatenate([[0.0], s_nodes]), np.concatenate([[start_density], density]))

	s = MonotoneTable.from_points(H.xs, s_nodes)
	s_inverse = MonotoneTable.from_points(s_nodes, H.xs)
	phase = s_inverse.scaled(0.5) if convention == StringConvention.DENSITY_IN_S else None

	logger.info(
		f'String of H ({convention.value}): gamma={gamma:.4f}, length {s_nodes[-1]:.6g}, '
		f'total mass {mass_nodes[-1]:.6g} on {len(s_nodes)} nodes'
	)

	return StringOfH(
		H=H,
		s=s,
		s_inverse=s_inverse,
		m_of_s=MonotoneTable.from_points(s_nodes, mass_nodes),
		measure=measure,
		phase=phase,
		convention=convention,
	)


def composition_residual(string: StringOfH, xs: Optional[ArrayLike] = None) -> float:
	"""Largest relative gap between m_of_s(s(x)) and int_0^x H^p / 4 on xs (default: the nodes of H)."""
	H = string.H
	nodes = H.xs
	direct = H.power_integral(_MASS_POWER[string.convention]) / 4.0

	if xs is not None:
		x_array = np.asarray(xs, dtype=float)
		direct = np.exp(np.interp(np.log(x_array), np.log(nodes), np.log(direct)))
		nodes = x_array

	composed = string.m_of_s(string.s(nodes))
	return float(np.max(np.abs(composed / direct - 1.0)))


def measure_residual(string: StringOfH) -> float:
	"""Largest gap between the mass of the piecewise-linear string density and m_of_s, relative to the total mass."""
	ys = string.m_of_s.xs
	return float(np.max(np.abs(string.measure.mass(ys) - string.m_of_s.ys)) / string.m_of_s.ys[-1])
