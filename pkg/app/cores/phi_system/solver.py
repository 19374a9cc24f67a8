"""Implicit trapezoid solver of the coupled phi / dual-phi system.

With u = phi(., lam) and v = phi_check(., -lam):

	du = exp(-lam x) v H(dx) / dual_H(x)
	dv = exp(+lam x) u dual_H(dx) / H(x)

integrated in Stieltjes form over the table increments, starting from
u ~ H and v ~ dual_H near 0.
"""

import math

import numpy as np
from numpy.typing import ArrayLike

from app.constants.error_messages import ERROR_SINGULAR_SYSTEM, ERROR_STARTUP
from app.constants.numerics import DEFAULT_REL_TOL, POINTS_PER_DECADE
from app.cores.errors import DomainError, SingularSystemError, StartupError
from app.cores.tables import MonotoneTable
from app.schemas.phi import PhiPair, PhiTable
from app.services.logger import logger_service

logger = logger_service.get_logger(__name__, category='Phi')


def log_grid(x_min: float, x_max: float, points_per_decade: int = POINTS_PER_DECADE) -> np.ndarray:
	"""Log-spaced grid with the given density, both ends included."""
	decades = math.log10(x_max / x_min)
	return np.geomspace(x_min, x_max, max(int(math.ceil(decades * points_per_decade)) + 1, 2))


def startup_point(lam: complex, rel_tol: float) -> float:
	"""x_0 where the neglected O(lam x_0) correction to phi ~ H stays below rel_tol."""
	return rel_tol / max(abs(lam), 1.0)


def _march(
	xs: np.ndarray, h_plus: np.ndarray, h_minus: np.ndarray, lam: complex
) -> tuple[np.ndarray, np.ndarray]:
	u = np.empty(len(xs), dtype=complex)
	v = np.empty(len(xs), dtype=complex)
	u[0], v[0] = h_plus[0], h_minus[0]

	decay = np.exp(-lam * xs)
	growth = np.exp(lam * xs)
	delta_plus = 0.5 * np.diff(h_plus)
	delta_minus = 0.5 * np.diff(h_minus)

	for i in range(len(xs) - 1):
		a0 = delta_plus[i] * decay[i] / h_minus[i]
		a1 = delta_plus[i] * decay[i + 1] / h_minus[i + 1]
		b0 = delta_minus[i] * growth[i] / h_plus[i]
		b1 = delta_minus[i] * growth[i + 1] / h_plus[i + 1]

		determinant = 1.0 - a1 * b1
		if abs(determinant) < 1e-12:
			raise SingularSystemError(ERROR_SINGULAR_SYSTEM.format(value=float(xs[i + 1])))

		rhs_u = u[i] + a0 * v[i]
		rhs_v = v[i] + b0 * u[i]
		u[i + 1] = (rhs_u + a1 * rhs_v) / determinant
		v[i + 1] = rhs_v + b1 * u[i + 1]

	return u, v


def _solve_on(grid: np.ndarray, Hplus: MonotoneTable, Hminus: MonotoneTable, lam: complex):
	h_plus = Hplus(grid)
	h_minus = Hminus(grid)
	if np.any(h_plus <= 0.0) or np.any(h_minus <= 0.0):
		bad = grid[np.argmax((h_plus <= 0.0) | (h_minus <= 0.0))]
		raise SingularSystemError(ERROR_SINGULAR_SYSTEM.format(value=float(bad)))

	return _march(grid, h_plus, h_minus, lam)


def _solve_one(
	Hplus: MonotoneTable, Hminus: MonotoneTable, lam: complex, xs: np.ndarray, rel_tol: float
) -> PhiTable:
	if lam == 0:
		return PhiTable(xs=xs, lam=lam, phi=Hplus(xs).astype(complex), phi_check=Hminus(xs).astype(complex))

	x_start = min(startup_point(lam, rel_tol), xs[0])
	grid = np.unique(np.concatenate([log_grid(x_start, xs[-1]), xs]))

	# Richardson step on the grid refined by geometric midpoints
	midpoints = np.sqrt(grid[:-1] * grid[1:])
	fine = np.empty(2 * len(grid) - 1)
	fine[0::2], fine[1::2] = grid, midpoints

	u_coarse, v_coarse = _solve_on(grid, Hplus, Hminus, lam)
	u_fine, v_fine = _solve_on(fine, Hplus, Hminus, lam)
	u = (4.0 * u_fine[0::2] - u_coarse) / 3.0
	v = (4.0 * v_fine[0::2] - v_coarse) / 3.0

	positions = np.searchsorted(grid, xs)
	return PhiTable(xs=xs, lam=lam, phi=u[positions], phi_check=v[positions])


def solve_phi(
	Hplus: MonotoneTable, Hminus: MonotoneTable, lam: complex, xs: ArrayLike, rel_tol: float = DEFAULT_REL_TOL
) -> PhiPair:
	"""phi(., lam), phi_check(., -lam) and phi(., -lam), phi_check(., lam) on xs.

	lam = 0 returns (H, dual_H) exactly. Raises StartupError when either table
	has no power-law behaviour at 0, SingularSystemError when a table vanishes.
	"""
	lam = complex(lam)
	xs_array = np.asarray(xs, dtype=float)
	if xs_array.ndim != 1 or len(xs_array) == 0 or np.any(xs_array <= 0.0) or np.any(np.diff(xs_array) <= 0.0):
		raise DomainError('The phi grid must be positive and strictly increasing')

	if lam != 0 and (Hplus.lower_exponent <= 0.0 or Hminus.lower_exponent <= 0.0):
		raise StartupError(ERROR_STARTUP)

	plus = _solve_one(Hplus, Hminus, lam, xs_array, rel_tol)
	minus = _solve_one(Hplus, Hminus, -lam, xs_array, rel_tol)
	logger.debug(f'Solved phi for lam={lam} on {len(xs_array)} nodes up to x={xs_array[-1]:g}')

	return PhiPair(plus=plus, minus=minus)


def reconstruction_residual(table: PhiTable, Hplus: MonotoneTable, Hminus: MonotoneTable) -> float:
	"""Largest relative trapezoid residual of du = exp(-lam x) v H(dx) / dual_H(x) over the cells of the table."""
	xs = table.xs
	h_plus, h_minus = Hplus(xs), Hminus(xs)
	integrand = np.exp(-table.lam * xs) * table.phi_check / h_minus

	quadrature = 0.5 * np.diff(h_plus) * (integrand[:-1] + integrand[1:])
	residual = np.abs(np.diff(table.phi) - quadrature) / np.maximum(np.abs(table.phi[1:]), 1e-300)

	return float(np.max(residual)) if len(residual) else 0.0
