"""The unbounded-variation transform: A-tilde, D-tilde, the time change t and the Rule-4 identity.

	A~(x) = (exp(lam x / 2) phi(x, lam) + exp(-lam x / 2) phi(x, -lam)) / H(x)
	D~(x) = A~(x) int_x^inf A~^-2 H^-2

A~ and D~ solve (H^2 y')' = lam^2 H^2 y / 4 with Wronskian -1. The transform to
the string of (psi + 1) / (u^2 + 1) keeps the Liouville coordinate
t(x) = int_0^x sqrt(w / p) = x / 2 of that equation, and

	D_1(t(x), lam) / -D~'(x, lam) = (D~(x, lam) / -D~'(x, lam) - D~(x, 1) / -D~'(x, 1)) / (1 - lam^2)
	                             = int_x^inf H^2 D~(., 1) D~(., lam) / 4 / (H^2 D~'(x, 1) D~'(x, lam))

The second line writes the Wronskian of D~(., lam) and D~(., 1) as an integral;
it has no cancellation near x = 0 and is the side the residual is taken against.

D_1 is known for Brownian motion killed at rate 1, where (psi + 1) / (u^2 + 1) = 1
and D_1(t, lam) = exp(-lam t) / lam is the D-solution of the Lebesgue string.
"""

from typing import Callable, Optional

import numpy as np
from numpy.typing import ArrayLike
from scipy import integrate

from app.constants.error_messages import (
	ERROR_BOUNDED_VARIATION,
	ERROR_POLE,
	ERROR_TAIL_ESTIMATION,
	ERROR_UNKNOWN_D1_STRING,
)
from app.constants.numerics import DEFAULT_REL_TOL
from app.cores.errors import DomainError, PoleError, PreconditionError, TailEstimationError, UnsupportedModelError
from app.cores.phi_system import A_NORMALIZATION, a_from_phi, log_grid, solve_phi
from app.cores.tables import MonotoneTable
from app.schemas.bridge import UnboundedTransform
from app.schemas.levy import Family, LevyModel
from app.schemas.phi import PhiPair
from app.services.logger import logger_service

logger = logger_service.get_logger(__name__, category='Bridge')

PhiSolver = Callable[[MonotoneTable, MonotoneTable, complex, np.ndarray, float], PhiPair]

POLE_DISTANCE = 1e-9
# Share of the grid, from the right end, excluded from the reported residual
RESIDUAL_EDGE = 0.2


def _check_d1_known(model: LevyModel) -> None:
	if model.family != Family.BROWNIAN or not model.is_first_case or model.killing.rate != 1.0:
		raise UnsupportedModelError(ERROR_UNKNOWN_D1_STRING)


def lebesgue_D(x: ArrayLike, lam: float) -> np.ndarray:
	"""D-solution exp(-lam x) / lam of the Lebesgue string."""
	return np.exp(-lam * np.asarray(x, dtype=float)) / lam


def time_change(xs: ArrayLike) -> np.ndarray:
	"""Liouville coordinate int_0^x sqrt(w / p) of (p y')' = lam^2 w y, p = H^2, w = H^2 / 4."""
	return 0.5 * np.asarray(xs, dtype=float)


def upper_integral(integrand: np.ndarray, xs: np.ndarray) -> np.ndarray:
	"""int_x^inf on a log grid; beyond xs[-1] the integrand decays exponentially at the rate of the last two nodes."""
	decay = -np.log(integrand[-1] / integrand[-2]) / (xs[-1] - xs[-2])
	if not decay > 0.0:
		raise TailEstimationError(ERROR_TAIL_ESTIMATION.format(x_max=float(xs[-1]), mismatch=float(decay)))

	tail = integrand[-1] / decay
	# int f dx = int f x dlog x on the log grid
	cumulative = integrate.cumulative_trapezoid((integrand * xs)[::-1], -np.log(xs)[::-1], initial=0.0)[::-1]
	return cumulative + tail


def tilde_solutions(
	H: MonotoneTable, lam: float, xs: np.ndarray, phi_solver: PhiSolver = solve_phi, rel_tol: float = DEFAULT_REL_TOL
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
	"""A~, D~ and D~' on xs."""
	pair = phi_solver(H, H, lam, xs, rel_tol)
	a_tilde = A_NORMALIZATION * np.real(a_from_phi(pair, H, xs))
	h_values = H(xs)

	remaining = upper_integral(1.0 / (a_tilde * h_values) ** 2, xs)

	d_tilde = a_tilde * remaining
	d_tilde_prime = np.gradient(a_tilde, xs) * remaining - 1.0 / (a_tilde * h_values**2)

	return a_tilde, d_tilde, d_tilde_prime


def unbounded_transform(
	model: LevyModel,
	H: MonotoneTable,
	lam: float,
	xs: Optional[ArrayLike] = None,
	phi_solver: PhiSolver = solve_phi,
	rel_tol: float = DEFAULT_REL_TOL,
) -> UnboundedTransform:
	"""A~, D~, t and the pointwise Rule-4 residual at lam.

	H must have unbounded variation (2 gamma >= 1). The residual is the
	relative gap of both sides of the identity on the grid; the difference
	form of the right side is reported next to it as a diagnostic.
	"""
	lam = complex(lam)
	if lam.imag != 0.0 or lam.real <= 0.0:
		raise DomainError(f'lam must be real and positive, got {lam}')
	lam = lam.real
	if abs(lam * lam - 1.0) < POLE_DISTANCE:
		raise PoleError(ERROR_POLE)

	gamma = H.lower_exponent
	if 2.0 * gamma < 1.0:
		raise PreconditionError(ERROR_BOUNDED_VARIATION.format(gamma=gamma))
	_check_d1_known(model)

	grid = np.asarray(xs, dtype=float) if xs is not None else log_grid(1e-3, 20.0, 40)

	_, d_one, d_one_prime = tilde_solutions(H, 1.0, grid, phi_solver, rel_tol)
	a_tilde, d_tilde, d_tilde_prime = tilde_solutions(H, lam, grid, phi_solver, rel_tol)

	h_values = H(grid)
	t_values = time_change(grid)

	lhs = lebesgue_D(t_values, lam) / -d_tilde_prime
	coupling = upper_integral(h_values**2 * d_one * d_tilde / 4.0, grid)
	rhs = coupling / (h_values**2 * d_one_prime * d_tilde_prime)
	residual = np.abs(lhs - rhs) / np.abs(rhs)

	difference = (d_tilde / -d_tilde_prime - d_one / -d_one_prime) / (1.0 - lam * lam)
	difference_residual = np.abs(lhs - difference) / np.abs(difference)

	t_monotone = bool(np.all(np.diff(t_values) > 0.0))
	interior = slice(0, max(int(len(grid) * (1.0 - RESIDUAL_EDGE)), 1))
	diagnostics = {
		'max_residual': float(np.max(residual[interior])),
		'median_residual': float(np.median(residual[interior])),
		'max_difference_residual': float(np.max(difference_residual[interior])),
		't_monotone': float(t_monotone),
		't_start': float(t_values[0]),
		'D_tilde_start': float(d_tilde[0]),
	}
	logger.info(f'Rule-4 identity at lam={lam:g}: max interior residual {diagnostics["max_residual"]:.3g}')

	return UnboundedTransform(
		xs=grid,
		lam=lam,
		A_tilde=a_tilde,
		D_tilde=d_tilde,
		D_tilde_prime=d_tilde_prime,
		t_map=MonotoneTable.from_points(grid, t_values),
		residual=residual,
		diagnostics=diagnostics,
	)
