"""A- and D-solutions of a Krein string.

For dm = rho dx + sum w_i delta_{a_i} the A-solution solves A'' = lam^2 A dm with
A(0) = 1, A'(0-) = 0. It is carried as l = log A and kappa = A'/A:

	l' = kappa
	kappa' = lam^2 rho - kappa^2
	kappa(a+) = kappa(a-) + lam^2 w  at an atom a

so nothing overflows however fast A grows. The D-solution D = A int_x^inf A^-2
is carried as G = A D, which solves G' = 2 kappa G - 1 backward from x_max.
Beyond x_max the density is continued with its last value rho_end, for which
G(x_max) = 1 / (lam sqrt(rho_end) + kappa(x_max)) holds exactly.
"""

import math
from typing import Optional

import numpy as np
from scipy import integrate

from app.constants.error_messages import ERROR_NO_STRING_MASS, ERROR_NON_POSITIVE_STEP, ERROR_TAIL_ESTIMATION
from app.constants.numerics import (
	DEFAULT_STRING_STEP,
	ODE_ATOL,
	ODE_RTOL,
	TAIL_FRACTION_TOLERANCE,
	TAIL_SLOPE_TOLERANCE,
)
from app.cores.errors import DomainError, TailEstimationError
from app.schemas.strings import ABSolutions, StringMeasure
from app.services.logger import logger_service

logger = logger_service.get_logger(__name__, category='Krein')


def _atom_masses(m: StringMeasure, x_max: float) -> dict[float, float]:
	masses: dict[float, float] = {}
	for location, mass in m.atoms:
		if location > x_max:
			logger.warning(f'Atom at {location:g} lies beyond x_max = {x_max:g} and is ignored')
			continue
		masses[location] = masses.get(location, 0.0) + mass
	return masses


def _grid(x_max: float, step: float, atoms: dict[float, float]) -> np.ndarray:
	base = np.arange(0.0, x_max, step)
	return np.unique(np.concatenate([base, list(atoms), [x_max]]))


def _segments(x_max: float, atoms: dict[float, float]) -> list[tuple[float, float]]:
	edges = sorted({0.0, x_max, *(location for location in atoms if 0.0 < location < x_max)})
	return list(zip(edges[:-1], edges[1:]))


def integrate_AD(
	m: StringMeasure, lam: float, x_max: Optional[float] = None, step: float = DEFAULT_STRING_STEP
) -> ABSolutions:
	"""A- and D-solutions of the string m on [0, x_max] at lam > 0.

	Values at an atom are right limits. When x_max truncates the density table
	and A has not reached its exponential regime there, the constant tail is a
	poor model and TailEstimationError is raised.

	Examples:
		>>> solution = integrate_AD(StringMeasure.lebesgue(5.0), 1.0)
		>>> round(float(solution.D[0]), 8)  # 1 / lam
		1.0
	"""
	if step <= 0.0:
		raise DomainError(ERROR_NON_POSITIVE_STEP.format(value=step))
	if x_max is not None and x_max <= 0.0:
		raise DomainError(f'x_max must be positive, got {x_max}')
	if lam <= 0.0:
		raise DomainError(f'lam must be positive, got {lam}')

	lam = float(lam)
	lam_squared = lam * lam
	x_max = float(x_max if x_max is not None else max([m.length, *(location for location, _ in m.atoms)]))
	atoms = _atom_masses(m, x_max)
	xs = _grid(x_max, step, atoms)
	density_xs = np.asarray(m.density_xs)
	density_values = np.asarray(m.density_values)

	def forward(x: float, state: np.ndarray) -> list[float]:
		rho = np.interp(x, density_xs, density_values)
		return [state[1], lam_squared * rho - state[1] * state[1]]

	log_A = np.zeros(len(xs))
	kappa = np.zeros(len(xs))
	state = np.zeros(2)
	solutions = []

	for lower, upper in _segments(x_max, atoms):
		state[1] += lam_squared * atoms.get(lower, 0.0)
		inside = (xs >= lower) & (xs <= upper)
		result = integrate.solve_ivp(
			forward,
			(lower, upper),
			state,
			method='DOP853',
			t_eval=xs[inside],
			dense_output=True,
			rtol=ODE_RTOL,
			atol=ODE_ATOL,
		)
		log_A[inside], kappa[inside] = result.y
		state = result.y[:, -1].copy()
		solutions.append((lower, upper, result.sol))

	# An atom at x_max acts on the right limit only
	kappa[-1] += lam_squared * atoms.get(x_max, 0.0)
	kappa_end = kappa[-1]

	end_slope = lam * math.sqrt(m.density(x_max))
	if end_slope + kappa_end <= 0.0:
		raise TailEstimationError(ERROR_NO_STRING_MASS)

	scaled_tail = np.zeros(len(xs))
	scaled_tail[-1] = 1.0 / (end_slope + kappa_end)
	tail_value = scaled_tail[-1]

	for lower, upper, dense in reversed(solutions):
		inside = (xs >= lower) & (xs <= upper)
		result = integrate.solve_ivp(
			lambda x, g, dense=dense: [2.0 * dense(x)[1] * g[0] - 1.0],
			(upper, lower),
			[tail_value],
			method='DOP853',
			t_eval=xs[inside][::-1],
			rtol=ODE_RTOL,
			atol=ODE_ATOL,
		)
		scaled_tail[inside] = result.y[0][::-1]
		tail_value = result.y[0][-1]

	# J(x) = int_x^inf A^-2 = G / A^2, so J(x_max) / J(0) = G_end exp(-2 l_end) / G(0)
	tail_fraction = scaled_tail[-1] * math.exp(-2.0 * log_A[-1]) / scaled_tail[0]
	mismatch = abs(kappa_end / end_slope - 1.0) if end_slope > 0.0 else 0.0
	truncated = x_max < m.length

	if truncated and mismatch > TAIL_SLOPE_TOLERANCE and tail_fraction > TAIL_FRACTION_TOLERANCE:
		raise TailEstimationError(ERROR_TAIL_ESTIMATION.format(x_max=x_max, mismatch=mismatch))

	logger.debug(
		f'String at lam={lam:g}: {len(xs)} nodes, log A(x_max)={log_A[-1]:.4g}, '
		f'D(0)={scaled_tail[0]:.8g}, tail fraction={tail_fraction:.2g}'
	)

	return ABSolutions(
		xs=xs,
		lam=lam,
		log_A=log_A,
		kappa=kappa,
		scaled_tail=scaled_tail,
		diagnostics={
			'x_max': x_max,
			'end_slope': end_slope,
			'tail_slope_mismatch': mismatch,
			'tail_fraction': tail_fraction,
			'truncated': float(truncated),
		},
	)


def integrate_D_backward(m: StringMeasure, solution: ABSolutions) -> np.ndarray:
	"""Recompute D on solution.xs from the right end alone.

	With eta = log D and theta = D'/D, theta' = lam^2 rho - theta^2 is stable when
	integrated backward; at an atom theta(a-) = theta(a+) - lam^2 w.
	"""
	lam_squared = solution.lam**2
	xs = solution.xs
	x_max = float(xs[-1])
	atoms = _atom_masses(m, x_max)
	density_xs = np.asarray(m.density_xs)
	density_values = np.asarray(m.density_values)

	def backward(x: float, state: np.ndarray) -> list[float]:
		rho = np.interp(x, density_xs, density_values)
		return [state[1], lam_squared * rho - state[1] * state[1]]

	log_D = np.zeros(len(xs))
	state = np.array([solution.log_D[-1], solution.D_prime[-1] / solution.D[-1]])
	state[1] -= lam_squared * atoms.get(x_max, 0.0)

	for lower, upper in reversed(_segments(x_max, atoms)):
		inside = (xs >= lower) & (xs <= upper)
		result = integrate.solve_ivp(
			backward,
			(upper, lower),
			state,
			method='DOP853',
			t_eval=xs[inside][::-1],
			rtol=ODE_RTOL,
			atol=ODE_ATOL,
		)
		log_D[inside] = result.y[0][::-1]
		state = result.y[:, -1].copy()
		state[1] -= lam_squared * atoms.get(lower, 0.0)

	return np.exp(log_D)


def d_solution_deviation(m: StringMeasure, solution: ABSolutions) -> float:
	"""Largest relative gap between the forward D and its backward recomputation."""
	backward = integrate_D_backward(m, solution)
	return float(np.max(np.abs(backward / solution.D - 1.0)))
