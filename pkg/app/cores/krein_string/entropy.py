"""Both sides of Krein's entropy formula for a string and its spectral density.

	lhs = lam (2/pi) int_0^inf log Delta'(u) / (u^2 + lam^2) du
	rhs = lim_x log(-exp(2 lam Phi(x)) D'(x, lam) D(x, lam)) + log lam

Phi is the phase of the string, int_0^x sqrt(rho). The right side is built from
the log-form solution so that neither exp(2 lam Phi) nor D underflows.
"""

import math
from typing import Optional

import numpy as np
from scipy import integrate

from app.constants.error_messages import ERROR_NON_POSITIVE_STEP
from app.constants.numerics import DEFAULT_STRING_STEP, PLATEAU_RUN, PLATEAU_TOLERANCE
from app.cores.errors import DomainError, PreconditionError
from app.cores.krein_string.integrator import integrate_AD
from app.cores.specfun import stieltjes_integral
from app.cores.tables import MonotoneTable
from app.schemas.specfun import QuadratureSpec, TailKind
from app.schemas.strings import ABSolutions, EntropyResult, SpectralDensity, StringMeasure
from app.services.logger import logger_service

logger = logger_service.get_logger(__name__, category='Krein')

# Fallback number of samples when lam * Phi never reaches PLATEAU_RUN + 1
FALLBACK_SAMPLES = 10


def _log_crossings(density: SpectralDensity) -> list[float]:
	"""Points where log Delta' changes sign, interpolated linearly in log u."""
	us = np.asarray(density.us)
	shifted = np.asarray(density.density) - 1.0
	crossings = []

	for i in np.nonzero(shifted[:-1] * shifted[1:] < 0.0)[0]:
		weight = -shifted[i] / (shifted[i + 1] - shifted[i])
		crossings.append(float(np.exp(np.log(us[i]) + weight * np.log(us[i + 1] / us[i]))))

	return crossings


def entropy_lhs(density: SpectralDensity, lam: float) -> float:
	"""lam (2/pi) int log Delta'(u) / (u^2 + lam^2) du, split at the nodes and the sign changes of log Delta'."""
	if not density.is_positive:
		raise PreconditionError('log Delta\' needs a strictly positive spectral density')

	spec = QuadratureSpec(
		u_max=max(density.us[-1], 10.0 * lam), tail_kind=TailKind.LOG, tail_order=density.tail_exponent
	)
	breakpoints = sorted({*density.us, *_log_crossings(density)})

	return lam * stieltjes_integral(lambda u: math.log(density(u)), lam, spec, breakpoints)


def string_phase(m: StringMeasure, xs: np.ndarray) -> np.ndarray:
	"""Phi(x) = int_0^x sqrt(rho) on the grid xs."""
	return integrate.cumulative_trapezoid(np.sqrt(m.density(xs)), xs, initial=0.0)


def rhs_sequence(solution: ABSolutions, phase: np.ndarray) -> np.ndarray:
	"""log(-exp(2 lam Phi) D' D) + log lam at every node of the solution."""
	lam = solution.lam
	return (
		np.log(1.0 - solution.kappa * solution.scaled_tail)
		+ np.log(solution.scaled_tail)
		- 2.0 * solution.log_A
		+ 2.0 * lam * phase
		+ math.log(lam)
	)


def _sample_indices(scaled_phase: np.ndarray) -> np.ndarray:
	targets = np.arange(1.0, math.floor(scaled_phase[-1]) + 1.0)
	if len(targets) < PLATEAU_RUN + 1:
		start = len(scaled_phase) // 2
		return np.unique(np.linspace(start, len(scaled_phase) - 1, FALLBACK_SAMPLES).astype(int))

	indices = np.searchsorted(scaled_phase, targets)
	return np.unique(np.append(np.clip(indices, 0, len(scaled_phase) - 1), len(scaled_phase) - 1))


def entropy_formula(
	m: StringMeasure,
	s_inverse: Optional[MonotoneTable],
	density: SpectralDensity,
	lam: float,
	x_max: Optional[float] = None,
	step: float = DEFAULT_STRING_STEP,
	tolerance: float = PLATEAU_TOLERANCE,
) -> EntropyResult:
	"""Compare both sides of the entropy formula at lam.

	s_inverse is the phase Phi on the string coordinate; None computes it from
	the density of m. The right side is sampled where lam * Phi crosses the
	integers and has reached its plateau once the last PLATEAU_RUN samples
	agree within tolerance. Otherwise the result is flagged and a warning is
	logged.
	"""
	if lam <= 0.0:
		raise DomainError(f'lam must be positive, got {lam}')
	if step <= 0.0:
		raise DomainError(ERROR_NON_POSITIVE_STEP.format(value=step))

	lhs = entropy_lhs(density, lam)

	solution = integrate_AD(m, lam, x_max=x_max, step=step)
	phase = s_inverse(solution.xs) if s_inverse is not None else string_phase(m, solution.xs)
	values = rhs_sequence(solution, phase)

	indices = _sample_indices(lam * phase)
	sequence = values[indices]
	tail = sequence[-PLATEAU_RUN:]
	plateau_reached = bool(len(tail) == PLATEAU_RUN and np.ptp(tail) <= tolerance and np.all(np.isfinite(tail)))

	if not plateau_reached:
		logger.warning(f'Entropy right side has no plateau at lam={lam:g} before x={solution.xs[-1]:g}')

	logger.info(f'Entropy formula at lam={lam:g}: lhs={lhs:.6g} rhs={sequence[-1]:.6g}')

	return EntropyResult(
		lam=lam,
		lhs=lhs,
		rhs=float(sequence[-1]),
		rhs_sequence=sequence.tolist(),
		xs=solution.xs[indices].tolist(),
		plateau_reached=plateau_reached,
	)
