"""Stieltjes-kernel integrals (2/pi) int_0^inf g(u) / (u^2 + lam^2) du with analytic tails."""

import math
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy import integrate

from app.constants.error_messages import ERROR_DIVERGENT_TAIL, ERROR_QUADRATURE
from app.constants.numerics import QUAD_LIMIT, QUAD_SEGMENTS_PER_DECADE
from app.cores.errors import DivergenceError, NonConvergenceError
from app.schemas.specfun import QuadratureSpec, TailKind
from app.services.logger import logger_service

logger = logger_service.get_logger(__name__, category='SpecFun')

Integrand = Callable[[float], float]

# Kernel expansion 1/(u^2+lam^2) = sum (-lam^2)^k u^(-2-2k) is used once u_max > 2 lam
_SERIES_RATIO = 2.0
_SERIES_MAX_TERMS = 80


def _segment_edges(lam: float, u_max: float, breakpoints: Iterable[float]) -> np.ndarray:
	lower = min(lam, 1.0, u_max) * 1e-3
	decades = max(math.log10(u_max / lower), 1.0)
	n_points = int(math.ceil(decades * QUAD_SEGMENTS_PER_DECADE)) + 1

	edges = np.geomspace(lower, u_max, n_points)
	extra = [value for value in [lam, *breakpoints] if 0.0 < value < u_max]

	return np.unique(np.concatenate([[0.0], edges, extra, [u_max]]))


def _quad(function: Integrand, lower: float, upper: float, epsrel: float) -> float:
	value, _ = integrate.quad(function, lower, upper, limit=QUAD_LIMIT, epsabs=1e-14, epsrel=epsrel)
	return value


def power_tail_integral(coefficient: float, order: float, lam: float, u_max: float, epsrel: float) -> float:
	"""int_{u_max}^inf coefficient * u**order / (u^2 + lam^2) du."""
	if coefficient == 0.0:
		return 0.0

	if u_max <= _SERIES_RATIO * lam:
		return _quad(lambda u: coefficient * u**order / (u * u + lam * lam), u_max, math.inf, epsrel)

	total = 0.0
	for k in range(_SERIES_MAX_TERMS):
		term = (-(lam**2)) ** k * u_max ** (order - 1.0 - 2.0 * k) / (1.0 - order + 2.0 * k)
		total += term
		if abs(term) < 1e-17 * abs(total):
			break

	return coefficient * total


def log_tail_integral(slope: float, offset: float, lam: float, u_max: float, epsrel: float) -> float:
	"""int_{u_max}^inf (slope * log u + offset) / (u^2 + lam^2) du."""
	if u_max <= _SERIES_RATIO * lam:
		return _quad(lambda u: (slope * math.log(u) + offset) / (u * u + lam * lam), u_max, math.inf, epsrel)

	log_u = math.log(u_max)
	total = 0.0
	for k in range(_SERIES_MAX_TERMS):
		order = 1.0 + 2.0 * k
		scale = (-(lam**2)) ** k * u_max ** (-order)
		term = scale * (slope * (log_u / order + 1.0 / order**2) + offset / order)
		total += term
		if abs(term) < 1e-17 * max(abs(total), 1e-300):
			break

	return total


def stieltjes_integral(
	g: Integrand,
	lam: float,
	spec: QuadratureSpec = QuadratureSpec(),
	breakpoints: Sequence[float] = (),
) -> float:
	"""(2/pi) int_0^inf g(u) / (u^2 + lam^2) du.

	The integral is computed numerically on [0, u_max], split on a geometric
	grid plus lam and the given breakpoints. Beyond u_max, g is continued by
	the tail model of ``spec`` matched to g(u_max) and integrated analytically.

	Raises DivergenceError for a power tail of order >= 1.

	Examples:
		>>> stieltjes_integral(lambda u: 1.0, 2.0)
		0.5
	"""
	lam = float(lam)
	if spec.tail_kind == TailKind.POWER and spec.tail_order >= 1.0:
		raise DivergenceError(ERROR_DIVERGENT_TAIL.format(order=spec.tail_order))

	epsrel = max(spec.rel_tol * 1e-4, 1e-13)
	lam_squared = lam * lam

	def kernel(u: float) -> float:
		return float(g(u)) / (u * u + lam_squared)

	edges = _segment_edges(lam, spec.u_max, breakpoints)
	body = math.fsum(_quad(kernel, lower, upper, epsrel) for lower, upper in zip(edges[:-1], edges[1:]))

	g_end = float(g(spec.u_max))
	if spec.tail_kind == TailKind.POWER:
		tail = power_tail_integral(g_end / spec.u_max**spec.tail_order, spec.tail_order, lam, spec.u_max, epsrel)
	else:
		offset = g_end - spec.tail_order * math.log(spec.u_max)
		tail = log_tail_integral(spec.tail_order, offset, lam, spec.u_max, epsrel)

	value = 2.0 / math.pi * (body + tail)
	if not math.isfinite(value):
		raise NonConvergenceError(ERROR_QUADRATURE)

	logger.debug(f'Stieltjes integral at lam={lam:g}: body={body:.6g} tail={tail:.3g}')
	return value


def tabulated_density(us: np.ndarray, values: np.ndarray) -> Integrand:
	"""Piecewise-linear density in log u, constant below the first node and linear in log u above the last."""
	log_us = np.log(np.asarray(us, dtype=float))
	table = np.asarray(values, dtype=float)

	if len(log_us) > 1:
		end_slope = (table[-1] - table[-2]) / (log_us[-1] - log_us[-2])
	else:
		end_slope = 0.0

	def density(u: float) -> float:
		if u <= 0.0:
			return float(table[0])
		log_u = math.log(u)
		if log_u > log_us[-1]:
			return float(table[-1] + end_slope * (log_u - log_us[-1]))
		return float(np.interp(log_u, log_us, table))

	return density
