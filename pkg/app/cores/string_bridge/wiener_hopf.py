"""Wiener-Hopf log formula for the post-minimum final value of a killed symmetric process.

	-log Q(exp(-lam F)) = (1/2pi) int_R log(psi(u)/mu + 1) (1/(lam - iu) - 1/(-iu)) du

which for an even psi folds to (lam/pi) int_0^inf log(psi(u)/mu + 1) / (u^2 + lam^2) du.
"""

import math
from typing import Callable, Optional, Sequence, Union

import numpy as np
from scipy import integrate

from app.constants.error_messages import ERROR_NOT_FIRST_CASE, ERROR_NOT_SYMMETRIC, ERROR_QUADRATURE
from app.constants.numerics import QUAD_LIMIT
from app.cores.errors import DomainError, NonConvergenceError, PreconditionError, UnsupportedModelError
from app.cores.krein_string import entropy_formula
from app.cores.levy_models import psi, psi_tail_exponent
from app.cores.path_sim import simulate_batch
from app.cores.specfun import stieltjes_integral
from app.schemas.bridge import BridgeReport, LambdaRow, StringOfH
from app.schemas.levy import LevyModel
from app.schemas.specfun import QuadratureSpec, TailKind
from app.schemas.strings import SpectralDensity
from app.services.logger import logger_service

logger = logger_service.get_logger(__name__, category='Bridge')

Exponent = Callable[[float], complex]

WH_U_MAX = 1e8
DENSITY_NODES_PER_DECADE = 40


def _check_first_case_symmetric(model: LevyModel) -> None:
	if not model.is_symmetric:
		raise UnsupportedModelError(ERROR_NOT_SYMMETRIC)
	if not model.is_first_case:
		raise PreconditionError(ERROR_NOT_FIRST_CASE)


def _general_form(exponent: Exponent, rate: float, lam: complex) -> complex:
	def log_term(u: float) -> complex:
		return complex(np.log(1.0 + exponent(u) / rate))

	def folded(u: float) -> complex:
		return lam / u * (log_term(u) / (u + 1j * lam) + log_term(-u) / (u - 1j * lam))

	scale = max(abs(lam), 1.0)
	edges = np.unique(np.concatenate([[0.0], np.geomspace(1e-6 * scale, 1e4 * scale, 41), [abs(lam)]]))
	pieces = [(lower, upper) for lower, upper in zip(edges[:-1], edges[1:])] + [(edges[-1], math.inf)]

	total = 0j
	for lower, upper in pieces:
		options = dict(limit=QUAD_LIMIT, epsabs=1e-14, epsrel=1e-11)
		real, _ = integrate.quad(lambda u: folded(u).real, lower, upper, **options)
		imag, _ = integrate.quad(lambda u: folded(u).imag, lower, upper, **options)
		total += complex(real, imag)

	return total / (2.0 * math.pi)


def wh_log_laplace(
	model: LevyModel, lam: complex, general: bool = False, exponent: Optional[Exponent] = None
) -> Union[complex, float]:
	"""-log Q(exp(-lam F)) for the model killed at rate mu.

	The symmetric form is a Stieltjes integral with a logarithmic tail; the
	general form integrates the two-sided kernel and is used for complex lam,
	for an explicit (possibly asymmetric) exponent, or on request.

	Examples:
		>>> round(wh_log_laplace(LevyModel(family='brownian'), 1.0), 8)  # log(1 + lam)
		0.69314718
	"""
	lam = complex(lam)
	if lam.real < 0.0:
		raise DomainError(f'lam needs a nonnegative real part, got {lam}')
	if lam == 0:
		return 0.0

	rate = model.killing.rate
	if exponent is None:
		_check_first_case_symmetric(model)

	if general or exponent is not None or lam.imag != 0.0:
		function = exponent if exponent is not None else (lambda u: complex(psi(model, u)))
		value = _general_form(function, rate, lam)
	else:
		lam_real = lam.real
		spec = QuadratureSpec(
			u_max=max(WH_U_MAX, 1e4 * lam_real), tail_kind=TailKind.LOG, tail_order=psi_tail_exponent(model)
		)
		value = lam_real / 2.0 * stieltjes_integral(
			lambda u: math.log1p(float(psi(model, u)) / rate), lam_real, spec, breakpoints=[lam_real]
		)

	if not np.isfinite(value):
		raise NonConvergenceError(ERROR_QUADRATURE)

	if isinstance(value, complex) and abs(value.imag) <= 1e-12 * max(abs(value.real), 1.0):
		return value.real
	return value


def exponent_density(model: LevyModel, u_min: float = 1e-6, u_max: float = 1e6) -> SpectralDensity:
	"""psi(u) + mu tabulated as a spectral density with the exponent's growth as tail."""
	decades = math.log10(u_max / u_min)
	us = np.geomspace(u_min, u_max, int(decades * DENSITY_NODES_PER_DECADE) + 1)
	values = psi(model, us) + model.killing.rate

	return SpectralDensity(us=us.tolist(), density=values.tolist(), tail_exponent=psi_tail_exponent(model))


def verify_wiener_hopf(
	model: LevyModel,
	lams: Sequence[float],
	n_paths: int,
	dt: float,
	seed: int,
	workers: int = 1,
	string: Optional[StringOfH] = None,
	x_max: Optional[float] = None,
) -> BridgeReport:
	"""Monte-Carlo E exp(-lam (F - m)) against exp(-wh_log_laplace) per lam.

	With the string of H given, the entropy right side on that string is also
	compared with 2 wh_log_laplace, the left side of the entropy formula for
	the spectral density psi + mu.
	"""
	_check_first_case_symmetric(model)

	batch = simulate_batch(model, n_paths, dt, seed, workers)
	post_minimum = batch.finals - batch.minima

	rows = []
	diagnostics: dict[str, float] = {'n_paths': float(n_paths), 'dt': dt}
	density = exponent_density(model) if string is not None else None

	for lam in lams:
		samples = np.exp(-lam * post_minimum)
		mean = float(np.mean(samples))
		standard_error = float(np.std(samples, ddof=1) / math.sqrt(len(samples))) if len(samples) > 1 else 0.0
		wh = float(wh_log_laplace(model, lam))

		rows.append(LambdaRow.compare(lam, mean, math.exp(-wh)))
		diagnostics[f'se_{lam:g}'] = standard_error
		if standard_error > 0.0:
			diagnostics[f'z_{lam:g}'] = (mean - math.exp(-wh)) / standard_error

		if density is not None and lam > 0.0:
			entropy = entropy_formula(string.measure, string.phase, density, lam, x_max=x_max)
			diagnostics[f'entropy_rhs_{lam:g}'] = entropy.rhs
			diagnostics[f'entropy_gap_{lam:g}'] = abs(entropy.rhs - 2.0 * wh)
			diagnostics[f'plateau_{lam:g}'] = float(entropy.plateau_reached)

	report = BridgeReport(pipeline='wiener-hopf', per_lambda=rows, diagnostics=diagnostics)
	logger.info(f'Wiener-Hopf check on {len(rows)} lam values: max relative gap {report.max_gap:.3g}')

	return report
