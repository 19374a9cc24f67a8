"""Least-squares fit of the constants c and k of the stable closed forms."""

import numpy as np
from numpy.typing import ArrayLike

from app.cores.specfun import beta_laplace_many
from app.schemas.levy import PositivityParams
from app.schemas.specfun import BetaParams
from app.schemas.stable import StableFluctuationLaw
from app.services.logger import logger_service

logger = logger_service.get_logger(__name__, category='Stable')


def fit_power_constant(xs: ArrayLike, values: ArrayLike, exponent: float) -> float:
	"""c minimizing sum (values - c x^exponent)^2 / values^2 (relative least squares)."""
	xs_array = np.asarray(xs, dtype=float)
	values_array = np.asarray(values, dtype=float)
	basis = xs_array**exponent / values_array
	return float(np.sum(basis) / np.sum(basis * basis))


def fit_stable_law(
	params: PositivityParams, xs: ArrayLike, h_values: ArrayLike, phi_values: ArrayLike, lam: complex
) -> StableFluctuationLaw:
	"""Fit c on the lam = 0 slice (H) and k on one lam slice (phi)."""
	xs_array = np.asarray(xs, dtype=float)
	phi_array = np.asarray(phi_values, dtype=complex)

	c = fit_power_constant(xs_array, h_values, params.gamma)

	shape = BetaParams(a=params.gamma, b=params.delta + 1.0)
	basis = xs_array**params.gamma * beta_laplace_many(shape, complex(lam) * xs_array) / phi_array
	k = float(np.real(np.sum(np.conj(basis))) / np.sum(np.abs(basis) ** 2))

	logger.info(f'Fitted stable law constants c={c:.6g}, k={k:.6g} (lam={lam})')
	return StableFluctuationLaw(params=params, k=k, c=c)
