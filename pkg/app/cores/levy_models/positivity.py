"""Positivity parameters gamma = alpha P(X_1 > 0), delta = alpha P(X_1 < 0)."""

import math

import numpy as np

from app.constants.error_messages import ERROR_CUSTOM_POSITIVITY, ERROR_NO_MC_DRAWS
from app.cores.errors import InsufficientSampleError, UnsupportedModelError
from app.cores.levy_models.increments import standard_stable
from app.schemas.levy import Family, LevyModel, PositivityParams
from app.services.logger import logger_service
from app.services.seeds import SeedLike, seed_service

logger = logger_service.get_logger(__name__, category='Levy')


def positivity_params(model: LevyModel, n_mc: int = 0, seed: SeedLike = 0) -> PositivityParams:
	"""Exact for symmetric models; Monte-Carlo estimate of P(X_1 > 0) otherwise.

	Examples:
		>>> positivity_params(LevyModel(alpha=1.0))
		PositivityParams(gamma=0.5, delta=0.5, standard_error=0.0)
	"""
	if model.family == Family.CUSTOM:
		raise UnsupportedModelError(ERROR_CUSTOM_POSITIVITY)

	alpha = model.alpha
	if model.is_symmetric:
		return PositivityParams(gamma=alpha / 2.0, delta=alpha / 2.0)

	if n_mc <= 0:
		raise InsufficientSampleError(ERROR_NO_MC_DRAWS)

	rng = seed_service.generator(seed)
	draws = standard_stable(alpha, model.skew, n_mc, rng)
	p_positive = float(np.mean(draws > 0.0))
	standard_error = alpha * math.sqrt(max(p_positive * (1.0 - p_positive), 1e-300) / n_mc)

	logger.info(f'P(X_1 > 0) = {p_positive:.5f} from {n_mc} draws (alpha={alpha}, skew={model.skew})')

	gamma = alpha * p_positive
	return PositivityParams(gamma=gamma, delta=alpha - gamma, standard_error=standard_error)
