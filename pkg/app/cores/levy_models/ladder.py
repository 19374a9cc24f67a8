"""Closed forms of the ladder function H where one is known."""

from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from app.cores.levy_models.positivity import positivity_params
from app.cores.tables import MonotoneTable
from app.schemas.levy import Family, LevyModel
from app.services.logger import logger_service

logger = logger_service.get_logger(__name__, category='Levy')


def closed_form_H(model: LevyModel, xs: ArrayLike) -> Optional[MonotoneTable]:
	"""H on xs when it has a closed form, else None.

	- symmetric stable, second case: H(x) = x**(alpha / 2);
	- Brownian killed at rate mu: H(x) = tanh(sqrt(mu) x / 2), from P(M - m <= x) = H(x)**2.
	"""
	xs_array = np.asarray(xs, dtype=float)

	if model.family == Family.CUSTOM or not model.is_symmetric:
		return None

	if not model.is_first_case:
		return MonotoneTable.from_power(1.0, model.alpha / 2.0, xs_array)

	if model.family == Family.BROWNIAN:
		rate = model.killing.rate
		return MonotoneTable.from_points(xs_array, np.tanh(np.sqrt(rate) * xs_array / 2.0))

	logger.debug(f'No closed-form H for {model.family.value} alpha={model.alpha:g} in the first case')
	return None


def ladder_tables(
	model: LevyModel, xs: ArrayLike, n_mc: int = 0, seed: int = 0
) -> Optional[tuple[MonotoneTable, MonotoneTable, bool]]:
	"""H and its dual on xs when both are known in closed form, with a flag for stable power laws.

	Skewed stable processes in the second case have H = x**gamma and dual
	x**delta; otherwise the symmetric closed form serves as both.
	"""
	xs_array = np.asarray(xs, dtype=float)

	if model.family == Family.STABLE and not model.is_first_case:
		params = positivity_params(model, n_mc, seed)
		Hplus = MonotoneTable.from_power(1.0, params.gamma, xs_array)
		return Hplus, MonotoneTable.from_power(1.0, params.delta, xs_array), True

	closed = closed_form_H(model, xs_array)
	if closed is None:
		return None
	return closed, closed, False
