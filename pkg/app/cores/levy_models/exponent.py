"""Characteristic exponents and the bounded-variation predicate."""

import math

import numpy as np
from numpy.typing import ArrayLike

from app.constants.error_messages import ERROR_SKEWED_EXPONENT, ERROR_TABLE_TOO_COARSE
from app.constants.numerics import BV_EXPONENT_MARGIN, MIN_EXPONENT_TABLE_NODES
from app.cores.errors import TableTooCoarseError, UnsupportedModelError
from app.schemas.levy import Family, LevyModel
from app.services.logger import logger_service

logger = logger_service.get_logger(__name__, category='Levy')


def _custom_tail_exponent(model: LevyModel) -> float:
	"""Log-log slope of the custom exponent over its last decade of nodes."""
	us = np.asarray(model.psi_us, dtype=float)
	values = np.asarray(model.psi_values, dtype=float)

	mask = (us >= us[-1] / 10.0) & (values > 0.0)
	if mask.sum() < 2:
		return 0.0

	slope, _ = np.polyfit(np.log(us[mask]), np.log(values[mask]), 1)
	return float(slope)


def psi(model: LevyModel, u: ArrayLike) -> np.ndarray:
	"""Characteristic exponent: E exp(i u X_t) = exp(-t psi(u)).

	Examples:
		>>> psi(LevyModel(alpha=0.5), 4.0)
		array(2.)
	"""
	if not model.is_symmetric:
		raise UnsupportedModelError(ERROR_SKEWED_EXPONENT)

	magnitude = np.abs(np.asarray(u, dtype=float))

	if model.family != Family.CUSTOM:
		return magnitude**model.alpha

	us = np.concatenate([[0.0], model.psi_us])
	values = np.concatenate([[0.0], model.psi_values])
	inside = np.interp(magnitude, us, values)

	exponent = _custom_tail_exponent(model)
	safe = np.maximum(magnitude, us[-1])
	above = values[-1] * (safe / us[-1]) ** exponent

	return np.where(magnitude > us[-1], above, inside)


def bounded_variation(model: LevyModel) -> bool:
	"""Whether the paths have bounded variation.

	Stable: alpha < 1. Brownian: never. Custom: the exponent must grow slower
	than |u| at infinity; the decision is refused when the table does not
	reach far enough to tell.
	"""
	if model.family == Family.BROWNIAN:
		return False
	if model.family == Family.STABLE:
		return model.alpha < 1.0

	us = np.asarray(model.psi_us, dtype=float)
	decades = math.log10(us[-1] / us[0])
	exponent = _custom_tail_exponent(model)

	if len(us) < MIN_EXPONENT_TABLE_NODES or decades < 1.0 or abs(exponent - 1.0) < BV_EXPONENT_MARGIN:
		raise TableTooCoarseError(ERROR_TABLE_TOO_COARSE)

	logger.debug(f'Custom exponent tail slope {exponent:.4f} over {decades:.2f} decades')
	return exponent < 1.0


def psi_tail_exponent(model: LevyModel) -> float:
	"""Growth exponent p of psi(u) ~ u**p as u -> inf."""
	if model.family == Family.CUSTOM:
		return _custom_tail_exponent(model)
	return model.alpha
