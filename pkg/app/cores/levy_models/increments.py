"""Exact increments of stable processes (Chambers-Mallows-Stuck)."""

import math

import numpy as np

from app.cores.errors import UnsupportedModelError
from app.schemas.levy import Family, LevyModel


def standard_stable(alpha: float, skew: float, size: int, rng: np.random.Generator) -> np.ndarray:
	"""Draws of X_1 for E exp(iuX_1) = exp(-|u|^alpha (1 - i skew sign(u) tan(pi alpha / 2)))."""
	if alpha == 2.0:
		return rng.normal(0.0, math.sqrt(2.0), size)

	angle = rng.uniform(-math.pi / 2.0, math.pi / 2.0, size)
	weight = rng.exponential(1.0, size)

	if alpha == 1.0:
		shifted = math.pi / 2.0 + skew * angle
		log_term = np.log((math.pi / 2.0) * weight * np.cos(angle) / shifted)
		return 2.0 / math.pi * (shifted * np.tan(angle) - skew * log_term)

	zeta = skew * math.tan(math.pi * alpha / 2.0)
	shift = math.atan(zeta) / alpha
	scale = (1.0 + zeta * zeta) ** (1.0 / (2.0 * alpha))

	head = np.sin(alpha * (angle + shift)) / np.cos(angle) ** (1.0 / alpha)
	tail = (np.cos(angle - alpha * (angle + shift)) / weight) ** ((1.0 - alpha) / alpha)

	return scale * head * tail


def sample_increments(model: LevyModel, dt: float, size: int, rng: np.random.Generator) -> np.ndarray:
	"""Increments over a step dt; self-similarity gives X_dt = dt^(1/alpha) X_1 (plus a drift at alpha = 1)."""
	if model.family == Family.CUSTOM:
		raise UnsupportedModelError('Paths of a tabulated exponent cannot be sampled exactly')

	draws = standard_stable(model.alpha, model.skew, size, rng)
	increments = dt ** (1.0 / model.alpha) * draws

	if model.alpha == 1.0 and model.skew != 0.0:
		increments = increments + 2.0 / math.pi * model.skew * dt * math.log(dt)

	return increments
