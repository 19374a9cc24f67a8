"""Killed Levy paths on a regular time grid."""

import math

import numpy as np

from app.constants.error_messages import ERROR_NON_POSITIVE_STEP
from app.constants.numerics import RESOLUTION_GUARD_STEPS
from app.cores.errors import DomainError
from app.cores.levy_models import sample_increments
from app.schemas.levy import LevyModel
from app.schemas.paths import PathSample
from app.services.logger import logger_service
from app.services.seeds import SeedLike, seed_service

logger = logger_service.get_logger(__name__, category='PathSim')


def check_resolution(model: LevyModel, dt: float) -> bool:
	"""Warn when the expected lifetime spans fewer than RESOLUTION_GUARD_STEPS grid steps."""
	if dt <= 0.0:
		raise DomainError(ERROR_NON_POSITIVE_STEP.format(value=dt))

	expected_steps = math.ceil((1.0 / model.killing.rate) / dt)
	if expected_steps < RESOLUTION_GUARD_STEPS:
		logger.warning(f'Expected lifetime covers only {expected_steps} steps of dt={dt}')
		return False

	return True


def sample_path(model: LevyModel, dt: float, seed: SeedLike, check: bool = True) -> PathSample:
	"""Sample one path killed at an independent exponential time.

	The lifetime is drawn first, then ceil(lifetime / dt) - 1 exact increments.
	The same (model, dt, seed) always gives the same path.
	"""
	if dt <= 0.0:
		raise DomainError(ERROR_NON_POSITIVE_STEP.format(value=dt))
	if check:
		check_resolution(model, dt)

	rng = seed_service.generator(seed)
	lifetime = float(rng.exponential(1.0 / model.killing.rate))
	while lifetime <= 0.0:
		lifetime = float(rng.exponential(1.0 / model.killing.rate))

	n_values = max(math.ceil(lifetime / dt), 1)
	increments = sample_increments(model, dt, n_values - 1, rng)
	values = np.concatenate([[0.0], np.cumsum(increments)])

	return PathSample(dt=dt, values=values, lifetime=lifetime)
