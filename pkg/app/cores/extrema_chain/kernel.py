"""Transition kernel of the alternating extrema chain."""

import numpy as np

from app.constants.error_messages import ERROR_DEGENERATE_STATE
from app.cores.errors import DegenerateStateError, DomainError
from app.cores.tables import MonotoneTable
from app.services.seeds import SeedLike, seed_service


def sample_below(table: MonotoneTable, caps: np.ndarray, uniforms: np.ndarray) -> np.ndarray:
	"""Inverse-CDF draws from table(dy) / table(cap) on [0, cap]."""
	totals = table(caps)
	if np.any(totals <= 0.0):
		bad = caps[np.argmax(totals <= 0.0)]
		raise DegenerateStateError(ERROR_DEGENERATE_STATE.format(value=float(bad)))

	return np.minimum(table.inverse(uniforms * totals), caps)


def kernel_step(Hplus: MonotoneTable, Hminus: MonotoneTable, z: float, seed: SeedLike) -> float:
	"""One chain transition from height z.

	z > 0: y in [-z, 0] with law Hminus(-dy) / Hminus(z).
	z < 0: y in [0, -z] with law Hplus(dy) / Hplus(-z).
	"""
	if z == 0.0:
		raise DomainError('The chain kernel is defined for nonzero heights only')

	uniform = np.array([seed_service.generator(seed).uniform()])
	magnitude = np.array([abs(z)])

	if z > 0.0:
		return -float(sample_below(Hminus, magnitude, uniform)[0])

	return float(sample_below(Hplus, magnitude, uniform)[0])
