"""Spectral transform D(0, lam) of a string."""

from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from app.cores.krein_string.integrator import integrate_AD
from app.schemas.strings import StringMeasure
from app.services.logger import logger_service

logger = logger_service.get_logger(__name__, category='Krein')


def spectral_transform(m: StringMeasure, lams: ArrayLike, x_max: Optional[float] = None) -> np.ndarray:
	"""D(0, lam) = int_0^inf A(., lam)^-2 for each lam.

	Only the two ends of [0, x_max] are sampled, the solver still resolves the
	whole interval.
	"""
	lam_array = np.atleast_1d(np.asarray(lams, dtype=float))
	length = float(x_max if x_max is not None else max([m.length, *(location for location, _ in m.atoms)]))

	values = np.array([integrate_AD(m, lam, x_max=length, step=length).D[0] for lam in lam_array])
	logger.info(f'Spectral transform at {len(lam_array)} lam values on [0, {length:g}]')

	return values
