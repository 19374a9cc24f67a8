"""The A-solution of the string of H, read off the phi pair."""

from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from app.cores.errors import DomainError
from app.cores.tables import MonotoneTable
from app.schemas.phi import PhiPair, PhiTable

# phi(x, +-lam) ~ H(x) at 0, so the bracket tends to 2 H(x)
A_NORMALIZATION = 2.0


def _interpolate(table: PhiTable, x: np.ndarray, values: np.ndarray) -> np.ndarray:
	log_xs = np.log(table.xs)
	log_x = np.log(x)
	return np.interp(log_x, log_xs, values.real) + 1j * np.interp(log_x, log_xs, values.imag)


def a_from_phi(pair: PhiPair, Hplus: MonotoneTable, x: ArrayLike, lam: Optional[complex] = None) -> np.ndarray:
	"""A(s(x), lam) = (exp(lam x / 2) phi(x, lam) + exp(-lam x / 2) phi(x, -lam)) / (2 H(x)).

	Divided by the x -> 0 limit 2 of the bracket over H so that A(0) = 1.
	Values between solved nodes are interpolated in log x.
	"""
	x_array = np.atleast_1d(np.asarray(x, dtype=float))
	if lam is not None and complex(lam) != pair.lam:
		raise DomainError(f'The phi pair was solved for lam={pair.lam}, not {lam}')
	lam = pair.lam

	h_values = Hplus(x_array)
	if np.any(h_values <= 0.0):
		raise DomainError('A is undefined where H vanishes')

	phi_plus = _interpolate(pair.plus, x_array, pair.plus.phi)
	phi_minus = _interpolate(pair.minus, x_array, pair.minus.phi)
	bracket = np.exp(lam * x_array / 2.0) * phi_plus + np.exp(-lam * x_array / 2.0) * phi_minus

	values = bracket / (A_NORMALIZATION * h_values)
	if np.all(np.abs(values.imag) <= 1e-14 * np.maximum(np.abs(values.real), 1.0)):
		return values.real

	return values
