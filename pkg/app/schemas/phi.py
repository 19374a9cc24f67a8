from dataclasses import dataclass

import numpy as np

PHI_HEADER = ('x', 'phi_real', 'phi_imag', 'phi_check_real', 'phi_check_imag')


@dataclass(frozen=True)
class PhiTable:
	"""phi(x, lam) = Q(M <= x, exp(-lam F)) and its dual phi_check(x, -lam) on a grid."""

	xs: np.ndarray
	lam: complex
	phi: np.ndarray
	phi_check: np.ndarray

	def to_rows(self) -> list[tuple[float, float, float, float, float]]:
		return [
			(float(x), float(value.real), float(value.imag), float(dual.real), float(dual.imag))
			for x, value, dual in zip(self.xs, self.phi, self.phi_check)
		]


@dataclass(frozen=True)
class PhiPair:
	"""Solutions for lam and -lam on the same grid."""

	plus: PhiTable
	minus: PhiTable

	@property
	def lam(self) -> complex:
		return self.plus.lam
