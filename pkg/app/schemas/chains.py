from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, Field


@dataclass(frozen=True)
class ChainOutcome:
	"""Maximum M = Z_1 and final value F = sum Z_n of simulated chains."""

	maxima: np.ndarray
	finals: np.ndarray
	steps: np.ndarray

	@property
	def ratios(self) -> np.ndarray:
		return np.where(self.maxima > 0.0, self.finals / np.where(self.maxima > 0.0, self.maxima, 1.0), 0.0)

	def to_records(self) -> list[dict]:
		return [
			{'index': index, 'M': float(maximum), 'F': float(final), 'n_steps': int(steps)}
			for index, (maximum, final, steps) in enumerate(zip(self.maxima, self.finals, self.steps))
		]


class PhiEstimate(BaseModel):
	"""Monte-Carlo estimate of phi(x, lam) = Q(M <= x, exp(-lam F))."""

	x: float = Field(..., gt=0.0, description='Cap on the maximum.')
	lam_real: float = Field(..., description='Real part of lambda.')
	lam_imag: float = Field(default=0.0, description='Imaginary part of lambda.')
	real: float = Field(..., description='Real part of the estimate.')
	imag: float = Field(default=0.0, description='Imaginary part of the estimate.')
	standard_error: float = Field(..., ge=0.0, description='Standard error of the estimate.')
	n_chains: int = Field(..., ge=0, description='Number of chains.')

	@property
	def value(self) -> complex:
		return complex(self.real, self.imag)
