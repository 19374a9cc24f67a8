from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field

from app.cores.tables import MonotoneTable
from app.schemas.strings import StringMeasure

UNBOUNDED_HEADER = ('x', 'A_tilde', 'D_tilde', 'D_tilde_prime', 't', 'residual')


class StringConvention(str, Enum):
	"""Density of the string of H in its own coordinate y = s(x).

	DENSITY_IN_S: dm/dy = H^4 / 4, so that m(s(x)) = int_0^x H^2 / 4.
	PRINTED: m(s(x)) = int_0^x H^4 / 4, i.e. dm/dy = H^6 / 4.
	"""

	DENSITY_IN_S = 'density-in-s'
	PRINTED = 'printed'


@dataclass(frozen=True)
class StringOfH:
	"""s(x) = int_0^x H^-2, its inverse, the string m in the y = s(x) coordinate and its phase."""

	H: MonotoneTable
	s: MonotoneTable
	s_inverse: MonotoneTable
	m_of_s: MonotoneTable
	measure: StringMeasure
	phase: Optional[MonotoneTable]
	convention: StringConvention

	@property
	def length(self) -> float:
		return self.measure.length


@dataclass(frozen=True)
class UnboundedTransform:
	"""A-tilde, D-tilde, its derivative and the time change t on an x-grid, with the Rule-4 residual."""

	xs: np.ndarray
	lam: float
	A_tilde: np.ndarray
	D_tilde: np.ndarray
	D_tilde_prime: np.ndarray
	t_map: MonotoneTable
	residual: np.ndarray
	diagnostics: dict = field(default_factory=dict)

	def to_rows(self) -> list[tuple[float, ...]]:
		columns = (self.xs, self.A_tilde, self.D_tilde, self.D_tilde_prime, self.t_map(self.xs), self.residual)
		return [tuple(float(value) for value in row) for row in zip(*columns)]


class LambdaRow(BaseModel):
	"""Both sides of an identity at one lam."""

	lam: float = Field(..., description='Spectral parameter.')
	lhs: float = Field(..., description='Computed side.')
	rhs: float = Field(..., description='Reference side.')
	rel_gap: float = Field(..., ge=0.0, description='|lhs - rhs| / |rhs|.')

	@classmethod
	def compare(cls, lam: float, lhs: float, rhs: float) -> 'LambdaRow':
		gap = abs(lhs - rhs) / abs(rhs) if rhs != 0.0 else abs(lhs)
		return cls(lam=lam, lhs=lhs, rhs=rhs, rel_gap=gap)


class BridgeReport(BaseModel):
	"""Per-lam comparison of a pipeline against its reference."""

	pipeline: str = Field(..., description='Pipeline name.')
	per_lambda: list[LambdaRow] = Field(default_factory=list, description='One row per lam.')
	fitted_constant: Optional[float] = Field(default=None, description='Single multiplicative constant, if fitted.')
	dispersion: Optional[float] = Field(default=None, description='Relative spread of the per-lam constants.')
	diagnostics: dict[str, float] = Field(default_factory=dict, description='Extra numbers and warning flags.')

	@property
	def max_gap(self) -> float:
		return max((row.rel_gap for row in self.per_lambda), default=0.0)
