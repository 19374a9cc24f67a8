from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class Family(str, Enum):
	"""Process family."""

	STABLE = 'stable'
	BROWNIAN = 'brownian'
	CUSTOM = 'custom'


class KillingMode(str, Enum):
	"""First case: exponential killing. Second case: Lebesgue measure, approached by mu -> 0."""

	EXPONENTIAL = 'exponential'
	LEBESGUE_PROXY = 'lebesgue-proxy'


class Killing(BaseModel):
	"""How the path is killed. For the Lebesgue proxy, rate is the first rate of the mu -> 0 schedule."""

	model_config = ConfigDict(frozen=True)

	mode: KillingMode = Field(default=KillingMode.EXPONENTIAL, description='Killing mode.')
	rate: float = Field(default=1.0, gt=0.0, description='Exponential killing rate mu.')


class LevyModel(BaseModel):
	"""A symmetric stable, Brownian or tabulated-exponent Levy process with its killing.

	Convention: the standard symmetric stable process has psi(u) = |u|**alpha,
	Brownian motion is its alpha = 2 member with psi(u) = u**2.
	"""

	model_config = ConfigDict(frozen=True)

	family: Family = Field(default=Family.STABLE, description='Process family.')
	alpha: float = Field(default=2.0, gt=0.0, le=2.0, description='Stability index.')
	skew: float = Field(default=0.0, ge=-1.0, le=1.0, description='Stable skewness beta.')
	killing: Killing = Field(default_factory=Killing, description='Killing mode and rate.')
	psi_us: Optional[list[float]] = Field(default=None, description='Custom exponent nodes u > 0.')
	psi_values: Optional[list[float]] = Field(default=None, description='Custom exponent values psi(u) >= 0.')

	@model_validator(mode='before')
	@classmethod
	def brownian_is_alpha_two(cls, data):
		if isinstance(data, dict) and data.get('family') in (Family.BROWNIAN, Family.BROWNIAN.value):
			return {**data, 'alpha': 2.0, 'skew': 0.0}
		return data

	@model_validator(mode='after')
	def check_custom_table(self):
		if self.family != Family.CUSTOM:
			return self

		if self.psi_us is None or self.psi_values is None:
			raise ValueError('A custom model needs psi_us and psi_values')
		if len(self.psi_us) != len(self.psi_values) or len(self.psi_us) < 2:
			raise ValueError('psi_us and psi_values must have the same length (at least 2)')

		us = np.asarray(self.psi_us)
		if np.any(us <= 0.0) or np.any(np.diff(us) <= 0.0):
			raise ValueError('psi_us must be positive and strictly increasing')
		if np.any(np.asarray(self.psi_values) < 0.0):
			raise ValueError('psi_values must be nonnegative')
		if self.skew != 0.0:
			raise ValueError('A custom exponent is even; skew must be 0')

		return self

	@property
	def is_symmetric(self) -> bool:
		return self.skew == 0.0

	@property
	def is_first_case(self) -> bool:
		return self.killing.mode == KillingMode.EXPONENTIAL


class PositivityParams(BaseModel):
	"""gamma = alpha P(X_1 > 0), delta = alpha P(X_1 < 0)."""

	model_config = ConfigDict(frozen=True)

	gamma: float = Field(..., gt=0.0, le=2.0, description='alpha * P(X_1 > 0).')
	delta: float = Field(..., gt=0.0, le=2.0, description='alpha * P(X_1 < 0).')
	standard_error: float = Field(default=0.0, ge=0.0, description='Monte-Carlo standard error of gamma.')

	@property
	def alpha(self) -> float:
		return self.gamma + self.delta
