from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator

AB_HEADER = ('x', 'A', 'A_prime', 'D', 'D_prime')


class StringMeasure(BaseModel):
	"""A string dm = density(x) dx + sum of point masses.

	The density is piecewise linear between its nodes and continues with its
	last value beyond the last node.
	"""

	model_config = ConfigDict(frozen=True)

	density_xs: list[float] = Field(..., min_length=2, description='Density nodes, starting at 0.')
	density_values: list[float] = Field(..., min_length=2, description='Nonnegative density values.')
	atoms: list[tuple[float, float]] = Field(default_factory=list, description='(location >= 0, mass > 0) pairs.')

	@model_validator(mode='after')
	def check_measure(self):
		xs = np.asarray(self.density_xs)
		if len(xs) != len(self.density_values):
			raise ValueError('density_xs and density_values must have the same length')
		if xs[0] != 0.0 or np.any(np.diff(xs) <= 0.0):
			raise ValueError('density_xs must start at 0 and increase strictly')
		if np.any(np.asarray(self.density_values) < 0.0):
			raise ValueError('A string density is nonnegative')
		for location, mass in self.atoms:
			if location < 0.0 or mass <= 0.0:
				raise ValueError(f'Invalid atom ({location}, {mass})')
		return self

	@classmethod
	def lebesgue(cls, length: float) -> 'StringMeasure':
		return cls(density_xs=[0.0, length], density_values=[1.0, 1.0])

	@classmethod
	def from_density(
		cls, xs: ArrayLike, values: ArrayLike, atoms: Optional[list[tuple[float, float]]] = None
	) -> 'StringMeasure':
		return cls(
			density_xs=[float(x) for x in xs],
			density_values=[float(value) for value in values],
			atoms=atoms or [],
		)

	@property
	def length(self) -> float:
		return self.density_xs[-1]

	@property
	def end_density(self) -> float:
		return self.density_values[-1]

	def density(self, x: ArrayLike) -> np.ndarray:
		return np.interp(x, self.density_xs, self.density_values)

	def mass(self, x: ArrayLike) -> np.ndarray:
		"""m(x) = int_0^x density + masses of the atoms in [0, x]."""
		x_array = np.asarray(x, dtype=float)
		xs = np.asarray(self.density_xs)
		values = np.asarray(self.density_values)

		cumulative = np.concatenate([[0.0], np.cumsum(0.5 * np.diff(xs) * (values[:-1] + values[1:]))])
		inside = np.clip(x_array, 0.0, xs[-1])
		index = np.clip(np.searchsorted(xs, inside, side='right') - 1, 0, len(xs) - 2)
		offset = inside - xs[index]
		slope = (values[index + 1] - values[index]) / (xs[index + 1] - xs[index])
		continuous = cumulative[index] + values[index] * offset + 0.5 * slope * offset**2
		continuous = continuous + values[-1] * np.maximum(x_array - xs[-1], 0.0)

		point_masses = sum((mass * (x_array >= location) for location, mass in self.atoms), np.zeros_like(x_array))
		return continuous + point_masses


@dataclass(frozen=True)
class ABSolutions:
	"""A- and D-solutions of a string at one lam.

	A is carried as log A and kappa = A'/A, D as G = A^2 int_x^inf A^-2, so that
	D = G / A and D' = (kappa G - 1) / A never overflow in the logs.
	"""

	xs: np.ndarray
	lam: float
	log_A: np.ndarray
	kappa: np.ndarray
	scaled_tail: np.ndarray
	diagnostics: dict = field(default_factory=dict)

	@property
	def A(self) -> np.ndarray:
		return np.exp(self.log_A)

	@property
	def A_prime(self) -> np.ndarray:
		return self.kappa * np.exp(self.log_A)

	@property
	def D(self) -> np.ndarray:
		return self.scaled_tail * np.exp(-self.log_A)

	@property
	def D_prime(self) -> np.ndarray:
		return (self.kappa * self.scaled_tail - 1.0) * np.exp(-self.log_A)

	@property
	def log_D(self) -> np.ndarray:
		return np.log(self.scaled_tail) - self.log_A

	@property
	def log_minus_D_prime(self) -> np.ndarray:
		return np.log(1.0 - self.kappa * self.scaled_tail) - self.log_A

	@property
	def wronskian(self) -> np.ndarray:
		return self.A * self.D_prime - self.A_prime * self.D

	def to_rows(self) -> list[tuple[float, float, float, float, float]]:
		return [tuple(float(value) for value in row) for row in zip(self.xs, self.A, self.A_prime, self.D, self.D_prime)]


class SpectralDensity(BaseModel):
	"""Density of a spectral measure: linear in log u between nodes, constant below them, u^p above them."""

	model_config = ConfigDict(frozen=True)

	us: list[float] = Field(..., min_length=2, description='Increasing positive nodes.')
	density: list[float] = Field(..., min_length=2, description='Nonnegative density values.')
	tail_exponent: float = Field(default=0.0, gt=-1.0, le=2.0, description='Exponent p of the tail u^p.')
	residual: float = Field(default=0.0, ge=0.0, description='Relative forward residual of the fit.')
	ill_posed: bool = Field(default=False, description='Whether the residual exceeded its threshold.')

	@model_validator(mode='after')
	def check_grid(self):
		us = np.asarray(self.us)
		if len(us) != len(self.density) or np.any(us <= 0.0) or np.any(np.diff(us) <= 0.0):
			raise ValueError('us must be positive, strictly increasing and match density')
		if np.any(np.asarray(self.density) < 0.0):
			raise ValueError('A spectral density is nonnegative')
		return self

	@classmethod
	def from_power(cls, coefficient: float, exponent: float, us: ArrayLike) -> 'SpectralDensity':
		us_array = np.asarray(us, dtype=float)
		return cls(us=us_array.tolist(), density=(coefficient * us_array**exponent).tolist(), tail_exponent=exponent)

	@property
	def is_positive(self) -> bool:
		return bool(np.all(np.asarray(self.density) > 0.0))

	def __call__(self, u: float) -> float:
		us = self.us
		if u <= us[0]:
			return self.density[0]
		if u >= us[-1]:
			return self.density[-1] * (u / us[-1]) ** self.tail_exponent

		return float(np.interp(np.log(u), np.log(us), self.density))


class EntropyResult(BaseModel):
	"""Both sides of the entropy formula at one lam."""

	lam: float = Field(..., gt=0.0, description='Spectral parameter.')
	lhs: float = Field(..., description='lam * (2/pi) int log density(u) / (u^2 + lam^2) du.')
	rhs: float = Field(..., description='Last value of the right-side sequence.')
	rhs_sequence: list[float] = Field(default_factory=list, description='Right side along increasing x.')
	xs: list[float] = Field(default_factory=list, description='Points of the right-side sequence.')
	plateau_reached: bool = Field(..., description='Whether the last values agree within tolerance.')

	@property
	def gap(self) -> float:
		return abs(self.lhs - self.rhs)
