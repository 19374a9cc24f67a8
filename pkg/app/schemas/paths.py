from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field

from app.cores.tables import MonotoneTable


@dataclass(frozen=True)
class PathSample:
	"""A killed path on the grid k * dt, k < ceil(lifetime / dt), with values[0] = 0."""

	dt: float
	values: np.ndarray
	lifetime: float

	@property
	def n_steps(self) -> int:
		return len(self.values)


@dataclass(frozen=True)
class FluctuationSummary:
	"""Minimum m, maximum M, final value F, argmin time rho and the running extrema."""

	min: float
	max: float
	final: float
	argmin: float
	argmin_index: int
	running_sup: np.ndarray
	running_inf: np.ndarray

	@property
	def amplitude(self) -> float:
		return self.max - self.min


@dataclass(frozen=True)
class LadderChain:
	"""Alternating extrema after the minimum: times T_0 = rho, T_1, ... and heights Z_1, Z_2, ..."""

	times: np.ndarray
	heights: np.ndarray

	@property
	def total(self) -> float:
		return float(np.sum(self.heights))

	@property
	def first(self) -> float:
		return float(self.heights[0]) if len(self.heights) else 0.0

	def to_record(self, index: int) -> dict:
		return {'index': index, 'times': self.times.tolist(), 'heights': self.heights.tolist()}


class PathRecord(BaseModel):
	"""One CSV row of a path batch."""

	index: int = Field(..., description='Replicate index.')
	seed: int = Field(..., description='Integer seed of the replicate stream.')
	m: float = Field(..., description='Minimum.')
	M: float = Field(..., description='Maximum.')
	F: float = Field(..., description='Final value.')
	rho: float = Field(..., description='Time of the minimum.')
	zeta: float = Field(..., description='Lifetime.')


@dataclass
class PathBatch:
	"""Functionals of a batch of independent paths, in replicate order."""

	records: list[PathRecord]
	chains: list[LadderChain]

	@property
	def minima(self) -> np.ndarray:
		return np.array([record.m for record in self.records])

	@property
	def maxima(self) -> np.ndarray:
		return np.array([record.M for record in self.records])

	@property
	def finals(self) -> np.ndarray:
		return np.array([record.F for record in self.records])

	@property
	def first_heights(self) -> np.ndarray:
		return np.array([chain.first for chain in self.chains])


@dataclass
class HEstimate:
	"""Empirical H on a grid with pointwise standard errors.

	In the second case values are normalized by their value at the reference
	node, since H is then defined up to a multiplicative constant.
	"""

	xs: np.ndarray
	values: np.ndarray
	standard_errors: np.ndarray
	n_paths: int
	reference_x: Optional[float] = None
	diagnostics: dict = field(default_factory=dict)

	@property
	def table(self) -> MonotoneTable:
		return MonotoneTable.from_points(self.xs, self.values)
