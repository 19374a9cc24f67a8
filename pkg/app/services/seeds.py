"""Deterministic random streams for reproducible Monte-Carlo runs."""

from typing import Union

import numpy as np

from app.services.logger import logger_service

logger = logger_service.get_logger(__name__, category='Seeds')

SeedLike = Union[int, np.random.Generator]


class SeedService:
	"""Derives independent generators from a master seed.

	Stream ``index`` of master ``seed`` is always the same generator, whatever
	the number of workers or the order in which streams are consumed.
	"""

	def generator(self, seed: SeedLike) -> np.random.Generator:
		"""Return a generator for a seed, passing generators through unchanged."""
		if isinstance(seed, np.random.Generator):
			return seed

		return np.random.default_rng(seed)

	def stream_seed(self, seed: int, index: int) -> np.random.SeedSequence:
		"""Seed sequence of replicate ``index`` under master ``seed``.

		Examples:
			>>> seed_service.stream_seed(7, 3).spawn_key
			(3,)
		"""
		return np.random.SeedSequence(seed, spawn_key=(index,))

	def stream(self, seed: int, index: int) -> np.random.Generator:
		"""Generator of replicate ``index`` under master ``seed``."""
		return np.random.default_rng(self.stream_seed(seed, index))

	def child_seed(self, seed: int, index: int) -> int:
		"""Integer seed of replicate ``index``, as written to result files."""
		return int(self.stream_seed(seed, index).generate_state(1, dtype=np.uint32)[0])

	def sub_seed(self, seed: SeedLike, index: int) -> int:
		"""Integer seed for a pipeline stage, accepting a generator or an int."""
		if isinstance(seed, np.random.Generator):
			return int(seed.integers(0, 2**32 - 1))

		logger.debug(f'Deriving stage seed {index} from master seed {seed}')
		return self.child_seed(seed, index)


seed_service = SeedService()
