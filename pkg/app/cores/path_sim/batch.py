"""Deterministic multi-path runs over a worker pool."""

from concurrent.futures import ThreadPoolExecutor

import pydash

from app.schemas.levy import LevyModel
from app.schemas.paths import LadderChain, PathBatch, PathRecord
from app.services.logger import logger_service
from app.services.seeds import seed_service

from .fluctuations import extract_ladder_chain, fluctuation_summary
from .sampler import check_resolution, sample_path

logger = logger_service.get_logger(__name__, category='PathSim')

BATCH_HEADER = ('index', 'seed', 'm', 'M', 'F', 'rho', 'zeta')


def _simulate_one(model: LevyModel, dt: float, seed: int, index: int) -> tuple[PathRecord, LadderChain]:
	path = sample_path(model, dt, seed_service.stream(seed, index), check=False)
	summary = fluctuation_summary(path)
	chain = extract_ladder_chain(path, summary.argmin_index)

	record = PathRecord(
		index=index,
		seed=seed_service.child_seed(seed, index),
		m=summary.min,
		M=summary.max,
		F=summary.final,
		rho=summary.argmin,
		zeta=path.lifetime,
	)
	return record, chain


def simulate_batch(model: LevyModel, n_paths: int, dt: float, seed: int, workers: int = 1) -> PathBatch:
	"""Simulate n_paths independent paths.

	Replicate i always uses stream i of the master seed, and results are
	returned in replicate order, so the batch does not depend on workers.
	"""
	check_resolution(model, dt)
	logger.info(f'Simulating {n_paths} paths (alpha={model.alpha}, mu={model.killing.rate}, dt={dt}, workers={workers})')

	indices = range(n_paths)
	if workers <= 1:
		results = [_simulate_one(model, dt, seed, index) for index in indices]
	else:
		with ThreadPoolExecutor(max_workers=workers) as executor:
			results = list(executor.map(lambda index: _simulate_one(model, dt, seed, index), indices))

	records, chains = pydash.unzip(results) if results else ([], [])
	return PathBatch(records=list(records), chains=list(chains))


def batch_rows(batch: PathBatch) -> list[list]:
	"""One row per path in BATCH_HEADER order."""
	return [[getattr(record, name) for name in BATCH_HEADER] for record in batch.records]


def chain_records(batch: PathBatch) -> list[dict]:
	return [chain.to_record(index) for index, chain in enumerate(batch.chains)]
