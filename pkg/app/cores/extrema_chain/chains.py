"""Simulation of (M, F) under the post-minimum law conditioned on M <= x_cap."""

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from app.constants.numerics import EPS_CHAIN_RELATIVE, MAX_CHAIN_STEPS
from app.cores.tables import MonotoneTable
from app.schemas.chains import ChainOutcome
from app.services.logger import logger_service
from app.services.seeds import SeedLike, seed_service

from .kernel import sample_below

logger = logger_service.get_logger(__name__, category='Chain')

# Chains are simulated in blocks; block b always uses stream b of the master seed
CHAIN_BLOCK = 4_096


def _run_block(
	Hplus: MonotoneTable, Hminus: MonotoneTable, x_cap: float, size: int, rng: np.random.Generator
) -> ChainOutcome:
	caps = np.full(size, x_cap)
	maxima = sample_below(Hplus, caps, rng.uniform(size=size))
	finals = maxima.copy()
	steps = np.ones(size, dtype=int)

	thresholds = EPS_CHAIN_RELATIVE * maxima
	current = maxima.copy()
	active = maxima > 0.0
	falling = True

	while np.any(active):
		indices = np.flatnonzero(active)
		uniforms = rng.uniform(size=len(indices))
		magnitudes = np.abs(current[indices])

		if falling:
			heights = -sample_below(Hminus, magnitudes, uniforms)
		else:
			heights = sample_below(Hplus, magnitudes, uniforms)

		current[indices] = heights
		finals[indices] += heights
		steps[indices] += 1

		done = (np.abs(heights) < thresholds[indices]) | (steps[indices] >= MAX_CHAIN_STEPS) | (heights == 0.0)
		active[indices[done]] = False
		falling = not falling

	return ChainOutcome(maxima=maxima, finals=np.clip(finals, 0.0, maxima), steps=steps)


def simulate_chains(
	Hplus: MonotoneTable, Hminus: MonotoneTable, x_cap: float, n_chains: int, seed: int, workers: int = 1
) -> ChainOutcome:
	"""Simulate n_chains chains with Z_1 drawn from Hplus(dz) / Hplus(x_cap).

	Every chain alternates the kernel to truncation; M = Z_1 and F = sum Z_n,
	so 0 <= F <= M <= x_cap.
	"""
	n_blocks = math.ceil(n_chains / CHAIN_BLOCK)
	sizes = [min(CHAIN_BLOCK, n_chains - block * CHAIN_BLOCK) for block in range(n_blocks)]

	def run(block: int) -> ChainOutcome:
		return _run_block(Hplus, Hminus, x_cap, sizes[block], seed_service.stream(seed, block))

	if workers <= 1:
		outcomes = [run(block) for block in range(n_blocks)]
	else:
		with ThreadPoolExecutor(max_workers=workers) as executor:
			outcomes = list(executor.map(run, range(n_blocks)))

	logger.debug(f'Simulated {n_chains} chains capped at {x_cap} in {n_blocks} blocks')

	return ChainOutcome(
		maxima=np.concatenate([outcome.maxima for outcome in outcomes]),
		finals=np.concatenate([outcome.finals for outcome in outcomes]),
		steps=np.concatenate([outcome.steps for outcome in outcomes]),
	)


def simulate_chain(
	Hplus: MonotoneTable, Hminus: MonotoneTable, x_cap: float, seed: SeedLike
) -> tuple[float, float, int]:
	"""One chain: (M, F, n_steps)."""
	outcome = _run_block(Hplus, Hminus, x_cap, 1, seed_service.generator(seed))
	return float(outcome.maxima[0]), float(outcome.finals[0]), int(outcome.steps[0])
