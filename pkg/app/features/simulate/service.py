import numpy as np

from app.constants.error_messages import ERROR_NOT_FIRST_CASE
from app.cores.errors import PreconditionError
from app.cores.levy_models import positivity_params
from app.cores.path_sim import (
	BATCH_HEADER,
	batch_rows,
	chain_records,
	estimate_H,
	factorization_from_batch,
	kernel_uniformity_test,
	ratio_power_test,
	ratio_test_window,
	simulate_batch,
)
from app.features.options import require_model
from app.schemas.config import ExperimentConfig
from app.schemas.levy import Family
from app.services.logger import logger_service
from app.services.results import result_service
from app.services.seeds import seed_service

logger = logger_service.get_logger(__name__, category='Cli')


class SimulateService:
	"""Path batch, empirical H and the raw-path tests."""

	def run(self, config: ExperimentConfig) -> dict:
		model = require_model(config, 'simulate')
		params = config.simulate
		result_service.begin('simulate', config)

		batch = simulate_batch(model, params.n_paths, params.dt, config.seed, config.workers)
		result_service.table('simulate_paths.csv', BATCH_HEADER, batch_rows(batch))
		result_service.lines('simulate_chains.jsonl', chain_records(batch))

		chain_errors = np.array(
			[abs(chain.total - (record.F - record.m)) for record, chain in zip(batch.records, batch.chains)]
		)
		summary: dict = {
			'n_paths': params.n_paths,
			'dt': params.dt,
			'max_chain_sum_error': float(chain_errors.max()) if len(chain_errors) else 0.0,
			'tests': [],
		}

		if params.estimate_h:
			estimate = estimate_H(
				model, params.h_grid, params.n_paths, params.dt, seed_service.sub_seed(config.seed, 1), config.workers
			)
			rows = zip(estimate.xs, estimate.values, estimate.standard_errors)
			result_service.table('simulate_H.csv', ('x', 'H', 'se'), rows)
			result_service.figure('simulate_H.svg', estimate.xs, {'H': estimate.values}, 'x', 'H(x)')
			summary['H'] = {'xs': estimate.xs.tolist(), 'values': estimate.values.tolist()}

		if params.factorization_x is not None:
			if not model.is_first_case:
				raise PreconditionError(ERROR_NOT_FIRST_CASE)
			summary['tests'].append(factorization_from_batch(batch, params.factorization_x, params.n_bins).model_dump())

		if params.uniformity:
			report = kernel_uniformity_test(
				model, params.n_paths, params.dt, seed_service.sub_seed(config.seed, 2), workers=config.workers
			)
			summary['tests'].append(report.model_dump())

		# The kernel ratio law needs a power-law H, which killed paths only have below the killing scale
		if model.family == Family.STABLE and model.is_symmetric and not model.is_first_case:
			min_height, max_height = ratio_test_window(model, params.dt)
			if min_height < max_height:
				delta = positivity_params(model).delta
				report = ratio_power_test(batch.chains, delta, min_height, max_height)
				summary['tests'].append(report.model_dump())
			else:
				logger.warning(f'dt={params.dt:g} leaves no first heights in the ratio test window, skipping it')

		logger.info(f'Simulated {params.n_paths} paths, max chain sum error {summary["max_chain_sum_error"]:.3g}')
		result_service.report('simulate.json', summary)
		return summary


simulate_service = SimulateService()
