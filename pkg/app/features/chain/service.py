import numpy as np

from app.constants.error_messages import ERROR_NO_CLOSED_FORM_H
from app.cores.errors import UnsupportedModelError
from app.cores.extrema_chain import f_over_m_test, phi_mc, simulate_chains
from app.cores.levy_models import ladder_tables, positivity_params
from app.cores.stable_forms import final_over_max_law
from app.features.options import require_model
from app.schemas.config import ExperimentConfig
from app.services.logger import logger_service
from app.services.results import result_service
from app.services.seeds import seed_service

logger = logger_service.get_logger(__name__, category='Cli')

CHAIN_HEADER = ('index', 'M', 'F', 'n_steps')


class ChainService:
	"""Chains of alternating extrema, the F / M law and phi estimates."""

	def run(self, config: ExperimentConfig) -> dict:
		model = require_model(config, 'chain')
		params = config.chain
		result_service.begin('chain', config)

		grid = np.geomspace(1e-8 * params.x_cap, 10.0 * params.x_cap, 400)
		tables = ladder_tables(model, grid, params.n_mc, config.seed)
		if tables is None:
			raise UnsupportedModelError(ERROR_NO_CLOSED_FORM_H.format(family=model.family.value))
		Hplus, Hminus, stable = tables
		outcome = simulate_chains(Hplus, Hminus, params.x_cap, params.n_chains, config.seed, config.workers)
		rows = ([record[name] for name in CHAIN_HEADER] for record in outcome.to_records())
		result_service.table('chain.csv', CHAIN_HEADER, rows)

		summary: dict = {'n_chains': params.n_chains, 'x_cap': params.x_cap, 'tests': [], 'phi': []}

		if params.test_law and stable:
			law = final_over_max_law(positivity_params(model, params.n_mc, config.seed))
			ks_report, dcor_report = f_over_m_test(outcome, law, seed_service.sub_seed(config.seed, 1))
			summary['tests'] = [ks_report.model_dump(), dcor_report.model_dump()]

		for index, lam in enumerate(params.lams):
			estimate = phi_mc(
				Hplus,
				Hminus,
				params.x_cap,
				lam,
				params.n_chains,
				seed_service.sub_seed(config.seed, 10 + index),
				config.workers,
			)
			summary['phi'].append(estimate.model_dump())

		logger.info(f'Simulated {params.n_chains} chains under x={params.x_cap}')
		result_service.report('chain.json', summary)
		return summary


chain_service = ChainService()
