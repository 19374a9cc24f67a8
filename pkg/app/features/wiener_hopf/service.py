from app.cores.string_bridge import string_x_max, verify_wiener_hopf
from app.features.options import require_model
from app.features.string.service import model_string
from app.schemas.config import ExperimentConfig
from app.services.logger import logger_service
from app.services.results import result_service
from app.services.seeds import seed_service

logger = logger_service.get_logger(__name__, category='Cli')

WIENER_HOPF_HEADER = ('lam', 'mc_mean', 'formula', 'rel_gap')


class WienerHopfService:
	"""Monte-Carlo E exp(-lam (F - m)) against the Wiener-Hopf log formula."""

	def run(self, config: ExperimentConfig) -> dict:
		model = require_model(config, 'wiener-hopf')
		params = config.wiener_hopf
		result_service.begin('wiener-hopf', config)

		string = None
		if params.entropy_route:
			x_max = string_x_max(params.lams)
			string, _ = model_string(config, 'wiener-hopf', x_max, params.mc_budget, params.dt)

		report = verify_wiener_hopf(
			model,
			params.lams,
			params.n_paths,
			params.dt,
			seed_service.sub_seed(config.seed, 1),
			config.workers,
			string=string,
		)
		rows = [(row.lam, row.lhs, row.rhs, row.rel_gap) for row in report.per_lambda]
		result_service.table('wiener_hopf.csv', WIENER_HOPF_HEADER, rows)
		result_service.report('wiener_hopf.json', report.model_dump())

		logger.info(f'Wiener-Hopf: largest relative gap {report.max_gap:.3g}')
		return report.model_dump()


wiener_hopf_service = WienerHopfService()
