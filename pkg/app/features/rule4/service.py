import numpy as np

from app.cores.levy_models import closed_form_H
from app.cores.path_sim import estimate_H
from app.cores.string_bridge import smooth_monotone, unbounded_transform
from app.features.options import require_model
from app.schemas.bridge import UNBOUNDED_HEADER
from app.schemas.config import ExperimentConfig
from app.services.logger import logger_service
from app.services.results import result_service

logger = logger_service.get_logger(__name__, category='Cli')


class Rule4Service:
	"""Transform of an unbounded-variation H and the residual of the Rule-4 identity."""

	def run(self, config: ExperimentConfig) -> dict:
		model = require_model(config, 'rule4')
		params = config.rule4
		result_service.begin('rule4', config)

		H = None
		if params.closed_form:
			H = closed_form_H(model, np.geomspace(1e-8, 10.0 * params.x_max, 1_000))
		if H is None:
			logger.info(f'Estimating H from {params.n_paths} paths')
			grid = np.geomspace(max(params.x_min, 10.0 * params.dt), 10.0 * params.x_max, 60)
			estimate = estimate_H(model, grid, params.n_paths, params.dt, config.seed, config.workers)
			H = smooth_monotone(estimate.xs, estimate.values)

		xs = np.geomspace(params.x_min, params.x_max, params.points)
		transform = unbounded_transform(model, H, params.lam, xs)
		result_service.table('rule4.csv', UNBOUNDED_HEADER, transform.to_rows())
		result_service.figure(
			'rule4.svg', xs, {'residual': transform.residual}, 'x', 'relative residual', log_axes=('x', 'y')
		)

		summary = {'lam': transform.lam, 'closed_form_H': params.closed_form, 'diagnostics': transform.diagnostics}
		result_service.report('rule4.json', summary)
		return summary


rule4_service = Rule4Service()
