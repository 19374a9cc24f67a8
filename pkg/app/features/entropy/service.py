from typing import Optional

from app.constants.error_messages import ERROR_NO_PLATEAU
from app.cores.errors import NonConvergenceError
from app.cores.krein_string import entropy_formula
from app.cores.string_bridge import exponent_density, string_x_max
from app.cores.tables import MonotoneTable
from app.features.options import require_model
from app.features.string.service import model_string
from app.schemas.config import ExperimentConfig, StringSource
from app.schemas.strings import SpectralDensity, StringMeasure
from app.services.logger import logger_service
from app.services.results import result_service

logger = logger_service.get_logger(__name__, category='Cli')

ENTROPY_HEADER = ('x', 'rhs')
LEBESGUE_DENSITY = SpectralDensity(us=[1e-3, 1e3], density=[1.0, 1.0])


class EntropyService:
	"""Both sides of the entropy formula on the Lebesgue string or on the string of H."""

	def run(self, config: ExperimentConfig) -> dict:
		params = config.entropy
		result_service.begin('entropy', config)

		phase: Optional[MonotoneTable] = None
		if params.source == StringSource.LEBESGUE:
			measure = StringMeasure.lebesgue(params.length)
			density = LEBESGUE_DENSITY
		else:
			model = require_model(config, 'entropy')
			string, _ = model_string(config, 'entropy', string_x_max(params.lams), params.mc_budget, params.dt)
			measure, phase = string.measure, string.phase
			density = exponent_density(model)

		results = []
		for lam in params.lams:
			result = entropy_formula(measure, phase, density, lam, step=params.step, tolerance=params.tolerance)
			result_service.table(f'entropy_{result.lam:g}.csv', ENTROPY_HEADER, zip(result.xs, result.rhs_sequence))
			results.append(result)

		summary = {
			'source': params.source.value,
			'per_lambda': [
				{**result.model_dump(include={'lam', 'lhs', 'rhs', 'plateau_reached'}), 'gap': result.gap}
				for result in results
			],
		}
		logger.info(f'Entropy formula on the {params.source.value} string at {len(results)} lam values')
		result_service.report('entropy.json', summary)

		if not all(result.plateau_reached for result in results):
			raise NonConvergenceError(ERROR_NO_PLATEAU)
		return summary


entropy_service = EntropyService()
