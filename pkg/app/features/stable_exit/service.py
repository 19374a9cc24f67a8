from app.cores.levy_models import positivity_params
from app.cores.stable_forms import (
	bivariate_occupation,
	exit_probability,
	exit_probability_mc,
	meander_ratio,
	occupation_mc,
)
from app.features.options import require_model
from app.schemas.config import ExperimentConfig
from app.schemas.stable import FormulaResult
from app.services.logger import logger_service
from app.services.results import result_service
from app.services.seeds import seed_service

logger = logger_service.get_logger(__name__, category='Cli')


class StableExitService:
	"""Two-sided exit, bivariate occupation and the meander ratio of a stable model."""

	def run(self, config: ExperimentConfig) -> dict:
		model = require_model(config, 'stable-exit')
		params = config.stable_exit
		result_service.begin('stable-exit', config)

		positivity = positivity_params(model, params.n_mc, config.seed)
		results: list[FormulaResult] = []

		if params.mc_paths > 0:
			results.append(exit_probability_mc(model, params.a, params.b, params.mc_paths, params.dt, config.seed))
		else:
			results.append(
				FormulaResult(
					formula='exit_probability',
					inputs={'gamma': positivity.gamma, 'delta': positivity.delta, 'a': params.a, 'b': params.b},
					value=exit_probability(positivity, params.a, params.b),
				)
			)

		if params.occupation_x is not None and params.occupation_y is not None:
			x, y = params.occupation_x, params.occupation_y
			if params.mc_paths > 0:
				seed = seed_service.sub_seed(config.seed, 1)
				results.append(occupation_mc(model, x, y, params.mc_paths, params.dt, seed))
			else:
				inputs = {'gamma': positivity.gamma, 'delta': positivity.delta, 'alpha': model.alpha, 'x': x, 'y': y}
				results.append(
					FormulaResult(
						formula='bivariate_occupation',
						inputs=inputs,
						value=bivariate_occupation(positivity, model.alpha, x, y),
					)
				)

		results.append(
			FormulaResult(
				formula='meander_ratio',
				inputs={'alpha': model.alpha, 'delta': positivity.delta},
				value=meander_ratio(model.alpha, positivity.delta),
			)
		)

		for result in results:
			logger.info(f'{result.formula}: {result.value:.6g}')

		summary = {
			'positivity': positivity.model_dump(),
			'results': [result.model_dump() for result in results],
		}
		result_service.report('stable_exit.json', summary)
		return summary


stable_exit_service = StableExitService()
