from typing import Optional

import numpy as np

from app.cores.krein_string import d_solution_deviation, integrate_AD
from app.cores.string_bridge import build_string, composition_residual, ladder_H, measure_residual
from app.features.options import require_model
from app.schemas.bridge import StringConvention, StringOfH
from app.schemas.config import ExperimentConfig, StringSource
from app.schemas.strings import AB_HEADER, StringMeasure
from app.services.logger import logger_service
from app.services.results import result_service

logger = logger_service.get_logger(__name__, category='Cli')


def model_string(
	config: ExperimentConfig,
	command: str,
	x_max: float,
	mc_budget: int,
	dt: float,
	convention: StringConvention = StringConvention.DENSITY_IN_S,
) -> tuple[StringOfH, bool]:
	"""String of the ladder H of the configured model, with the closed-form flag of H."""
	model = require_model(config, command)
	H, closed = ladder_H(model, x_max, mc_budget, dt, config.seed, config.workers)
	return build_string(H, convention), closed


class StringService:
	"""A- and D-solutions of the Lebesgue string or of the string of H."""

	def run(self, config: ExperimentConfig) -> dict:
		params = config.string
		result_service.begin('string', config)

		summary: dict = {'source': params.source.value, 'per_lambda': []}
		string: Optional[StringOfH] = None
		if params.source == StringSource.LEBESGUE:
			measure = StringMeasure.lebesgue(params.length)
		else:
			string, closed = model_string(
				config, 'string', params.h_x_max, params.mc_budget, params.dt, params.convention
			)
			measure = string.measure
			summary.update(
				convention=params.convention.value,
				closed_form_H=closed,
				composition_residual=composition_residual(string),
				measure_residual=measure_residual(string),
			)
		summary['length'] = measure.length

		curves = {}
		xs = None
		for lam in params.lams:
			solution = integrate_AD(measure, lam, step=params.step)
			result_service.table(f'string_{lam:g}.csv', AB_HEADER, solution.to_rows())

			entry = {
				'lam': lam,
				'D0': float(solution.D[0]),
				'wronskian_error': float(np.max(np.abs(solution.wronskian + 1.0))),
				'd_deviation': d_solution_deviation(measure, solution),
				'diagnostics': solution.diagnostics,
			}
			summary['per_lambda'].append(entry)
			logger.info(f'String at lam={lam:g}: D(0)={entry["D0"]:.6g}, W error {entry["wronskian_error"]:.3g}')

			if xs is None:
				xs = solution.xs
			if len(solution.xs) == len(xs):
				curves[f'log D, lam={lam:g}'] = solution.log_D

		if curves:
			result_service.figure('string.svg', xs, curves, 'x', 'log D(x, lam)')
		result_service.report('string.json', summary)
		return summary


string_service = StringService()
