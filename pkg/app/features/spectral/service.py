import numpy as np

from app.constants.error_messages import ERROR_ILL_POSED_FIT
from app.constants.numerics import FIT_RESIDUAL_THRESHOLD
from app.cores.errors import IllPosedFitError
from app.cores.krein_string import fit_spectral_density
from app.cores.string_bridge import verify_spectral_identity
from app.features.options import require_model
from app.schemas.config import ExperimentConfig
from app.services.logger import logger_service
from app.services.results import result_service

logger = logger_service.get_logger(__name__, category='Cli')

SPECTRAL_HEADER = ('lam', 'D0', 'scaled_target', 'rel_gap')
DENSITY_HEADER = ('u', 'density')


class SpectralService:
	"""D(0, lam) of the string of H against the Stieltjes transform of the exponent."""

	def run(self, config: ExperimentConfig) -> dict:
		model = require_model(config, 'spectral')
		params = config.spectral
		result_service.begin('spectral', config)

		report, string, values = verify_spectral_identity(
			model,
			params.lams,
			params.mc_budget,
			config.seed,
			dt=params.dt,
			workers=config.workers,
			convention=params.convention,
		)
		rows = [(row.lam, row.lhs, row.rhs, row.rel_gap) for row in report.per_lambda]
		result_service.table('spectral.csv', SPECTRAL_HEADER, rows)

		lams = np.asarray(params.lams, dtype=float)
		curves = {'D(0, lam)': values, 'c * target': np.array([row.rhs for row in report.per_lambda])}
		result_service.figure('spectral.svg', lams, curves, 'lam', 'D(0, lam)', log_axes=('x', 'y'))

		summary: dict = {'report': report.model_dump(), 'convention': string.convention.value}
		density = None
		if params.fit:
			density = fit_spectral_density(lams, values, ridge=params.ridge)
			result_service.table('spectral_density.csv', DENSITY_HEADER, zip(density.us, density.density))
			summary['density'] = density.model_dump()

		result_service.report('spectral.json', summary)

		if density is not None and density.ill_posed:
			message = ERROR_ILL_POSED_FIT.format(residual=density.residual, threshold=FIT_RESIDUAL_THRESHOLD)
			raise IllPosedFitError(message)
		return summary


spectral_service = SpectralService()
