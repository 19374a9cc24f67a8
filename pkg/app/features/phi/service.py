import numpy as np

from app.cores.levy_models import ladder_tables, positivity_params
from app.cores.path_sim import estimate_H
from app.cores.phi_system import reconstruction_residual, solve_phi
from app.cores.stable_forms import fit_stable_law, phi_closed
from app.cores.string_bridge import smooth_monotone
from app.cores.tables import MonotoneTable
from app.features.options import require_model
from app.schemas.config import ExperimentConfig
from app.schemas.levy import LevyModel
from app.schemas.phi import PHI_HEADER
from app.services.logger import logger_service
from app.services.results import result_service

logger = logger_service.get_logger(__name__, category='Cli')


def ladder_pair(
	model: LevyModel, x_min: float, x_max: float, n_paths: int, dt: float, seed: int, workers: int, n_mc: int = 0
) -> tuple[MonotoneTable, MonotoneTable, bool]:
	"""Closed-form H and dual where known, else the smoothed Monte-Carlo H of a symmetric model for both."""
	grid = np.geomspace(min(1e-6, x_min), 10.0 * x_max, 600)
	tables = ladder_tables(model, grid, n_mc, seed)
	if tables is not None:
		return tables

	estimate = estimate_H(model, np.geomspace(max(x_min, 10.0 * dt), 10.0 * x_max, 60), n_paths, dt, seed, workers)
	H = smooth_monotone(estimate.xs, estimate.values)
	return H, H, False


class PhiService:
	"""phi system on a log grid, with the stable closed form where it applies."""

	def run(self, config: ExperimentConfig) -> dict:
		model = require_model(config, 'phi')
		params = config.phi
		result_service.begin('phi', config)

		Hplus, Hminus, stable = ladder_pair(
			model,
			params.x_min,
			params.x_max,
			params.n_paths,
			params.dt,
			config.seed,
			config.workers,
			params.n_mc,
		)
		xs = np.geomspace(params.x_min, params.x_max, params.points)

		summary: dict = {'lams': params.lams, 'stable_closed_form': stable, 'per_lambda': []}
		curves = {}

		for lam in params.lams:
			pair = solve_phi(Hplus, Hminus, lam, xs, params.rel_tol)
			result_service.table(f'phi_{lam:g}.csv', PHI_HEADER, pair.plus.to_rows())
			curves[f'lam={lam:g}'] = pair.plus.phi.real

			entry = {'lam': lam, 'residual': reconstruction_residual(pair.plus, Hplus, Hminus)}
			if stable:
				positivity = positivity_params(model, params.n_mc, config.seed)
				law = fit_stable_law(positivity, xs, Hplus(xs), pair.plus.phi, lam)
				closed = phi_closed(law, xs, lam)
				entry.update(
					k=law.k,
					c=law.c,
					closed_form_error=float(np.max(np.abs(closed / pair.plus.phi - 1.0))),
				)
			summary['per_lambda'].append(entry)
			logger.info(f'phi at lam={lam:g}: reconstruction residual {entry["residual"]:.3g}')

		result_service.figure('phi.svg', xs, curves, 'x', 'Re phi(x, lam)', log_axes=('x',))
		result_service.report('phi.json', summary)
		return summary


phi_service = PhiService()
