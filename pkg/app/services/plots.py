"""SVG figures drawn from the same arrays that go to CSV."""

from typing import Sequence

import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from app.services.logger import logger_service  # noqa: E402
from app.services.storage import storage_service  # noqa: E402

logger = logger_service.get_logger(__name__, category='Storage')


class PlotService:
	"""Static line plots, one figure per file."""

	def write_curves(
		self,
		filename: str,
		x: np.ndarray,
		curves: dict[str, np.ndarray],
		xlabel: str,
		ylabel: str,
		log_axes: Sequence[str] = (),
	) -> str:
		"""Plot named curves against a common abscissa and save as SVG."""
		figure, axes = plt.subplots(figsize=(6.4, 4.0))

		for label, values in curves.items():
			axes.plot(x, np.real(values), label=label, linewidth=1.2)

		if 'x' in log_axes:
			axes.set_xscale('log')
		if 'y' in log_axes:
			axes.set_yscale('log')

		axes.set_xlabel(xlabel)
		axes.set_ylabel(ylabel)
		axes.grid(True, alpha=0.3)
		axes.legend()

		path = storage_service.get_path(filename)
		# No date metadata so reruns only differ in matplotlib's element ids
		figure.savefig(path, format='svg', metadata={'Date': None})
		plt.close(figure)

		logger.info(f'Wrote {path}')
		return path


plot_service = PlotService()
