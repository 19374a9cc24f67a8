"""Result files of one command run, filtered by the configured formats."""

from typing import Iterable, Optional, Sequence

import numpy as np
from pydantic import BaseModel

from app import __version__
from app.schemas.config import ExperimentConfig, OutputFormat
from app.services.logger import logger_service
from app.services.plots import plot_service
from app.services.storage import CsvValue, JsonPayload, storage_service

logger = logger_service.get_logger(__name__, category='Storage')


class ResultService:
	"""Writes the CSV tables, JSON reports and SVG figures of a run.

	Every JSON report is wrapped with the command name, the config hash and
	the library version.
	"""

	def __init__(self):
		self.config: Optional[ExperimentConfig] = None
		self.command = ''
		self.written: list[str] = []

	def begin(self, command: str, config: ExperimentConfig) -> None:
		self.config = config
		self.command = command
		self.written = []
		storage_service.init(config.output_dir)
		logger.info(f'Running {command} (seed={config.seed}, workers={config.workers})')

	def _writes(self, output_format: OutputFormat) -> bool:
		return self.config is None or self.config.writes(output_format)

	def envelope(self, payload: JsonPayload) -> dict:
		data = payload.model_dump(mode='json') if isinstance(payload, BaseModel) else payload
		return {
			'command': self.command,
			'config_hash': storage_service.config_hash(self.config) if self.config is not None else None,
			'version': __version__,
			'result': data,
		}

	def table(self, filename: str, header: Sequence[str], rows: Iterable[Sequence[CsvValue]]) -> Optional[str]:
		if not self._writes(OutputFormat.CSV):
			return None
		path = storage_service.write_csv(filename, header, rows)
		self.written.append(path)
		return path

	def report(self, filename: str, payload: JsonPayload) -> Optional[str]:
		if not self._writes(OutputFormat.JSON):
			return None
		path = storage_service.write_json(filename, self.envelope(payload))
		self.written.append(path)
		return path

	def lines(self, filename: str, records: Iterable[JsonPayload]) -> Optional[str]:
		if not self._writes(OutputFormat.JSON):
			return None
		path = storage_service.write_json_lines(filename, records)
		self.written.append(path)
		return path

	def figure(
		self,
		filename: str,
		x: np.ndarray,
		curves: dict[str, np.ndarray],
		xlabel: str,
		ylabel: str,
		log_axes: Sequence[str] = (),
	) -> Optional[str]:
		if not self._writes(OutputFormat.SVG):
			return None
		path = plot_service.write_curves(filename, x, curves, xlabel, ylabel, log_axes)
		self.written.append(path)
		return path


result_service = ResultService()
