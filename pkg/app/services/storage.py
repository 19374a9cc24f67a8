import csv
import hashlib
import json
import os
from typing import Iterable, Sequence, Union

from pydantic import BaseModel

from app.services.logger import logger_service
from config import RESULTS_FOLDER

logger = logger_service.get_logger(__name__, category='Storage')

CsvValue = Union[int, float, str]
JsonPayload = Union[BaseModel, dict]


class StorageService:
	"""
	Writes experiment results (CSV tables, JSON reports, JSON lines) under an output directory.
	"""

	def __init__(self):
		self.output_dir = RESULTS_FOLDER

	def init(self, output_dir: str):
		"""
		Point the service at an output directory, creating it if needed.
		"""
		self.output_dir = output_dir
		os.makedirs(self.output_dir, exist_ok=True)

		logger.info(f'Writing results to {self.output_dir}')

	def get_path(self, filename: str) -> str:
		"""Get the full path for a result file."""
		return os.path.join(self.output_dir, filename)

	def to_json_text(self, payload: JsonPayload) -> str:
		"""Canonical JSON text: sorted keys, UTF-8, trailing newline."""
		data = payload.model_dump(mode='json') if isinstance(payload, BaseModel) else payload
		return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + '\n'

	def config_hash(self, config: BaseModel) -> str:
		"""sha256 of the canonical JSON of a config.

		Examples:
			>>> len(storage_service.config_hash(config))
			64
		"""
		canonical = json.dumps(config.model_dump(mode='json'), sort_keys=True, separators=(',', ':'))
		return hashlib.sha256(canonical.encode('utf-8')).hexdigest()

	def write_csv(self, filename: str, header: Sequence[str], rows: Iterable[Sequence[CsvValue]]) -> str:
		path = self.get_path(filename)

		with open(path, 'w', encoding='utf-8', newline='') as handle:
			writer = csv.writer(handle, lineterminator='\n')
			writer.writerow(header)
			for row in rows:
				writer.writerow(row)

		logger.info(f'Wrote {path}')
		return path

	def write_json(self, filename: str, payload: JsonPayload) -> str:
		path = self.get_path(filename)

		with open(path, 'w', encoding='utf-8', newline='\n') as handle:
			handle.write(self.to_json_text(payload))

		logger.info(f'Wrote {path}')
		return path

	def write_json_lines(self, filename: str, records: Iterable[JsonPayload]) -> str:
		path = self.get_path(filename)

		with open(path, 'w', encoding='utf-8', newline='\n') as handle:
			for record in records:
				data = record.model_dump(mode='json') if isinstance(record, BaseModel) else record
				handle.write(json.dumps(data, sort_keys=True, ensure_ascii=False) + '\n')

		logger.info(f'Wrote {path}')
		return path

	def read_csv_columns(self, path: str) -> dict[str, list[float]]:
		"""Read a numeric CSV with a header row into named columns."""
		with open(path, encoding='utf-8', newline='') as handle:
			reader = csv.DictReader(handle)
			columns: dict[str, list[float]] = {name: [] for name in reader.fieldnames or []}
			for row in reader:
				for name, value in row.items():
					columns[name].append(float(value))

		return columns


storage_service = StorageService()
