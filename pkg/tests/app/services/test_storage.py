"""Tests for the storage service."""

import json

from pydantic import BaseModel

from app.services.storage import StorageService, storage_service


class Report(BaseModel):
	name: str
	value: float


class TestStorageService:
	"""Test the StorageService class."""

	def test_storage_service_singleton(self):
		"""Test that storage_service is a singleton instance."""
		assert isinstance(storage_service, StorageService)

	def test_init_creates_directory(self, tmp_path):
		"""Test that init() creates the output directory."""
		service = StorageService()
		target = tmp_path / 'results' / 'run'

		service.init(str(target))

		assert target.is_dir()
		assert service.get_path('a.csv') == str(target / 'a.csv')

	def test_write_csv_round_trip(self, tmp_path):
		"""Test that a written table reads back into named columns."""
		service = StorageService()
		service.init(str(tmp_path))

		path = service.write_csv('table.csv', ('x', 'y'), [(0.5, 1.0), (1.5, 2.0)])
		columns = service.read_csv_columns(path)

		assert columns == {'x': [0.5, 1.5], 'y': [1.0, 2.0]}
		with open(path, encoding='utf-8') as handle:
			assert handle.read().startswith('x,y\n')

	def test_write_json_is_canonical(self, tmp_path):
		"""Test that JSON output has sorted keys and a trailing newline."""
		service = StorageService()
		service.init(str(tmp_path))

		path = service.write_json('report.json', {'b': 1, 'a': 2})

		with open(path, encoding='utf-8') as handle:
			text = handle.read()
		assert text.endswith('\n')
		assert text.index('"a"') < text.index('"b"')

	def test_write_json_accepts_models(self, tmp_path):
		"""Test that pydantic payloads are dumped."""
		service = StorageService()
		service.init(str(tmp_path))

		path = service.write_json('report.json', Report(name='exit', value=0.25))

		with open(path, encoding='utf-8') as handle:
			assert json.load(handle) == {'name': 'exit', 'value': 0.25}

	def test_write_json_lines(self, tmp_path):
		"""Test that each record goes on its own line."""
		service = StorageService()
		service.init(str(tmp_path))

		path = service.write_json_lines('records.jsonl', [{'i': 0}, Report(name='a', value=1.0)])

		with open(path, encoding='utf-8') as handle:
			lines = handle.read().splitlines()
		assert [json.loads(line) for line in lines] == [{'i': 0}, {'name': 'a', 'value': 1.0}]

	def test_config_hash_is_stable(self):
		"""Test that equal configs hash equally and differ otherwise."""
		first = storage_service.config_hash(Report(name='a', value=1.0))

		assert first == storage_service.config_hash(Report(name='a', value=1.0))
		assert first != storage_service.config_hash(Report(name='a', value=2.0))
		assert len(first) == 64
