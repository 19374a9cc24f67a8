"""Tests for the result service."""

import json

import numpy as np
import pytest

from app import __version__
from app.schemas.config import ExperimentConfig
from app.services.results import ResultService
from app.services.storage import storage_service


@pytest.fixture
def service(tmp_path):
	result_service = ResultService()
	result_service.begin('stable-exit', ExperimentConfig(seed=1, output_dir=str(tmp_path)))
	return result_service


class TestResultService:
	"""Test the envelope and format filtering."""

	def test_report_is_wrapped(self, service, tmp_path):
		"""Test that reports carry the command, config hash and version."""
		path = service.report('out.json', {'value': 0.25})

		with open(path, encoding='utf-8') as handle:
			data = json.load(handle)
		assert data['command'] == 'stable-exit'
		assert data['version'] == __version__
		assert data['result'] == {'value': 0.25}
		assert data['config_hash'] == storage_service.config_hash(service.config)
		assert path == str(tmp_path / 'out.json')

	def test_written_files_are_tracked(self, service):
		"""Test that every written file is recorded."""
		service.table('t.csv', ('x',), [(1.0,)])
		service.lines('l.jsonl', [{'a': 1}])
		service.figure('f.svg', np.arange(3.0), {'y': np.arange(3.0)}, 'x', 'y')

		assert [path.rsplit('/', 1)[-1] for path in service.written] == ['t.csv', 'l.jsonl', 'f.svg']

	def test_formats_filter_outputs(self, tmp_path):
		"""Test that disabled formats are skipped."""
		service = ResultService()
		service.begin('phi', ExperimentConfig(seed=1, output_dir=str(tmp_path), formats=['csv']))

		assert service.report('out.json', {'a': 1}) is None
		assert service.figure('f.svg', np.arange(2.0), {'y': np.arange(2.0)}, 'x', 'y') is None
		assert service.table('t.csv', ('x',), [(1.0,)]) is not None
		assert not (tmp_path / 'out.json').exists()

	def test_begin_resets_written(self, service, tmp_path):
		"""Test that a new run starts with an empty file list."""
		service.table('t.csv', ('x',), [(1.0,)])
		service.begin('chain', ExperimentConfig(seed=2, output_dir=str(tmp_path)))

		assert service.written == []
		assert service.command == 'chain'
