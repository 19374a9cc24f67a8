"""Tests for app/features/string/service.py

Covers:
- StringService.run on the Lebesgue string
- StringService.run on the string of a bounded-variation stable H
"""

import pytest

from app.cores.errors import ConfigValidationError
from app.features.string.service import StringService
from app.schemas.config import ExperimentConfig


class TestLebesgueString:
	"""Test StringService.run with the Lebesgue source."""

	def setup_method(self):
		"""Setup test method."""
		self.service = StringService()

	def test_lebesgue_solutions(self, tmp_path):
		"""Test D(0) = 1 / lam and the Wronskian on the Lebesgue string."""
		config = ExperimentConfig(
			seed=1,
			output_dir=str(tmp_path),
			string={'source': 'lebesgue', 'length': 5.0, 'lams': [0.5, 2.0], 'step': 0.01},
		)

		summary = self.service.run(config)

		assert summary['length'] == 5.0
		for entry in summary['per_lambda']:
			assert entry['D0'] == pytest.approx(1.0 / entry['lam'], rel=1e-8)
			assert entry['wronskian_error'] < 1e-8
		assert (tmp_path / 'string_0.5.csv').exists()
		assert (tmp_path / 'string.json').exists()
		assert (tmp_path / 'string.svg').exists()


class TestModelString:
	"""Test StringService.run with the string of H."""

	def setup_method(self):
		"""Setup test method."""
		self.service = StringService()

	def test_stable_string(self, tmp_path):
		"""Test that the string of H = x^(1/4) reproduces its mass function."""
		config = ExperimentConfig(
			seed=1,
			output_dir=str(tmp_path),
			formats=['json'],
			model={'alpha': 0.5, 'killing': {'mode': 'lebesgue-proxy'}},
			string={'lams': [1.0], 'h_x_max': 50.0, 'step': 0.05},
		)

		summary = self.service.run(config)

		assert summary['closed_form_H'] is True
		assert summary['composition_residual'] < 1e-8
		assert summary['measure_residual'] < 1e-2
		assert summary['per_lambda'][0]['D0'] > 0.0

	def test_needs_model(self, tmp_path):
		"""Test that the model source needs a model."""
		config = ExperimentConfig(seed=1, output_dir=str(tmp_path))

		with pytest.raises(ConfigValidationError):
			self.service.run(config)
