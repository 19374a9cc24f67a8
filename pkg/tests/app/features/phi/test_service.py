"""Tests for app/features/phi/service.py

Covers:
- PhiService.run on a stable model with the closed form
"""

import pytest

from app.features.phi.service import PhiService
from app.schemas.config import ExperimentConfig


class TestPhiService:
	"""Test PhiService.run."""

	def setup_method(self):
		"""Setup test method."""
		self.service = PhiService()

	def test_cauchy_matches_closed_form(self, tmp_path):
		"""Test that the solved phi agrees with the stable closed form."""
		config = ExperimentConfig(
			seed=1,
			output_dir=str(tmp_path),
			model={'alpha': 1.0, 'killing': {'mode': 'lebesgue-proxy'}},
			phi={'lams': [1.0], 'points': 40},
		)

		summary = self.service.run(config)
		entry = summary['per_lambda'][0]

		assert summary['stable_closed_form'] is True
		assert entry['k'] == pytest.approx(entry['c'], rel=1e-2)
		assert entry['closed_form_error'] < 1e-2
		assert entry['residual'] < 1e-2
		assert (tmp_path / 'phi_1.csv').exists()
		assert (tmp_path / 'phi.json').exists()
