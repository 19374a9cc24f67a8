"""Tests for app/features/spectral/service.py

Covers:
- SpectralService.run writes the comparison and raises on an ill-posed fit
"""

from unittest.mock import MagicMock, patch

import numpy as np
import pytest

from app.cores.errors import IllPosedFitError
from app.features.spectral.service import SpectralService
from app.schemas.bridge import BridgeReport, LambdaRow, StringConvention
from app.schemas.config import ExperimentConfig
from app.schemas.strings import SpectralDensity

LAMS = [0.1, 0.2, 0.4, 0.8, 1.6, 3.2, 6.4, 12.8]


@pytest.fixture
def identity():
	values = 1.0 / np.asarray(LAMS)
	report = BridgeReport(
		pipeline='spectral-identity',
		per_lambda=[LambdaRow.compare(lam, value, value) for lam, value in zip(LAMS, values)],
		fitted_constant=1.0,
		dispersion=0.0,
	)
	string = MagicMock(convention=StringConvention.DENSITY_IN_S)
	return report, string, values


class TestSpectralService:
	"""Test SpectralService.run around a mocked identification."""

	def setup_method(self):
		"""Setup test method."""
		self.service = SpectralService()

	def test_writes_comparison(self, tmp_path, identity):
		"""Test that the per-lam table and report are written."""
		config = ExperimentConfig(seed=1, output_dir=str(tmp_path), model={'alpha': 0.5}, spectral={'lams': LAMS})

		with patch('app.features.spectral.service.verify_spectral_identity', return_value=identity):
			summary = self.service.run(config)

		assert summary['report']['fitted_constant'] == 1.0
		assert summary['convention'] == 'density-in-s'
		assert (tmp_path / 'spectral.csv').exists()
		assert not (tmp_path / 'spectral_density.csv').exists()

	def test_ill_posed_fit_raises_after_report(self, tmp_path, identity):
		"""Test IllPosedFitError once the report is on disk."""
		config = ExperimentConfig(
			seed=1, output_dir=str(tmp_path), model={'alpha': 0.5}, spectral={'lams': LAMS, 'fit': True}
		)
		density = SpectralDensity(us=[0.1, 1.0], density=[1.0, 1.0], residual=0.5, ill_posed=True)

		with (
			patch('app.features.spectral.service.verify_spectral_identity', return_value=identity),
			patch('app.features.spectral.service.fit_spectral_density', return_value=density),
		):
			with pytest.raises(IllPosedFitError):
				self.service.run(config)

		assert (tmp_path / 'spectral.json').exists()
		assert (tmp_path / 'spectral_density.csv').exists()
