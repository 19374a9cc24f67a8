"""Tests for the experiment configuration document."""

import pytest
from pydantic import ValidationError

from app.schemas.config import ExperimentConfig, OutputFormat, StringSource
from app.schemas.levy import Family, LevyModel
from config import DEFAULT_WORKERS, RESULTS_FOLDER


class TestExperimentConfig:
	"""Test validation of the experiment document."""

	def test_seed_is_required(self):
		"""Test that there is no default seed."""
		with pytest.raises(ValidationError):
			ExperimentConfig()

	def test_defaults(self):
		"""Test the defaults of the top-level fields."""
		config = ExperimentConfig(seed=7)

		assert config.model is None
		assert config.output_dir == RESULTS_FOLDER
		assert config.workers == DEFAULT_WORKERS
		assert config.writes(OutputFormat.SVG)
		assert config.entropy.source == StringSource.LEBESGUE

	def test_extra_keys_forbidden(self):
		"""Test that unknown keys are rejected at both levels."""
		with pytest.raises(ValidationError):
			ExperimentConfig(seed=1, unknown=True)
		with pytest.raises(ValidationError):
			ExperimentConfig(seed=1, phi={'points': 10, 'bogus': 1})

	def test_formats_deduplicated(self):
		"""Test that repeated formats collapse in order."""
		config = ExperimentConfig(seed=1, formats=['json', 'csv', 'json'])

		assert config.formats == [OutputFormat.JSON, OutputFormat.CSV]
		assert not config.writes(OutputFormat.SVG)

	def test_section_bounds(self):
		"""Test field bounds of a section."""
		with pytest.raises(ValidationError):
			ExperimentConfig(seed=1, rule4={'lam': -1.0})

	def test_chain_positivity_draws(self):
		"""Test that the chain and exit sections keep separate draw counts."""
		config = ExperimentConfig(seed=1, chain={'n_mc': 500})

		assert config.chain.n_mc == 500
		assert config.stable_exit.n_mc == 0
		with pytest.raises(ValidationError):
			ExperimentConfig(seed=1, chain={'n_mc': -1})

	def test_spectral_grid_spans_decades(self):
		"""Test that the default lam grid satisfies the inversion preconditions."""
		lams = ExperimentConfig(seed=1).spectral.lams

		assert len(lams) >= 8
		assert max(lams) / min(lams) >= 10**1.5


class TestLevyModel:
	"""Test the process descriptor."""

	def test_brownian_forces_alpha_two(self):
		"""Test that Brownian motion is the symmetric alpha = 2 member."""
		model = LevyModel(family='brownian', alpha=1.0, skew=0.5)

		assert model.family == Family.BROWNIAN
		assert model.alpha == 2.0
		assert model.is_symmetric

	def test_custom_needs_table(self):
		"""Test that a custom exponent needs matching nodes and values."""
		with pytest.raises(ValidationError):
			LevyModel(family='custom')
		with pytest.raises(ValidationError):
			LevyModel(family='custom', psi_us=[1.0, 2.0], psi_values=[1.0])

	def test_custom_rejects_skew(self):
		"""Test that a custom exponent is symmetric."""
		with pytest.raises(ValidationError):
			LevyModel(family='custom', psi_us=[1.0, 2.0], psi_values=[1.0, 2.0], skew=0.5)

	def test_alpha_range(self):
		"""Test that alpha lies in (0, 2]."""
		with pytest.raises(ValidationError):
			LevyModel(alpha=2.5)
