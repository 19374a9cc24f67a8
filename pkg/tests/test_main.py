"""Tests for the command-line entry point."""

import json

import pytest
from click.testing import CliRunner

from app import __version__
from main import EXIT_USAGE, cli


@pytest.fixture
def runner():
	return CliRunner()


def write_config(tmp_path, document: dict) -> str:
	path = tmp_path / 'experiment.json'
	path.write_text(json.dumps(document), encoding='utf-8')
	return str(path)


def read_report(tmp_path, filename: str) -> dict:
	with open(tmp_path / filename, encoding='utf-8') as handle:
		return json.load(handle)


class TestExitStatuses:
	"""Test the mapping of errors to exit statuses."""

	def test_version(self, runner):
		"""Test --version prints the library version."""
		result = runner.invoke(cli, ['--version'])

		assert result.exit_code == 0
		assert __version__ in result.output

	def test_unknown_command(self, runner):
		"""Test that an unknown command exits with the usage status."""
		result = runner.invoke(cli, ['bogus'])

		assert result.exit_code == EXIT_USAGE

	def test_missing_seed(self, runner, tmp_path):
		"""Test that a document without seed is a validation error."""
		result = runner.invoke(cli, ['stable-exit', '--out', str(tmp_path)])

		assert result.exit_code == 2

	def test_missing_model(self, runner, tmp_path):
		"""Test that a model command without model is a validation error."""
		result = runner.invoke(cli, ['stable-exit', '--seed', '1', '--out', str(tmp_path)])

		assert result.exit_code == 2

	def test_rule4_pole(self, runner, tmp_path):
		"""Test that lam = 1 is a numerical error."""
		config = write_config(tmp_path, {'seed': 1, 'model': {'family': 'brownian'}, 'rule4': {'lam': 1.0}})

		result = runner.invoke(cli, ['rule4', '--config', config, '--out', str(tmp_path)])

		assert result.exit_code == 3


@pytest.mark.integration
class TestCommands:
	"""Test commands end to end on cheap inputs."""

	def test_stable_exit_cauchy(self, runner, tmp_path):
		"""Test the arcsine exit probability 1/3 of the Cauchy process on (-1, 3)."""
		config = write_config(tmp_path, {'seed': 1, 'model': {'alpha': 1.0}})

		result = runner.invoke(cli, ['stable-exit', '--config', config, '--out', str(tmp_path), '--format', 'json'])

		assert result.exit_code == 0
		report = read_report(tmp_path, 'stable_exit.json')
		assert report['command'] == 'stable-exit'
		exit_result = report['result']['results'][0]
		assert exit_result['formula'] == 'exit_probability'
		assert exit_result['value'] == pytest.approx(1.0 / 3.0)

	def test_entropy_lebesgue(self, runner, tmp_path):
		"""Test that both sides of the entropy formula vanish on the Lebesgue string."""
		config = write_config(tmp_path, {'seed': 1, 'entropy': {'lams': [1.0], 'length': 10.0}})

		result = runner.invoke(cli, ['entropy', '--config', config, '--out', str(tmp_path)])

		assert result.exit_code == 0
		row = read_report(tmp_path, 'entropy.json')['result']['per_lambda'][0]
		assert row['lhs'] == pytest.approx(0.0, abs=1e-10)
		assert row['rhs'] == pytest.approx(0.0, abs=1e-6)
		assert row['plateau_reached']
		assert (tmp_path / 'entropy_1.csv').exists()
