"""Options shared by every command and the loading of the experiment document."""

import json
from typing import Callable, Optional

import click

from app.constants.error_messages import ERROR_MISSING_MODEL
from app.cores.errors import ConfigValidationError
from app.schemas.config import ExperimentConfig
from app.schemas.levy import LevyModel
from app.services.logger import logger_service
from config import CONFIG_ENV_VAR

logger = logger_service.get_logger(__name__, category='Cli')


def experiment_options(command: Callable) -> Callable:
	"""--config plus the flags overriding fields of the document."""
	options = [
		click.option(
			'--config',
			'config_path',
			type=click.Path(exists=True, dir_okay=False),
			envvar=CONFIG_ENV_VAR,
			help='Experiment JSON document.',
		),
		click.option('--seed', type=int, default=None, help='Master seed.'),
		click.option('--out', 'output_dir', type=click.Path(file_okay=False), default=None, help='Output directory.'),
		click.option('--workers', type=int, default=None, help='Worker threads.'),
		click.option('--format', 'formats', type=str, default=None, help='Comma-separated subset of csv,json,svg.'),
	]
	for option in reversed(options):
		command = option(command)
	return command


def load_config(
	config_path: Optional[str] = None,
	seed: Optional[int] = None,
	output_dir: Optional[str] = None,
	workers: Optional[int] = None,
	formats: Optional[str] = None,
) -> ExperimentConfig:
	"""Read the document and apply the flag overrides; pydantic validates the result."""
	data: dict = {}
	if config_path:
		with open(config_path, encoding='utf-8') as handle:
			data = json.load(handle)

	overrides = {'seed': seed, 'output_dir': output_dir, 'workers': workers}
	data.update({key: value for key, value in overrides.items() if value is not None})
	if formats:
		data['formats'] = [name.strip() for name in formats.split(',') if name.strip()]

	config = ExperimentConfig.model_validate(data)
	logger.debug(f'Experiment config:\n{logger_service.format_config(config)}')
	return config


def require_model(config: ExperimentConfig, command: str) -> LevyModel:
	if config.model is None:
		raise ConfigValidationError(ERROR_MISSING_MODEL.format(command=command))
	return config.model
