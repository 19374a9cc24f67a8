import click

from app.features.options import experiment_options, load_config
from app.features.stable_exit.service import stable_exit_service


@click.command('stable-exit')
@experiment_options
def stable_exit(**options):
	"""Closed-form exit and occupation identities, with optional Monte Carlo."""
	stable_exit_service.run(load_config(**options))
