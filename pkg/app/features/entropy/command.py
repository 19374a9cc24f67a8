import click

from app.features.entropy.service import entropy_service
from app.features.options import experiment_options, load_config


@click.command('entropy')
@experiment_options
def entropy(**options):
	"""Evaluate both sides of the entropy formula."""
	entropy_service.run(load_config(**options))
