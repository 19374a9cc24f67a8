import click

from app.features.options import experiment_options, load_config
from app.features.string.service import string_service


@click.command('string')
@experiment_options
def string(**options):
	"""Integrate the A- and D-solutions of a string."""
	string_service.run(load_config(**options))
