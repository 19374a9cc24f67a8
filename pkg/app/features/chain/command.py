import click

from app.features.chain.service import chain_service
from app.features.options import experiment_options, load_config


@click.command('chain')
@experiment_options
def chain(**options):
	"""Simulate the alternating-extrema chain and estimate phi."""
	chain_service.run(load_config(**options))
