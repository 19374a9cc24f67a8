import click

from app.features.options import experiment_options, load_config
from app.features.simulate.service import simulate_service


@click.command('simulate')
@experiment_options
def simulate(**options):
	"""Simulate killed paths, estimate H and test the raw-path identities."""
	simulate_service.run(load_config(**options))
