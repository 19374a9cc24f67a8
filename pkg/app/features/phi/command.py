import click

from app.features.options import experiment_options, load_config
from app.features.phi.service import phi_service


@click.command('phi')
@experiment_options
def phi(**options):
	"""Solve the phi / dual-phi system."""
	phi_service.run(load_config(**options))
