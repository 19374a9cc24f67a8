import click

from app.features.options import experiment_options, load_config
from app.features.spectral.service import spectral_service


@click.command('spectral')
@experiment_options
def spectral(**options):
	"""Check the spectral identity and optionally invert for the spectral density."""
	spectral_service.run(load_config(**options))
