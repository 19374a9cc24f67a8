import click

from app.features.options import experiment_options, load_config
from app.features.wiener_hopf.service import wiener_hopf_service


@click.command('wiener-hopf')
@experiment_options
def wiener_hopf(**options):
	"""Compare the Wiener-Hopf log formula with Monte Carlo."""
	wiener_hopf_service.run(load_config(**options))
