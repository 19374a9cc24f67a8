import click

from app.features.options import experiment_options, load_config
from app.features.rule4.service import rule4_service


@click.command('rule4')
@experiment_options
def rule4(**options):
	"""Build the unbounded-variation transform and report the Rule-4 residual."""
	rule4_service.run(load_config(**options))
