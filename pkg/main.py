"""Command-line entry point of the Krein fluctuation toolkit."""

import click
from pydantic import ValidationError

from app import __version__
from app.cores.errors import EXIT_VALIDATION, KreinFluctuationError
from app.features.chain import chain
from app.features.entropy import entropy
from app.features.phi import phi
from app.features.rule4 import rule4
from app.features.simulate import simulate
from app.features.spectral import spectral
from app.features.stable_exit import stable_exit
from app.features.string import string
from app.features.wiener_hopf import wiener_hopf
from app.services.logger import logger_service

EXIT_USAGE = 64


class UnknownCommandError(click.UsageError):
	"""Command name not registered on the group."""

	exit_code = EXIT_USAGE


class ExperimentGroup(click.Group):
	"""Maps library and validation errors to process exit statuses."""

	def resolve_command(self, ctx: click.Context, args: list[str]):
		name = args[0] if args else None
		if name is not None and not name.startswith('-') and self.get_command(ctx, name) is None:
			raise UnknownCommandError(f'No such command {name!r}.', ctx)
		return super().resolve_command(ctx, args)

	def invoke(self, ctx: click.Context):
		try:
			return super().invoke(ctx)
		except ValidationError as error:
			click.echo(f'Invalid configuration:\n{error}', err=True)
			ctx.exit(EXIT_VALIDATION)
		except KreinFluctuationError as error:
			click.echo(f'{type(error).__name__}: {error}', err=True)
			ctx.exit(error.exit_code)


@click.group(cls=ExperimentGroup)
@click.version_option(__version__)
@click.option('--verbose', is_flag=True, help='Log at DEBUG level.')
def cli(verbose: bool):
	"""Two-sided exit problems of Levy processes and their Krein strings."""
	logger_service.init(verbose)


for command in (simulate, chain, phi, stable_exit, string, spectral, wiener_hopf, entropy, rule4):
	cli.add_command(command)


if __name__ == '__main__':
	cli()
