"""Deterministic solver of the phi system and the A-formula of the string of H."""

from .a_formula import A_NORMALIZATION, a_from_phi
from .solver import log_grid, reconstruction_residual, solve_phi, startup_point

__all__ = [
	'A_NORMALIZATION',
	'a_from_phi',
	'log_grid',
	'reconstruction_residual',
	'solve_phi',
	'startup_point',
]
