"""Krein string calculus: A- and D-solutions, spectral transform, inversion and the entropy formula."""

from .entropy import entropy_formula, entropy_lhs, rhs_sequence, string_phase
from .fitting import DEFAULT_RIDGE, default_u_grid, fit_spectral_density
from .integrator import d_solution_deviation, integrate_AD, integrate_D_backward
from .spectral import spectral_transform

__all__ = [
	'DEFAULT_RIDGE',
	'd_solution_deviation',
	'default_u_grid',
	'entropy_formula',
	'entropy_lhs',
	'fit_spectral_density',
	'integrate_AD',
	'integrate_D_backward',
	'rhs_sequence',
	'spectral_transform',
	'string_phase',
]
