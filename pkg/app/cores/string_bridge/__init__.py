"""From ladder functions to Krein strings: string of H, spectral identification, Wiener-Hopf and Rule 4."""

from .identification import ladder_H, spectral_target, string_x_max, verify_spectral_identity
from .rule4 import lebesgue_D, tilde_solutions, time_change, unbounded_transform
from .strings import build_string, composition_residual, measure_residual, smooth_monotone
from .wiener_hopf import exponent_density, verify_wiener_hopf, wh_log_laplace

__all__ = [
	'build_string',
	'composition_residual',
	'exponent_density',
	'ladder_H',
	'lebesgue_D',
	'measure_residual',
	'smooth_monotone',
	'spectral_target',
	'string_x_max',
	'tilde_solutions',
	'time_change',
	'unbounded_transform',
	'verify_spectral_identity',
	'verify_wiener_hopf',
	'wh_log_laplace',
]
