"""Process families, characteristic exponents, positivity parameters and closed-form ladder functions."""

from .exponent import bounded_variation, psi, psi_tail_exponent
from .increments import sample_increments, standard_stable
from .ladder import closed_form_H, ladder_tables
from .positivity import positivity_params

__all__ = [
	'bounded_variation',
	'closed_form_H',
	'ladder_tables',
	'positivity_params',
	'psi',
	'psi_tail_exponent',
	'sample_increments',
	'standard_stable',
]
