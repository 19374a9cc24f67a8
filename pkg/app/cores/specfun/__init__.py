from app.cores.specfun.beta import beta_density, beta_laplace, beta_laplace_many, gamma, incomplete_beta
from app.cores.specfun.stieltjes import (
	log_tail_integral,
	power_tail_integral,
	stieltjes_integral,
	tabulated_density,
)

__all__ = [
	'beta_density',
	'beta_laplace',
	'beta_laplace_many',
	'gamma',
	'incomplete_beta',
	'log_tail_integral',
	'power_tail_integral',
	'stieltjes_integral',
	'tabulated_density',
]
