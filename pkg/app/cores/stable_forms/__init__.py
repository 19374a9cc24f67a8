"""Closed-form identities of stable processes and their Monte-Carlo counterparts."""

from .closed_forms import bivariate_occupation, exit_probability, final_over_max_law, meander_ratio, phi_closed
from .fitting import fit_power_constant, fit_stable_law
from .monte_carlo import exit_probability_mc, occupation_mc, simulate_exits

__all__ = [
	'bivariate_occupation',
	'exit_probability',
	'exit_probability_mc',
	'final_over_max_law',
	'fit_power_constant',
	'fit_stable_law',
	'meander_ratio',
	'occupation_mc',
	'phi_closed',
	'simulate_exits',
]
