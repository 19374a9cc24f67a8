"""The alternating extrema chain driven by tabulated H and dual H."""

from .chains import simulate_chain, simulate_chains
from .estimators import f_over_m_test, phi_mc
from .kernel import kernel_step, sample_below

__all__ = [
	'f_over_m_test',
	'kernel_step',
	'phi_mc',
	'sample_below',
	'simulate_chain',
	'simulate_chains',
]
