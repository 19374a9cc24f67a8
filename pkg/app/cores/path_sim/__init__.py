"""Monte-Carlo simulation of killed Levy paths and their fluctuation functionals."""

from .batch import BATCH_HEADER, batch_rows, chain_records, simulate_batch
from .estimators import dt_halving_check, empirical_cdf, estimate_H
from .fluctuations import chain_sum_error, extract_ladder_chain, fluctuation_summary
from .independence import (
	factorization_from_batch,
	factorization_test,
	kernel_uniformity_test,
	ratio_power_test,
	ratio_test_window,
)
from .sampler import check_resolution, sample_path

__all__ = [
	'BATCH_HEADER',
	'batch_rows',
	'chain_records',
	'chain_sum_error',
	'check_resolution',
	'dt_halving_check',
	'empirical_cdf',
	'estimate_H',
	'extract_ladder_chain',
	'factorization_from_batch',
	'factorization_test',
	'fluctuation_summary',
	'kernel_uniformity_test',
	'ratio_power_test',
	'ratio_test_window',
	'sample_path',
	'simulate_batch',
]
