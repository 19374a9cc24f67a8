"""Chain-based estimator of phi and the law of F / M."""

import math

import numpy as np
from scipy import stats

from app.constants.numerics import SIGNIFICANCE_LEVEL
from app.cores.statistics import distance_correlation_test
from app.cores.tables import MonotoneTable
from app.schemas.chains import ChainOutcome, PhiEstimate
from app.schemas.reports import HypothesisReport
from app.schemas.specfun import BetaParams
from app.services.logger import logger_service
from app.services.seeds import seed_service

from .chains import simulate_chains

logger = logger_service.get_logger(__name__, category='Chain')

# Pairs entering the O(n^2) distance-correlation test
DCOR_SUBSAMPLE = 2_000


def phi_mc(
	Hplus: MonotoneTable, Hminus: MonotoneTable, x: float, lam: complex, n_chains: int, seed: int, workers: int = 1
) -> PhiEstimate:
	"""H(x) times the chain mean of exp(-lam F), with its standard error. lam = 0 gives H(x) exactly."""
	lam = complex(lam)
	h_value = float(Hplus(x))

	if lam == 0:
		return PhiEstimate(x=x, lam_real=0.0, real=h_value, standard_error=0.0, n_chains=n_chains)

	outcome = simulate_chains(Hplus, Hminus, x, n_chains, seed, workers)
	weights = np.exp(-lam * outcome.finals)
	mean = complex(np.mean(weights)) * h_value

	variance = float(np.var(weights.real) + np.var(weights.imag))
	standard_error = h_value * math.sqrt(variance / n_chains)

	logger.info(f'phi_mc(x={x}, lam={lam}) = {mean:.6g} +/- {standard_error:.2g}')

	return PhiEstimate(
		x=x,
		lam_real=lam.real,
		lam_imag=lam.imag,
		real=mean.real,
		imag=mean.imag,
		standard_error=standard_error,
		n_chains=n_chains,
	)


def f_over_m_test(outcome: ChainOutcome, law: BetaParams, seed: int) -> tuple[HypothesisReport, HypothesisReport]:
	"""KS test of F / M against a beta law, and distance-correlation test of F / M against M."""
	usable = outcome.maxima > 0.0
	ratios = outcome.ratios[usable]
	maxima = outcome.maxima[usable]

	ks = stats.kstest(ratios, stats.beta(law.a, law.b).cdf)
	ks_report = HypothesisReport(
		name='f_over_m_beta',
		statistic=float(ks.statistic),
		p_value=float(ks.pvalue),
		n_samples=len(ratios),
		passed=bool(ks.pvalue > SIGNIFICANCE_LEVEL),
		diagnostics={'mean': float(np.mean(ratios)), 'expected_mean': law.a / (law.a + law.b)},
	)

	rng = seed_service.stream(seed, 0)
	subsample = rng.choice(len(ratios), size=min(DCOR_SUBSAMPLE, len(ratios)), replace=False)
	dcor_report = distance_correlation_test(ratios[subsample], maxima[subsample], rng, name='f_over_m_independence')

	logger.info(f'F/M law: KS p={ks_report.p_value:.4f}; independence p={dcor_report.p_value:.4f}')
	return ks_report, dcor_report
