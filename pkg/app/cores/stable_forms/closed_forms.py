"""Closed-form fluctuation identities of stable processes."""

import numpy as np
from numpy.typing import ArrayLike

from app.cores.errors import DomainError
from app.cores.specfun import beta_laplace_many, gamma, incomplete_beta
from app.schemas.levy import PositivityParams
from app.schemas.specfun import BetaParams
from app.schemas.stable import StableFluctuationLaw


def phi_closed(law: StableFluctuationLaw, x: ArrayLike, lam: complex) -> np.ndarray:
	"""k x^gamma beta_hat_{gamma, delta + 1}(lam x).

	The argument lam x follows from self-similarity: phi(c x, lam) = c^gamma phi(x, c lam).
	"""
	x_array = np.asarray(x, dtype=float)
	shape = BetaParams(a=law.params.gamma, b=law.params.delta + 1.0)
	transform = beta_laplace_many(shape, complex(lam) * x_array)
	return law.k * x_array**law.params.gamma * transform


def exit_probability(params: PositivityParams, a: float, b: float) -> float:
	"""P(X leaves (-b, a) upwards): the Beta(gamma, delta) mass of [0, b / (a + b)].

	Examples:
		>>> exit_probability(PositivityParams(gamma=1.0, delta=1.0), 3.0, 1.0)
		0.25
	"""
	if a <= 0.0 or b <= 0.0:
		raise DomainError('Both barriers must be positive')

	return incomplete_beta(BetaParams(a=params.gamma, b=params.delta), b / (a + b))


def bivariate_occupation(params: PositivityParams, alpha: float, x: float, y: float) -> float:
	"""Gamma(gamma + 1) Gamma(delta + 1) / Gamma(alpha + 1)^2 x^gamma y^delta."""
	if x <= 0.0 or y <= 0.0:
		return 0.0

	constant = gamma(params.gamma + 1.0) * gamma(params.delta + 1.0) / gamma(alpha + 1.0) ** 2
	return constant * x**params.gamma * y**params.delta


def meander_ratio(alpha: float, delta: float) -> float:
	if not 0.0 < delta <= alpha <= 2.0:
		raise DomainError(f'Need 0 < delta <= alpha <= 2, got delta={delta}, alpha={alpha}')

	return gamma(delta + 1.0) / gamma(alpha + 1.0)


def final_over_max_law(params: PositivityParams) -> BetaParams:
	"""Law of F / M: Beta(gamma + 1, delta)."""
	return BetaParams(a=params.gamma + 1.0, b=params.delta)
