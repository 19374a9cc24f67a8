"""Parameter objects for the special-function primitives."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from app.constants.numerics import DEFAULT_REL_TOL, DEFAULT_U_MAX


class BetaParams(BaseModel):
	"""Shape parameters of the beta density on [0, 1]."""

	model_config = ConfigDict(frozen=True)

	a: float = Field(..., gt=0.0, description='First shape parameter.')
	b: float = Field(..., gt=0.0, description='Second shape parameter.')


class TailKind(str, Enum):
	"""Analytic model of the integrand beyond the truncation point."""

	POWER = 'power'
	LOG = 'log'


class QuadratureSpec(BaseModel):
	"""Truncation and tail model of a Stieltjes-kernel integral.

	With POWER tails the integrand is continued as c * u**tail_order; with LOG
	tails as b + tail_order * log(u). Both constants are matched at u_max.
	"""

	model_config = ConfigDict(frozen=True)

	u_max: float = Field(default=DEFAULT_U_MAX, gt=0.0, description='Truncation point of the numerical part.')
	rel_tol: float = Field(default=DEFAULT_REL_TOL, gt=0.0, lt=1.0, description='Relative tolerance per segment.')
	tail_order: float = Field(default=0.0, description='Algebraic (or logarithmic) tail exponent.')
	tail_kind: TailKind = Field(default=TailKind.POWER, description='Tail model beyond u_max.')
