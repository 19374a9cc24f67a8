from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from app.schemas.levy import PositivityParams


class StableFluctuationLaw(BaseModel):
	"""Positivity parameters with the fitted constants of phi(x, lam) = k x^gamma beta_hat(lam x) and H(x) = c x^gamma."""

	model_config = ConfigDict(frozen=True)

	params: PositivityParams = Field(..., description='Positivity parameters (gamma, delta).')
	k: float = Field(default=1.0, gt=0.0, description='Constant of the closed form of phi.')
	c: float = Field(default=1.0, gt=0.0, description='Constant of H(x) = c x^gamma.')


class FormulaResult(BaseModel):
	"""A closed-form value with its optional Monte-Carlo counterpart."""

	formula: str = Field(..., description='Name of the identity.')
	inputs: dict[str, float] = Field(..., description='Arguments of the formula.')
	value: float = Field(..., description='Closed-form value.')
	mc_estimate: Optional[float] = Field(default=None, description='Monte-Carlo estimate.')
	se: Optional[float] = Field(default=None, ge=0.0, description='Standard error of the Monte-Carlo estimate.')
	diagnostics: dict[str, float] = Field(default_factory=dict, description='Auxiliary values.')
