from pydantic import BaseModel, Field


class HypothesisReport(BaseModel):
	"""Outcome of a statistical test."""

	name: str = Field(..., description='Test name.')
	statistic: float = Field(..., description='Test statistic.')
	p_value: float = Field(..., ge=0.0, le=1.0, description='p-value.')
	n_samples: int = Field(..., ge=0, description='Number of samples entering the test.')
	passed: bool = Field(..., description='Whether the null hypothesis survives at the significance level.')
	diagnostics: dict[str, float] = Field(default_factory=dict, description='Auxiliary statistics.')
