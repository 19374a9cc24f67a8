from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.constants.numerics import PLATEAU_TOLERANCE
from app.schemas.bridge import StringConvention
from app.schemas.levy import LevyModel
from config import DEFAULT_WORKERS, RESULTS_FOLDER


class OutputFormat(str, Enum):
	"""Result file formats."""

	CSV = 'csv'
	JSON = 'json'
	SVG = 'svg'


class StringSource(str, Enum):
	"""Where a command takes its string from."""

	LEBESGUE = 'lebesgue'
	MODEL = 'model'


class Section(BaseModel):
	model_config = ConfigDict(extra='forbid', frozen=True)


class SimulateParams(Section):
	"""Path batch, empirical H and the independence tests on raw paths."""

	n_paths: int = Field(default=2_000, gt=0, description='Number of killed paths.')
	dt: float = Field(default=1e-3, gt=0.0, description='Grid step.')
	h_grid: list[float] = Field(
		default=[0.25, 0.5, 1.0, 2.0, 4.0], min_length=1, description='Nodes of the H estimate.'
	)
	estimate_h: bool = Field(default=True, description='Whether to estimate H (needs at least 1000 paths).')
	factorization_x: Optional[float] = Field(default=None, gt=0.0, description='Amplitude cap of the chi-square test.')
	n_bins: int = Field(default=5, ge=1, description='Bins per axis of the contingency table.')
	uniformity: bool = Field(default=False, description='Whether to run the kernel uniformity test.')


class ChainParams(Section):
	"""Chain simulation from power-law H, the F/M law and phi estimates."""

	n_chains: int = Field(default=10_000, gt=0, description='Number of chains.')
	x_cap: float = Field(default=1.0, gt=0.0, description='Cap x of M <= x.')
	lams: list[float] = Field(default=[0.5, 1.0, 2.0], min_length=1, description='lam values of the phi estimates.')
	test_law: bool = Field(default=True, description='Whether to test F/M against its beta law.')
	n_mc: int = Field(default=0, ge=0, description='Draws for positivity parameters of skewed models.')


class PhiParams(Section):
	"""Deterministic phi system on a grid."""

	x_min: float = Field(default=0.01, gt=0.0, description='First grid node.')
	x_max: float = Field(default=4.0, gt=0.0, description='Last grid node.')
	points: int = Field(default=200, ge=2, description='Number of log-spaced nodes.')
	lams: list[float] = Field(default=[0.5, 1.0, 2.0], min_length=1, description='lam values.')
	rel_tol: float = Field(default=1e-6, gt=0.0, lt=1.0, description='Solver tolerance.')
	n_paths: int = Field(default=100_000, gt=0, description='Paths for H when it has no closed form.')
	dt: float = Field(default=1e-3, gt=0.0, description='Grid step of the path simulation.')
	n_mc: int = Field(default=0, ge=0, description='Draws for positivity parameters of skewed models.')


class StableExitParams(Section):
	"""Closed-form stable identities and their Monte-Carlo counterparts."""

	a: float = Field(default=3.0, gt=0.0, description='Upper barrier.')
	b: float = Field(default=1.0, gt=0.0, description='Lower barrier (-b).')
	occupation_x: Optional[float] = Field(default=None, gt=0.0, description='Right end of the occupation interval.')
	occupation_y: Optional[float] = Field(default=None, gt=0.0, description='Left end (-y) of the occupation interval.')
	mc_paths: int = Field(default=0, ge=0, description='Monte-Carlo paths; 0 skips the simulation.')
	dt: float = Field(default=1e-3, gt=0.0, description='Coarse grid step of the dt-halving extrapolation.')
	n_mc: int = Field(default=0, ge=0, description='Draws for positivity parameters of skewed models.')


class StringParams(Section):
	"""A- and D-solutions of a string."""

	source: StringSource = Field(default=StringSource.MODEL, description='String of H or the Lebesgue string.')
	length: float = Field(default=10.0, gt=0.0, description='Length of the Lebesgue string.')
	lams: list[float] = Field(default=[1.0], min_length=1, description='lam values.')
	step: float = Field(default=1e-3, gt=0.0, description='Output grid step.')
	h_x_max: float = Field(default=100.0, gt=0.0, description='Right end of the H grid.')
	convention: StringConvention = Field(default=StringConvention.DENSITY_IN_S, description='String convention.')
	mc_budget: int = Field(default=100_000, gt=0, description='Paths for H when it has no closed form.')
	dt: float = Field(default=1e-3, gt=0.0, description='Grid step of the path simulation.')


class SpectralParams(Section):
	"""Spectral identification and the exploratory inversion."""

	lams: list[float] = Field(
		default=[0.1, 0.15, 0.25, 0.35, 0.5, 0.7, 1.0, 1.4, 2.0, 2.8, 4.0], min_length=1, description='lam grid.'
	)
	mc_budget: int = Field(default=100_000, gt=0, description='Paths for H in the first case.')
	dt: float = Field(default=1e-3, gt=0.0, description='Grid step of the path simulation.')
	convention: StringConvention = Field(default=StringConvention.DENSITY_IN_S, description='String convention.')
	fit: bool = Field(default=False, description='Whether to invert D(0, lam) for the spectral density.')
	ridge: float = Field(default=1e-6, ge=0.0, description='Smoothness penalty of the inversion.')


class WienerHopfParams(Section):
	"""Wiener-Hopf log formula against Monte Carlo."""

	lams: list[float] = Field(default=[0.5, 1.0, 2.0], min_length=1, description='lam values.')
	n_paths: int = Field(default=100_000, gt=0, description='Number of killed paths.')
	dt: float = Field(default=1e-3, gt=0.0, description='Grid step.')
	entropy_route: bool = Field(default=False, description='Whether to also evaluate the entropy right side.')
	mc_budget: int = Field(default=100_000, gt=0, description='Paths for H of the entropy route.')


class EntropyParams(Section):
	"""Both sides of the entropy formula."""

	source: StringSource = Field(default=StringSource.LEBESGUE, description='Lebesgue string or string of H.')
	lams: list[float] = Field(default=[0.5, 1.0, 2.0], min_length=1, description='lam values.')
	length: float = Field(default=40.0, gt=0.0, description='Length of the Lebesgue string.')
	step: float = Field(default=1e-3, gt=0.0, description='Output grid step.')
	tolerance: float = Field(default=PLATEAU_TOLERANCE, gt=0.0, description='Plateau tolerance.')
	mc_budget: int = Field(default=100_000, gt=0, description='Paths for H in the first case.')
	dt: float = Field(default=1e-3, gt=0.0, description='Grid step of the path simulation.')


class Rule4Params(Section):
	"""Unbounded-variation transform and the Rule-4 identity."""

	lam: float = Field(default=2.0, gt=0.0, description='Spectral parameter (not 1).')
	x_min: float = Field(default=1e-3, gt=0.0, description='First grid node.')
	x_max: float = Field(default=20.0, gt=0.0, description='Last grid node.')
	points: int = Field(default=400, ge=3, description='Number of log-spaced nodes.')
	closed_form: bool = Field(default=True, description='Use the closed-form H when known instead of Monte Carlo.')
	n_paths: int = Field(default=100_000, gt=0, description='Paths for H when estimated.')
	dt: float = Field(default=1e-3, gt=0.0, description='Grid step of the path simulation.')


class ExperimentConfig(BaseModel):
	"""One experiment: a model, a seed, output settings and a section per command."""

	model_config = ConfigDict(extra='forbid')

	model: Optional[LevyModel] = Field(default=None, description='Process descriptor.')
	seed: int = Field(..., ge=0, description='Master seed; there is no wall-clock default.')
	output_dir: str = Field(default=RESULTS_FOLDER, description='Directory of the result files.')
	formats: list[OutputFormat] = Field(
		default=[OutputFormat.CSV, OutputFormat.JSON, OutputFormat.SVG], description='Result formats to write.'
	)
	workers: int = Field(default=DEFAULT_WORKERS, ge=1, description='Worker threads of Monte-Carlo stages.')

	simulate: SimulateParams = Field(default_factory=SimulateParams)
	chain: ChainParams = Field(default_factory=ChainParams)
	phi: PhiParams = Field(default_factory=PhiParams)
	stable_exit: StableExitParams = Field(default_factory=StableExitParams)
	string: StringParams = Field(default_factory=StringParams)
	spectral: SpectralParams = Field(default_factory=SpectralParams)
	wiener_hopf: WienerHopfParams = Field(default_factory=WienerHopfParams)
	entropy: EntropyParams = Field(default_factory=EntropyParams)
	rule4: Rule4Params = Field(default_factory=Rule4Params)

	@field_validator('formats')
	@classmethod
	def unique_formats(cls, formats: list[OutputFormat]) -> list[OutputFormat]:
		return list(dict.fromkeys(formats))

	def writes(self, output_format: OutputFormat) -> bool:
		return output_format in self.formats
