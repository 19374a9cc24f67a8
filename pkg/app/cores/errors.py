"""Exception hierarchy for the fluctuation and string engines.

Every error carries the process exit status the CLI reports for it:
2 for invalid input, 3 for a numerical diagnostic.
"""

EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3


class KreinFluctuationError(Exception):
	"""Base class of all library errors."""

	exit_code: int = EXIT_VALIDATION


class DomainError(KreinFluctuationError, ValueError):
	"""Raised when an argument lies outside the domain of an operation."""

	pass


class PreconditionError(KreinFluctuationError, ValueError):
	"""Raised when the inputs do not meet the precondition of an operation."""

	pass


class ConfigValidationError(KreinFluctuationError, ValueError):
	"""Raised when an experiment configuration is incomplete."""

	pass


class UnsupportedModelError(KreinFluctuationError):
	"""Raised when an operation is not defined for the given model."""

	pass


class InsufficientSampleError(KreinFluctuationError):
	"""Raised when a Monte-Carlo budget is too small for the requested test."""

	pass


class UnboundedVariationError(KreinFluctuationError):
	"""Raised when s(x) = int H^-2 diverges at 0."""

	pass


class NumericalDiagnosticError(KreinFluctuationError):
	"""Base class of numerical failures (non-convergence, ill-posedness)."""

	exit_code = EXIT_NUMERICAL


class DivergenceError(NumericalDiagnosticError):
	"""Raised when an integral is not convergent."""

	pass


class DegenerateStateError(NumericalDiagnosticError):
	"""Raised when the ladder kernel is undefined at the current state."""

	pass


class SingularSystemError(NumericalDiagnosticError):
	"""Raised when the phi system divides by a vanishing table."""

	pass


class StartupError(NumericalDiagnosticError):
	"""Raised when the phi system cannot be started near x = 0."""

	pass


class TailEstimationError(NumericalDiagnosticError):
	"""Raised when the tail of int A^-2 cannot be estimated."""

	pass


class NonConvergenceError(NumericalDiagnosticError):
	"""Raised when a limit (plateau, quadrature) is not reached."""

	pass


class PoleError(NumericalDiagnosticError):
	"""Raised at the lambda = 1 pole of the Rule-4 identity."""

	pass


class TableTooCoarseError(NumericalDiagnosticError):
	"""Raised when a tabulated exponent cannot decide a property."""

	pass


class IllPosedFitError(NumericalDiagnosticError):
	"""Raised when a spectral inversion does not reproduce its samples."""

	pass
