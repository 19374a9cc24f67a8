"""Centralized error messages for the library."""

# Domain / validation
ERROR_OUTSIDE_UNIT_INTERVAL = 'Argument {value} lies outside [0, 1]'
ERROR_NON_POSITIVE_STEP = 'Grid step must be positive, got {value}'
ERROR_SKEWED_EXPONENT = 'Skewed stable exponents are complex; psi is defined for symmetric models only'
ERROR_CUSTOM_POSITIVITY = 'Positivity parameters are defined for stable and brownian families only'
ERROR_NO_MC_DRAWS = 'A skewed model needs n_mc > 0 draws to estimate P(X_1 > 0)'
ERROR_TOO_FEW_PATHS = 'Need at least {required} paths, got {actual}'
ERROR_TOO_FEW_ACCEPTED = 'Only {accepted} paths accepted, need {required} for {bins}x{bins} bins'
ERROR_NO_KERNEL_PAIRS = 'No chain has a second height with Z_1 in [{min_height:g}, {max_height:g}]'
ERROR_NOT_SYMMETRIC = 'This pipeline is defined for symmetric models only'
ERROR_NOT_FIRST_CASE = 'This pipeline needs exponential killing (first case)'
ERROR_UNBOUNDED_VARIATION = (
	'H has lower exponent {gamma:.4f} >= 1/2: s(x) diverges at 0; use unbounded_transform instead'
)
ERROR_BOUNDED_VARIATION = 'H has lower exponent {gamma:.4f} < 1/2: s(x) is finite; use build_string instead'
ERROR_SPECTRAL_PRECONDITION = 'Need >= {samples} lambda samples spanning >= {decades} decades'
ERROR_UNKNOWN_D1_STRING = 'The D-solution string for (psi+1)/(u^2+1) is known for the brownian model only'
ERROR_NO_CLOSED_FORM_H = 'No closed-form H for the {family} family in this killing case'

# Numerical diagnostics
ERROR_DIVERGENT_TAIL = 'Tail order {order} >= 1 makes the Stieltjes integral diverge'
ERROR_DEGENERATE_STATE = 'Kernel table vanishes at |z| = {value}'
ERROR_SINGULAR_SYSTEM = 'H or its dual vanish at interior grid node x = {value}'
ERROR_STARTUP = 'No usable power-law fit for the startup of the phi system'
ERROR_TAIL_ESTIMATION = 'A is not in its exponential regime at x_max = {x_max} (slope mismatch {mismatch:.3g})'
ERROR_NO_STRING_MASS = 'The string carries no mass: D(+inf) = 0 cannot be met'
ERROR_NO_PLATEAU = 'No plateau of the entropy right side before x_max'
ERROR_POLE = 'lambda = 1 hits the 1/(lambda^2 - 1) pole of the Rule-4 identity'
ERROR_TABLE_TOO_COARSE = 'Exponent table too coarse to decide bounded variation'
ERROR_ILL_POSED_FIT = 'Spectral fit residual {residual:.3g} above threshold {threshold:.3g}'
ERROR_QUADRATURE = 'Quadrature returned a non-finite value'

# CLI
ERROR_MISSING_SEED = 'A seed is required (no wall-clock default)'
ERROR_MISSING_MODEL = 'Command {command} needs a model descriptor'
