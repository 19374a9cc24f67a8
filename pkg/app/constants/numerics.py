"""Numeric defaults shared by the cores."""

# Ladder chain truncation: stop once |Z_n| < EPS_CHAIN_RELATIVE * Z_1
EPS_CHAIN_RELATIVE = 1e-12
MAX_CHAIN_STEPS = 10_000

# Sampler resolution guard: expected lifetime should span this many grid steps
RESOLUTION_GUARD_STEPS = 1_000

# Second case: exponential rates mu_k = 2**-k, k = 0..LEBESGUE_SCHEDULE_DEPTH
LEBESGUE_SCHEDULE_DEPTH = 6

MIN_H_PATHS = 1_000
MIN_CELL_COUNT = 30
SIGNIFICANCE_LEVEL = 0.01

# Kernel ratio test: first heights below this share of the killing scale mu**(-1/alpha)
RATIO_TEST_WINDOW = 0.1
# ... and above this many grid resolutions dt**(1/alpha)
RATIO_MIN_GRID_STEPS = 200

# phi system
DEFAULT_REL_TOL = 1e-6
POINTS_PER_DECADE = 200
STARTUP_POINTS_PER_DECADE = 40

# Quadrature
DEFAULT_U_MAX = 1e4
QUAD_LIMIT = 500
QUAD_SEGMENTS_PER_DECADE = 2
BETA_SERIES_THRESHOLD = 30.0
BETA_SERIES_MAX_TERMS = 2_000
OSCILLATION_THRESHOLD = 8.0

# Krein string integration
ODE_RTOL = 1e-12
ODE_ATOL = 1e-14
DEFAULT_STRING_STEP = 1e-3
TAIL_SLOPE_TOLERANCE = 0.05
TAIL_FRACTION_TOLERANCE = 1e-6

# Entropy plateau detection
PLATEAU_TOLERANCE = 1e-4
PLATEAU_RUN = 3

# Spectral fit
MIN_SPECTRAL_SAMPLES = 8
MIN_SPECTRAL_DECADES = 1.5
FIT_RESIDUAL_THRESHOLD = 1e-2

# Custom exponent tables must span at least one decade with this many nodes
MIN_EXPONENT_TABLE_NODES = 8
BV_EXPONENT_MARGIN = 0.05

# Spectral identification
SPECTRAL_DISPERSION_TOLERANCE = 1e-2
MIN_FIRST_CASE_BUDGET = 100_000
