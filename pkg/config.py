RESULTS_FOLDER = './results'
CONFIG_ENV_VAR = 'KREIN_CONFIG'
DEFAULT_WORKERS = 1
