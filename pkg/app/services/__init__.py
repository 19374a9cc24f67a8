from .logger import logger_service
from .plots import plot_service
from .seeds import SeedLike, seed_service
from .storage import storage_service

__all__ = [
	'logger_service',
	'plot_service',
	'seed_service',
	'storage_service',
	'SeedLike',
]
