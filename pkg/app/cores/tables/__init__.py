from .monotone_table import MonotoneTable

__all__ = ['MonotoneTable']
