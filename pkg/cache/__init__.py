"""
Cache module for simulation results.
Provides an optional Redis layer and a local JSON file layer.
"""

from .redis_client import get_redis_client, is_redis_available, reset_redis_client
from .file_store import FileStore
from .result_cache import ResultCache

__all__ = ['get_redis_client', 'is_redis_available', 'reset_redis_client', 'FileStore', 'ResultCache']
