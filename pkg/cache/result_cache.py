"""
Result cache for simulation points: a Redis layer and a local JSON file layer.
"""

import os
import json
import hashlib
import logging
from typing import Any, Dict, Optional
from datetime import datetime, timezone

from errors import ResultCacheError
from .file_store import FileStore
from .redis_client import get_redis_client, is_redis_available, redis_configured

logger = logging.getLogger(__name__)


class ResultCache:
    """
    Two cache layers, consulted in order:
    1. Redis (only when REDIS_HOST is set), entries expire after RESULT_CACHE_TTL
    2. JSON files under SIM_CACHE_DIR (only when set)

    Layer failures are logged and skipped; they never abort a sweep.
    """

    def __init__(self, directory: Optional[str] = None, use_redis: Optional[bool] = None):
        self.ttl = int(os.getenv('RESULT_CACHE_TTL', 2592000))  # 30 days
        self.prefix = "simpoint:"
        self.use_redis = redis_configured() if use_redis is None else use_redis

        directory = directory if directory is not None else os.getenv('SIM_CACHE_DIR')
        self.file_store = None
        if directory:
            try:
                self.file_store = FileStore(directory)
                logger.info(f"Result file cache initialized in {directory}")
            except ResultCacheError as e:
                logger.warning(f"⚠️ Result file cache disabled: {e}")

    @property
    def enabled(self) -> bool:
        return self.use_redis or self.file_store is not None

    def make_key(self, point: Dict[str, Any]) -> str:
        """
        Unique key for a simulation point.

        Args:
            point: Everything that determines the point's result

        Returns:
            str: Prefixed md5 of the sorted JSON form
        """
        key_string = json.dumps(point, sort_keys=True)
        key_hash = hashlib.md5(key_string.encode()).hexdigest()
        return f"{self.prefix}{key_hash}"

    def _serialize(self, record: Dict[str, Any]) -> Dict[str, Any]:
        return {
            'data': record,
            'timestamp': datetime.now(timezone.utc).isoformat(),
        }

    def get(self, point: Dict[str, Any]) -> Optional[Dict[str, Any]]:
        """
        Look a point up in Redis, then in the file layer.

        Returns:
            Dict: Cached record, or None on a miss
        """
        if not self.enabled:
            return None
        key = self.make_key(point)

        if self.use_redis and is_redis_available():
            try:
                cached = get_redis_client().get(key)
                if cached:
                    document = json.loads(cached)
                    logger.info(f"🎯 Result cache HIT (redis) for Eb/N0={point.get('ebn0_db')} dB")
                    return document['data']
            except Exception as e:
                logger.error(f"❌ Result cache retrieval ERROR (redis): {e}")

        if self.file_store is not None:
            document = self.file_store.get(key)
            if document and 'data' in document:
                logger.info(f"🎯 Result cache HIT (file) for Eb/N0={point.get('ebn0_db')} dB")
                return document['data']

        logger.debug(f"Result cache MISS for {key}")
        return None

    def set(self, point: Dict[str, Any], record: Dict[str, Any]) -> bool:
        """
        Store a finished point in every available layer.

        Returns:
            bool: True if at least one layer stored it
        """
        if not self.enabled:
            return False
        key = self.make_key(point)
        document = self._serialize(record)
        stored = False

        if self.use_redis and is_redis_available():
            try:
                get_redis_client().setex(key, self.ttl, json.dumps(document))
                stored = True
                logger.info(f"💾 Result cache STORED (redis) for Eb/N0={point.get('ebn0_db')} dB "
                            f"(TTL: {self.ttl / 86400:.0f} days)")
            except Exception as e:
                logger.error(f"❌ Result cache storage ERROR (redis): {e}")

        if self.file_store is not None:
            try:
                self.file_store.set(key, document)
                stored = True
                logger.info(f"💾 Result cache STORED (file) for Eb/N0={point.get('ebn0_db')} dB")
            except ResultCacheError as e:
                logger.warning(f"⚠️ {e}")

        return stored

    def clear(self) -> int:
        """Remove every cached point; returns the number of entries removed."""
        removed = 0
        if self.use_redis and is_redis_available():
            try:
                client = get_redis_client()
                keys = client.keys(f"{self.prefix}*")
                if keys:
                    removed += client.delete(*keys)
            except Exception as e:
                logger.error(f"❌ Result cache clear ERROR (redis): {e}")
        if self.file_store is not None:
            removed += self.file_store.clear()
        return removed
