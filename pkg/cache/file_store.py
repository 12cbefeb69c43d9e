"""
Local JSON file layer of the result cache (one file per key).
"""

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, Optional, Union

from errors import ResultCacheError

logger = logging.getLogger(__name__)


class FileStore:
    """Stores JSON documents as <directory>/<key>.json, written atomically."""

    def __init__(self, directory: Union[str, Path]):
        self.directory = Path(directory)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ResultCacheError(f"Cannot create cache directory {self.directory}: {e}") from e

    def _path(self, key: str) -> Path:
        safe = key.replace(':', '_').replace('/', '_')
        return self.directory / f"{safe}.json"

    def get(self, key: str) -> Optional[Dict[str, Any]]:
        path = self._path(key)
        if not path.is_file():
            return None
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"⚠️ Ignoring unreadable cache file {path}: {e}")
            return None

    def set(self, key: str, document: Dict[str, Any]) -> None:
        path = self._path(key)
        try:
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix='.tmp')
            with os.fdopen(fd, 'w', encoding='utf-8') as f:
                json.dump(document, f, sort_keys=True)
            os.replace(tmp, path)
        except OSError as e:
            raise ResultCacheError(f"Cannot write cache file {path}: {e}") from e

    def delete(self, key: str) -> bool:
        path = self._path(key)
        if path.is_file():
            path.unlink()
            return True
        return False

    def clear(self) -> int:
        removed = 0
        for path in self.directory.glob('*.json'):
            path.unlink()
            removed += 1
        return removed
