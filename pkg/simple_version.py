#!/usr/bin/env python3
"""
Simple versioning based on the version.txt file next to this module.
"""

import os
from datetime import datetime

VERSION_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "version.txt")
DEFAULT_VERSION = "0.1.0"


def read_version():
    """Read the current version from version.txt"""
    if not os.path.exists(VERSION_FILE):
        return DEFAULT_VERSION

    try:
        with open(VERSION_FILE, 'r', encoding='utf-8') as f:
            version = f.read().strip()
            return version if version else DEFAULT_VERSION
    except OSError:
        return DEFAULT_VERSION


def get_version():
    return read_version()


def get_version_info():
    """Version plus build metadata, as embedded in result documents"""
    return {
        'version': read_version(),
        'build_date': datetime.now().isoformat(),
        'version_file': os.path.basename(VERSION_FILE)
    }


if __name__ == "__main__":
    info = get_version_info()
    print(f"Version: {info['version']}")
