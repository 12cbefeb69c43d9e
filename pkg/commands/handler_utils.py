"""
Shared helpers for command handlers: run manifests, result reporting and exit codes.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import click

from codec.construction import build_code
from codec.crc import CrcSpec, parse_crc_flag
from errors import PolarKitError
from utils import check_output_path

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


@dataclass
class RunManifest:
    """What a subcommand was asked to do, resolved before any work starts."""
    subcommand: str
    options: Dict[str, Any]
    resolved_config: Dict[str, Any] = field(default_factory=dict)
    input_paths: List[str] = field(default_factory=list)
    output_paths: List[str] = field(default_factory=list)

    def validate_paths(self) -> Optional[str]:
        """
        Returns:
            str: First problem found with an input or output path, or None
        """
        for path in self.input_paths:
            if not Path(path).is_file():
                return f"Input file not found: {path}"
        for path in self.output_paths:
            is_valid, message = check_output_path(path)
            if not is_valid:
                return message
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'subcommand': self.subcommand,
            'options': self.options,
            'resolved_config': self.resolved_config,
            'input_paths': self.input_paths,
            'output_paths': self.output_paths,
        }


def format_success(route_name: str, lines: List[str], logger: logging.Logger) -> int:
    for line in lines:
        click.echo(line)
    logger.info(f"✅ {route_name} finished")
    return EXIT_OK


def format_usage_error(route_name: str, error_message: str, logger: logging.Logger) -> int:
    logger.warning(f"⚠️ Parameter validation failed for {route_name}: {error_message}")
    click.echo(f"Error: {error_message}", err=True)
    return EXIT_USAGE


def format_failure(route_name: str, error: PolarKitError, logger: logging.Logger) -> int:
    logger.error(f"❌ {route_name} failed: {error}")
    click.echo(f"Error ({type(error).__name__}): {error}", err=True)
    return EXIT_FAILURE


def start_run(manifest: RunManifest, logger: logging.Logger) -> Optional[int]:
    """Log the manifest and check its paths; returns a usage exit code if they are invalid."""
    logger.info(f"🎯 Processing {manifest.subcommand} request")
    logger.debug(f"Run manifest: {json.dumps(manifest.to_dict(), sort_keys=True, default=str)}")
    problem = manifest.validate_paths()
    if problem:
        return format_usage_error(manifest.subcommand, problem, logger)
    return None


def code_from_options(options: Dict[str, Any]):
    """Construct the code described by the common --N/--K/--construction options."""
    return build_code(
        options['N'], options['K'], options.get('good_fraction') or 0.0,
        options.get('construction') or 'gaussian-approx', options.get('design_param'),
        options.get('reliability_file'),
    )


def crc_payload_length(K: int, crc: Optional[CrcSpec]) -> int:
    return K - (crc.width if crc is not None else 0)


def parse_crc_option(value: Optional[str]) -> Optional[CrcSpec]:
    """'<width:poly:init>' to a CrcSpec; None, 'none' or 'off' mean no CRC."""
    if value is None or value.strip().lower() in ('none', 'off'):
        return None
    return parse_crc_flag(value)
