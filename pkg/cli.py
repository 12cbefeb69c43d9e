#!/usr/bin/env python3
"""
polarkit command line: construct, encode, decode, analyze, cost and simulate.

Exit codes: 0 success, 1 usage error, 2 runtime failure.
"""

import os
import sys
import logging
from typing import List, Optional

import click
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

from commands import (  # noqa: E402
    handle_analyze, handle_construct, handle_cost, handle_decode, handle_encode, handle_simulate,
)
from commands.handler_utils import EXIT_FAILURE, EXIT_OK, EXIT_USAGE  # noqa: E402
from errors import PolarKitError  # noqa: E402
from simple_version import get_version  # noqa: E402
from utils import parse_ebn0_list  # noqa: E402

logger = logging.getLogger('polarkit')

CONSTRUCTION_CHOICES = ['ga', 'bhatta', 'file', 'gaussian-approx', 'bhattacharyya', 'imported']


def _configure_logging(level: Optional[str]) -> None:
    logging.basicConfig(
        level=(level or os.getenv('LOG_LEVEL', 'INFO')).upper(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    if level:
        logging.getLogger().setLevel(level.upper())


def _ebn0_callback(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_ebn0_list(value)
    except ValueError as e:
        raise click.BadParameter(str(e)) from e


def code_options(func):
    """--N/--K and construction options shared by every code-building command."""
    options = [
        click.option('--N', 'N', type=int, help='Block length (power of two).'),
        click.option('--K', 'K', type=int, help='Information bits, CRC included.'),
        click.option('--construction', type=click.Choice(CONSTRUCTION_CHOICES), default='ga', show_default=True,
                     help='Reliability source.'),
        click.option('--design-param', type=float, default=None,
                     help='Design Eb/N0 in dB (ga) or channel Bhattacharyya Z0 (bhatta).'),
        click.option('--reliability-file', type=str, default=None,
                     help='Ranking file for --construction file (most reliable index first).'),
        click.option('--good-fraction', type=float, default=0.0, show_default=True,
                     help='Fraction of information bits treated as good.'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def decoder_options(func):
    options = [
        click.option('--m', 'm', type=int, default=4, show_default=True, help='Group width.'),
        click.option('--list-size', type=int, default=8, show_default=True, help='List size L.'),
        click.option('--decision/--no-decision', default=None,
                     help='Decision-aided extension (default: on when --good-fraction > 0).'),
        click.option('--adaptive', is_flag=True, help='Adaptive L = 1, 2, 4, ... up to --max-list-size.'),
        click.option('--max-list-size', type=int, default=32, show_default=True, help='L_max for --adaptive.'),
        click.option('--metric-mode', type=click.Choice(['exact', 'min-approx']), default='exact',
                     show_default=True),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@click.group(context_settings={'help_option_names': ['-h', '--help']})
@click.version_option(version=get_version(), prog_name='polarkit')
@click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
              default=None, help='Overrides LOG_LEVEL.')
def cli(log_level):
    """Polar codes with parallel and decision-aided SC-List decoding."""
    _configure_logging(log_level)


@cli.command()
@code_options
@click.option('--out', type=str, default='.', show_default=True, help='Output directory.')
def construct(**options):
    """Write the reliability ranking and frozen/good masks of a code."""
    return handle_construct(options, logger)


@cli.command()
@code_options
@click.option('--crc', type=str, default=None, help='CRC as <width:poly:init>, e.g. 16:0x1021:0xFFFF.')
@click.option('--in', 'input', type=str, help='Payload bit file (0/1 characters).')
@click.option('--out', type=str, help='Codeword bit file to write.')
@click.option('--llr-out', type=str, default=None, help='Also write channel LLRs to this file.')
@click.option('--ebn0', type=str, default=None, callback=_ebn0_callback, help='Eb/N0 in dB for --llr-out.')
@click.option('--seed', type=int, default=0, show_default=True)
def encode(**options):
    """Encode one block of payload bits."""
    return handle_encode(options, logger)


@cli.command()
@code_options
@decoder_options
@click.option('--crc', type=str, default=None, help='CRC as <width:poly:init>.')
@click.option('--ml', is_flag=True, help='Exhaustive ML search instead of list decoding (K <= 16).')
@click.option('--in', 'input', type=str, help='LLR file (positive favors 0).')
@click.option('--out', type=str, help='Payload bit file to write.')
def decode(**options):
    """Decode one block of channel LLRs."""
    return handle_decode(options, logger)


@cli.command()
@code_options
@click.option('--m', 'm', type=int, default=4, show_default=True, help='Group width.')
@click.option('--fixture', type=str, default=None, help='Pattern table CSV instead of a constructed code.')
@click.option('--list-size', type=int, default=1, show_default=True, help='Cost multiplier L.')
@click.option('--out', type=str, default=None, help='Write the pattern table (with M1, M2) to this CSV.')
@click.option('--json-out', type=str, default=None, help='Write the full report as JSON.')
def analyze(**options):
    """Pattern table, split histograms and sorting costs."""
    return handle_analyze(options, logger)


@cli.command()
@code_options
@click.option('--m', 'm', type=int, default=4, show_default=True, help='Group width.')
@click.option('--fixture', type=str, default=None, help='Pattern table CSV instead of a constructed code.')
@click.option('--mode', type=click.Choice(['with', 'without']), required=True, help='With or without decision.')
@click.option('--model', type=click.Choice(['square', 'loglinear']), default='square', show_default=True)
@click.option('--list-size', type=int, default=1, show_default=True, help='Cost multiplier L.')
def cost(**options):
    """Print one sorting-cost figure."""
    return handle_cost(options, logger)


@cli.command()
@click.option('--config', type=str, default=None, help='JSON or YAML simulation config.')
@click.option('--N', 'N', type=int, default=None)
@click.option('--K', 'K', type=int, default=None)
@click.option('--construction', type=click.Choice(CONSTRUCTION_CHOICES), default=None)
@click.option('--design-param', type=float, default=None)
@click.option('--reliability-file', type=str, default=None)
@click.option('--good-fraction', type=float, default=None)
@click.option('--m', 'group_width', type=int, default=None, help='Group width.')
@click.option('--list-size', type=int, default=None)
@click.option('--decision/--no-decision', 'decision_enabled', default=None)
@click.option('--adaptive/--no-adaptive', default=None)
@click.option('--max-list-size', type=int, default=None)
@click.option('--metric-mode', type=click.Choice(['exact', 'min-approx']), default=None)
@click.option('--crc', type=str, default=None, help="CRC as <width:poly:init>, or 'none'.")
@click.option('--ebn0', 'ebn0_db', type=str, default=None, callback=_ebn0_callback,
              help='Comma separated Eb/N0 values in dB.')
@click.option('--seed', type=int, default=None)
@click.option('--max-frames', type=int, default=None)
@click.option('--target-errors', 'target_frame_errors', type=int, default=None)
@click.option('--workers', type=int, default=None, help='Worker processes (default SIM_WORKERS or 1).')
@click.option('--batch-frames', type=int, default=None, help='Frames per batch (default SIM_BATCH_FRAMES or 256).')
@click.option('--out', type=str, default='results.csv', show_default=True,
              help='Results CSV; the JSON document is written next to it.')
@click.option('--no-cache', is_flag=True, help='Ignore SIM_CACHE_DIR / REDIS_HOST result caches.')
def simulate(**options):
    """Monte-Carlo FER/BER sweep; flags override config file values."""
    return handle_simulate(options, logger)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI and return its exit code instead of exiting.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        int: 0 success, 1 usage error, 2 runtime failure
    """
    try:
        rv = cli.main(args=argv, prog_name='polarkit', standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except PolarKitError as e:
        logger.error(f"❌ {e}")
        click.echo(f"Error ({type(e).__name__}): {e}", err=True)
        return EXIT_FAILURE
    return rv if isinstance(rv, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
