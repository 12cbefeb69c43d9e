"""
Handlers for the analyze and cost commands.
"""

import json
from pathlib import Path

from analysis.costs import sorting_cost
from analysis.fixtures import read_pattern_table, write_pattern_table
from analysis.patterns import enumerate_group_patterns, split_histogram
from analysis.report import build_report, format_report
from errors import PolarKitError
from utils import validate_code_parameters
from .handler_utils import RunManifest, code_from_options, format_failure, format_success, format_usage_error, start_run


def _load_stats(options):
    """Pattern rows from --fixture or from a constructed code, with a label for the report."""
    if options.get('fixture'):
        return read_pattern_table(options['fixture']), Path(options['fixture']).name
    code = code_from_options(options)
    m = options.get('m', 4)
    source = f"constructed N={code.N} K={code.K} good={code.good_count}"
    return enumerate_group_patterns(code, m), source


def _check_source(options):
    if options.get('fixture'):
        return True, None
    return validate_code_parameters(options.get('N'), options.get('K'), options.get('m', 4),
                                    options.get('good_fraction'))


def handle_analyze(options, logger):
    """
    Handler for analyze: pattern table, split histograms, costs and ratios for
    a fixture or a constructed code.
    """
    route_name = "analyze"
    is_valid, error_message = _check_source(options)
    if not is_valid:
        return format_usage_error(route_name, error_message, logger)
    if not options.get('fixture') and options.get('K') is None:
        return format_usage_error(route_name, "analyze needs --fixture or --N/--K.", logger)

    outputs = [p for p in (options.get('out'), options.get('json_out')) if p]
    manifest = RunManifest(subcommand=route_name, options=options,
                           input_paths=[options['fixture']] if options.get('fixture') else [],
                           output_paths=outputs)
    exit_code = start_run(manifest, logger)
    if exit_code is not None:
        return exit_code

    try:
        stats, source = _load_stats(options)
        report = build_report(stats, source, options.get('list_size') or 1)
        lines = format_report(report)
        if options.get('out'):
            write_pattern_table(options['out'], stats)
            lines.append(f"pattern table: {options['out']}")
        if options.get('json_out'):
            with open(options['json_out'], 'w', encoding='utf-8', newline='\n') as f:
                json.dump(report.to_dict(), f, indent=2, sort_keys=True)
                f.write('\n')
            lines.append(f"report: {options['json_out']}")
        return format_success(route_name, lines, logger)

    except PolarKitError as e:
        return format_failure(route_name, e, logger)


def handle_cost(options, logger):
    """
    Handler for cost: prints one sorting-cost figure.
    """
    route_name = "cost"
    is_valid, error_message = _check_source(options)
    if not is_valid:
        return format_usage_error(route_name, error_message, logger)
    if not options.get('fixture') and options.get('K') is None:
        return format_usage_error(route_name, "cost needs --fixture or --N/--K.", logger)

    manifest = RunManifest(subcommand=route_name, options=options,
                           input_paths=[options['fixture']] if options.get('fixture') else [])
    exit_code = start_run(manifest, logger)
    if exit_code is not None:
        return exit_code

    try:
        stats, _ = _load_stats(options)
        histogram = split_histogram(stats, options['mode'])
        cost = sorting_cost(histogram, options.get('list_size') or 1, options['model'])
        logger.info(f"Sorting cost ({options['mode']} decision, {options['model']}): {cost}")
        return format_success(route_name, [str(cost)], logger)

    except PolarKitError as e:
        return format_failure(route_name, e, logger)
