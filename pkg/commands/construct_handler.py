from pathlib import Path

from codec.construction import normalize_method, write_reliability_file
from errors import PolarKitError
from utils import validate_code_parameters, write_bits_file
from .handler_utils import (
    RunManifest, code_from_options, format_failure, format_success, format_usage_error, start_run,
)


def handle_construct(options, logger):
    """
    Handler for the construct command: writes the reliability ranking and the
    frozen/good masks of a code into the output directory.
    """
    route_name = "construct"
    is_valid, error_message = validate_code_parameters(
        options.get('N'), options.get('K'), good_fraction=options.get('good_fraction')
    )
    if not is_valid:
        return format_usage_error(route_name, error_message, logger)
    if options.get('K') is None:
        return format_usage_error(route_name, "Parameter '--K' is required.", logger)

    out_dir = Path(options.get('out') or '.')
    reliability_path = out_dir / 'reliability.txt'
    frozen_path = out_dir / 'frozen_mask.txt'
    good_path = out_dir / 'good_mask.txt'
    manifest = RunManifest(
        subcommand=route_name,
        options=options,
        input_paths=[options['reliability_file']] if options.get('reliability_file') else [],
        output_paths=[str(reliability_path), str(frozen_path), str(good_path)],
    )
    exit_code = start_run(manifest, logger)
    if exit_code is not None:
        return exit_code

    try:
        method = normalize_method(options.get('construction') or 'gaussian-approx')
        code = code_from_options(options)
        header = (f"method={method} N={code.N} K={code.K} design_param={options.get('design_param')}\n"
                  f"most reliable index first")
        write_reliability_file(reliability_path, code.reliability_order, header=header)
        write_bits_file(frozen_path, code.frozen_mask)
        write_bits_file(good_path, code.good_mask)
        logger.info(f"💾 Construction written to {out_dir}")

        summary = code.describe()
        return format_success(route_name, [
            f"N={summary['N']} K={summary['K']} rate={summary['rate']:.4f} "
            f"good={summary['good_bits']} bad={summary['bad_bits']} ({method})",
            f"reliability: {reliability_path}",
            f"frozen mask: {frozen_path}",
            f"good mask:   {good_path}",
        ], logger)

    except PolarKitError as e:
        return format_failure(route_name, e, logger)
