from pathlib import Path

from cache.result_cache import ResultCache
from errors import PolarKitError
from sim.config import load_sim_config
from sim.persistence import write_results_csv, write_results_json
from sim.runner import run_sweep
from .handler_utils import RunManifest, format_failure, format_success, start_run

SIM_OVERRIDE_KEYS = (
    'N', 'K', 'construction', 'design_param', 'reliability_file', 'good_fraction',
    'list_size', 'group_width', 'decision_enabled', 'adaptive', 'max_list_size', 'metric_mode',
    'crc', 'ebn0_db', 'max_frames', 'target_frame_errors', 'seed', 'workers', 'batch_frames',
)


def handle_simulate(options, logger):
    """
    Handler for simulate: runs a sweep from a config file and/or flags and
    writes the results CSV plus a JSON provenance document next to it.
    """
    route_name = "simulate"
    out_csv = Path(options.get('out') or 'results.csv')
    out_json = out_csv.with_suffix('.json')
    manifest = RunManifest(
        subcommand=route_name,
        options=options,
        input_paths=[options['config']] if options.get('config') else [],
        output_paths=[str(out_csv), str(out_json)],
    )
    exit_code = start_run(manifest, logger)
    if exit_code is not None:
        return exit_code

    try:
        overrides = {key: options.get(key) for key in SIM_OVERRIDE_KEYS}
        config = load_sim_config(options.get('config'), overrides)
        manifest.resolved_config = config.to_dict()

        cache = None if options.get('no_cache') else ResultCache()
        result = run_sweep(config, cache if cache is not None and cache.enabled else None)

        write_results_csv(result, out_csv)
        write_results_json(result, config, out_json)
        lines = [
            f"{p.ebn0_db:.2f} dB: FER={p.fer:.3e} ({p.frame_errors}/{p.frames}) BER={p.ber:.3e} "
            f"mean L={p.mean_list:.2f}" + (" [cached]" if p.cached else "")
            for p in result.points
        ]
        lines.extend(f"warning: {w}" for w in result.warnings)
        lines.append(f"results: {out_csv}, {out_json}")
        return format_success(route_name, lines, logger)

    except PolarKitError as e:
        return format_failure(route_name, e, logger)
