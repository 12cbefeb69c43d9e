"""
Handlers for the file-based single-block encode and decode commands.
"""

from codec.channel import ChannelParams, frame_generator, transmit
from codec.crc import crc_attach
from codec.polar_core import encode
from decoders.config import DecoderConfig
from decoders.list_decoder import decode
from decoders.ml import exhaustive_ml_decode
from decoders.selection import adaptive_decode, select_output_path
from errors import CrcError, PolarKitError
from utils import read_bits_file, read_llr_file, validate_code_parameters, write_bits_file, write_llr_file
from .handler_utils import (
    RunManifest, code_from_options, crc_payload_length, format_failure, format_success, parse_crc_option,
    format_usage_error, start_run,
)


def handle_encode(options, logger):
    """
    Handler for encode: payload bits in, codeword bits out (CRC attached first
    when configured). With --llr-out the codeword is also sent through the
    AWGN channel at the first --ebn0 value and the LLRs are written.
    """
    route_name = "encode"
    is_valid, error_message = validate_code_parameters(options.get('N'), options.get('K'))
    if not is_valid:
        return format_usage_error(route_name, error_message, logger)
    if options.get('K') is None or not options.get('input') or not options.get('out'):
        return format_usage_error(route_name, "encode needs --K, --in and --out.", logger)
    if options.get('llr_out') and not options.get('ebn0'):
        return format_usage_error(route_name, "--llr-out needs --ebn0.", logger)
    try:
        crc = parse_crc_option(options.get('crc'))
    except CrcError as e:
        return format_usage_error(route_name, str(e), logger)

    outputs = [options['out']] + ([options['llr_out']] if options.get('llr_out') else [])
    manifest = RunManifest(subcommand=route_name, options=options,
                           input_paths=[options['input']], output_paths=outputs)
    exit_code = start_run(manifest, logger)
    if exit_code is not None:
        return exit_code

    try:
        code = code_from_options(options)
        payload = read_bits_file(options['input'], crc_payload_length(code.K, crc))
        info = crc_attach(payload, crc) if crc is not None else payload
        codeword = encode(info, code)
        write_bits_file(options['out'], codeword)
        lines = [f"encoded {payload.size} payload bits into {codeword.size} code bits: {options['out']}"]

        if options.get('llr_out'):
            ebn0 = options['ebn0'][0]
            params = ChannelParams(ebn0, payload.size / code.N, options.get('seed') or 0)
            llrs = transmit(codeword, params, frame_generator(params.seed, 0))
            write_llr_file(options['llr_out'], llrs)
            lines.append(f"channel LLRs at Eb/N0={ebn0} dB (seed {params.seed}): {options['llr_out']}")
        return format_success(route_name, lines, logger)

    except PolarKitError as e:
        return format_failure(route_name, e, logger)


def decoder_config_from_options(options) -> DecoderConfig:
    good_fraction = options.get('good_fraction') or 0.0
    decision = options.get('decision')
    return DecoderConfig(
        list_size=options.get('list_size') or 8,
        group_width=options.get('m') or 4,
        good_fraction=good_fraction,
        decision_enabled=(good_fraction > 0) if decision is None else decision,
        adaptive=bool(options.get('adaptive')),
        max_list_size=options.get('max_list_size') or 32,
        metric_mode=options.get('metric_mode') or 'exact',
    )


def handle_decode(options, logger):
    """
    Handler for decode: channel LLRs in, payload bits out (CRC stripped).
    """
    route_name = "decode"
    is_valid, error_message = validate_code_parameters(
        options.get('N'), options.get('K'), options.get('m'), options.get('good_fraction'),
        options.get('list_size'),
    )
    if not is_valid:
        return format_usage_error(route_name, error_message, logger)
    if options.get('K') is None or not options.get('input') or not options.get('out'):
        return format_usage_error(route_name, "decode needs --K, --in and --out.", logger)
    try:
        crc = parse_crc_option(options.get('crc'))
    except CrcError as e:
        return format_usage_error(route_name, str(e), logger)
    if options.get('adaptive') and crc is None:
        return format_usage_error(route_name, "--adaptive needs --crc.", logger)

    manifest = RunManifest(subcommand=route_name, options=options,
                           input_paths=[options['input']], output_paths=[options['out']])
    exit_code = start_run(manifest, logger)
    if exit_code is not None:
        return exit_code

    try:
        code = code_from_options(options)
        llrs = read_llr_file(options['input'], code.N)
        config = decoder_config_from_options(options).validate(code.N)
        manifest.resolved_config = config.to_dict()

        if options.get('ml'):
            ml = exhaustive_ml_decode(llrs, code)
            payload = ml.payload[:crc_payload_length(code.K, crc)]
            lines = [f"exhaustive ML over {1 << code.K} codewords, metric {ml.metric:.4f}"]
        elif config.adaptive:
            outcome = adaptive_decode(llrs, code, config, crc)
            payload = outcome.payload
            lines = [f"adaptive list sizes tried: {outcome.trace}",
                     f"crc: {'pass' if outcome.crc_passed else 'FAIL'}"]
        else:
            result = decode(llrs, code, config)
            selected = select_output_path(result, crc, code)
            payload = selected.payload
            lines = [f"L={config.list_size} m={config.m} decision={'on' if config.decision_enabled else 'off'}: "
                     f"{result.stats.total_candidates} candidates sorted",
                     f"selected path {selected.index} metric {selected.metric:.4f}"]
            if crc is not None:
                lines.append(f"crc: {'pass' if selected.crc_passed else 'FAIL'}")

        write_bits_file(options['out'], payload)
        lines.append(f"payload ({payload.size} bits): {options['out']}")
        return format_success(route_name, lines, logger)

    except PolarKitError as e:
        return format_failure(route_name, e, logger)
