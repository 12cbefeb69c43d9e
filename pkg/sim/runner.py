"""
Monte-Carlo FER/BER sweep.

Frame i at every Eb/N0 draws its payload and noise from frame_generator(seed, i),
so results do not depend on the worker count or batch size. Frames are run
in batches; batches are consumed in frame order and a point stops at the
first frame index where the error target is reached (or at max_frames).
"""

import logging
from collections import deque
from concurrent.futures import Future, ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from cache.result_cache import ResultCache
from codec.channel import ChannelParams, frame_generator, transmit
from codec.construction import build_code
from codec.crc import crc_attach
from codec.polar_core import PolarCodeSpec, encode
from decoders.list_decoder import decode
from decoders.selection import adaptive_decode, select_output_path
from errors import SimConfigError
from .config import SimConfig
from .stats import PointResult, SimResult, check_fer_monotonic

logger = logging.getLogger(__name__)


@dataclass
class BatchOutcome:
    """Per-frame results of frames [start, start + len)."""
    start: int
    frame_errors: np.ndarray
    bit_errors: np.ndarray
    list_sizes: np.ndarray
    candidates: np.ndarray
    group_steps: np.ndarray


class SweepContext:
    """Everything a worker needs to simulate frames."""

    def __init__(self, config: SimConfig, code: PolarCodeSpec):
        self.config = config
        self.code = code

    def simulate_frame(self, ebn0_db: float, frame_index: int) -> tuple:
        config, code = self.config, self.code
        rng = frame_generator(config.seed, frame_index)
        payload = rng.integers(0, 2, size=config.payload_bits, dtype=np.uint8)
        info = crc_attach(payload, config.crc) if config.crc is not None else payload
        llrs = transmit(encode(info, code), ChannelParams(ebn0_db, config.code_rate, config.seed), rng)

        if config.decoder.adaptive:
            outcome = adaptive_decode(llrs, code, config.decoder, config.crc)
            decoded = outcome.payload
            list_size = outcome.final_list_size
            candidates, steps = outcome.candidates_sorted, outcome.group_steps
        else:
            result = decode(llrs, code, config.decoder)
            decoded = select_output_path(result, config.crc, code).payload
            list_size = config.decoder.list_size
            candidates, steps = result.stats.total_candidates, result.stats.groups

        bit_errors = int(np.count_nonzero(decoded != payload))
        return bit_errors > 0, bit_errors, list_size, candidates, steps

    def run_batch(self, ebn0_db: float, start: int, stop: int) -> BatchOutcome:
        rows = [self.simulate_frame(ebn0_db, i) for i in range(start, stop)]
        columns = list(zip(*rows))
        return BatchOutcome(
            start=start,
            frame_errors=np.array(columns[0], dtype=bool),
            bit_errors=np.array(columns[1], dtype=np.int64),
            list_sizes=np.array(columns[2], dtype=np.int64),
            candidates=np.array(columns[3], dtype=np.int64),
            group_steps=np.array(columns[4], dtype=np.int64),
        )


# Worker-process state, set once per worker by the pool initializer
_worker_context: Optional[SweepContext] = None


def _init_worker(context: SweepContext) -> None:
    global _worker_context
    _worker_context = context


def _worker_batch(ebn0_db: float, start: int, stop: int) -> BatchOutcome:
    return _worker_context.run_batch(ebn0_db, start, stop)


def build_sim_code(config: SimConfig) -> PolarCodeSpec:
    return build_code(config.N, config.K, config.good_fraction, config.construction,
                      config.design_param, config.reliability_file)


def _accumulate(point: PointResult, batch: BatchOutcome, target: int) -> bool:
    """Add a batch to the totals, truncating at the frame that meets the target. Returns True when done."""
    remaining = target - point.frame_errors
    cumulative = np.cumsum(batch.frame_errors)
    hits = np.flatnonzero(cumulative >= remaining)
    used = int(hits[0]) + 1 if hits.size else batch.frame_errors.size

    point.frames += used
    point.frame_errors += int(cumulative[used - 1]) if used else 0
    point.bit_errors += int(batch.bit_errors[:used].sum())
    point.list_size_sum += int(batch.list_sizes[:used].sum())
    point.candidates_sorted += int(batch.candidates[:used].sum())
    point.group_steps += int(batch.group_steps[:used].sum())
    return bool(hits.size)


def run_point(config: SimConfig, ebn0_db: float, submit: Callable[[float, int, int], Future],
              window: int = 1) -> PointResult:
    """
    Simulate one Eb/N0 until target_frame_errors or max_frames.

    Args:
        config: Simulation config
        ebn0_db: Point to simulate
        submit: Schedules frames [start, stop) and returns a future BatchOutcome
        window: Number of batches kept in flight
    """
    point = PointResult(ebn0_db=float(ebn0_db), payload_bits=config.payload_bits)
    pending = deque()
    next_start = 0
    done = False
    while not done:
        while len(pending) < window and next_start < config.max_frames:
            stop = min(next_start + config.batch_frames, config.max_frames)
            pending.append(submit(ebn0_db, next_start, stop))
            next_start = stop
        if not pending:
            break
        batch = pending.popleft().result()
        done = _accumulate(point, batch, config.target_frame_errors)
        logger.info(f"Eb/N0={ebn0_db} dB: {point.frames} frames, {point.frame_errors} frame errors")
    for future in pending:
        future.cancel()
    return point


def _inline_submit(context: SweepContext) -> Callable[[float, int, int], Future]:
    def submit(ebn0_db: float, start: int, stop: int) -> Future:
        future = Future()
        future.set_result(context.run_batch(ebn0_db, start, stop))
        return future
    return submit


def run_sweep(config: SimConfig, cache: Optional[ResultCache] = None) -> SimResult:
    """
    Run every Eb/N0 point of a configuration.

    Args:
        config: Validated simulation config
        cache: Optional result cache consulted per point

    Returns:
        SimResult: One PointResult per Eb/N0 in config order, plus monotonicity warnings

    Raises:
        SimConfigError: If the configuration is invalid
    """
    config.validate()
    code = build_sim_code(config)
    if code.K != config.K:
        raise SimConfigError(f"Constructed code has K={code.K}, expected {config.K}")
    context = SweepContext(config, code)
    logger.info(f"▶️ Sweep N={config.N} K={config.K} (payload {config.payload_bits}) over "
                f"{len(config.ebn0_db)} Eb/N0 points with {config.workers} worker(s)")

    executor = None
    if config.workers > 1:
        executor = ProcessPoolExecutor(max_workers=config.workers, initializer=_init_worker,
                                       initargs=(context,))

        def submit(ebn0, start, stop):
            return executor.submit(_worker_batch, ebn0, start, stop)
    else:
        submit = _inline_submit(context)

    result = SimResult()
    try:
        for ebn0_db in config.ebn0_db:
            key = config.point_key(ebn0_db)
            record = cache.get(key) if cache is not None else None
            if record is not None:
                point = PointResult.from_record(record, cached=True)
            else:
                point = run_point(config, ebn0_db, submit, window=2 * config.workers)
                if cache is not None:
                    cache.set(key, point.to_record())
            result.points.append(point)
            logger.info(f"✅ Eb/N0={ebn0_db} dB done: FER={point.fer:.3e} BER={point.ber:.3e} "
                        f"({point.frame_errors}/{point.frames})")
    finally:
        if executor is not None:
            executor.shutdown(wait=True, cancel_futures=True)

    result.warnings = check_fer_monotonic(result.points)
    for message in result.warnings:
        logger.warning(f"⚠️ {message}")
    return result
