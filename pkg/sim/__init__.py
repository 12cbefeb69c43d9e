"""
Simulation package: configuration, Monte-Carlo sweeps, statistics and persistence.
"""

from .config import SimConfig, load_sim_config, config_from_document
from .stats import PointResult, SimResult, confidence_interval, check_fer_monotonic
from .runner import run_sweep, run_point, build_sim_code
from .persistence import write_results_csv, write_results_json, read_results_json

__all__ = [
    'SimConfig', 'load_sim_config', 'config_from_document',
    'PointResult', 'SimResult', 'confidence_interval', 'check_fer_monotonic',
    'run_sweep', 'run_point', 'build_sim_code',
    'write_results_csv', 'write_results_json', 'read_results_json',
]
