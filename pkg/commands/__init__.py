"""
Command handlers behind the CLI subcommands.
"""

from .construct_handler import handle_construct
from .codec_handler import handle_encode, handle_decode
from .analysis_handler import handle_analyze, handle_cost
from .simulate_handler import handle_simulate

__all__ = ['handle_construct', 'handle_encode', 'handle_decode', 'handle_analyze', 'handle_cost', 'handle_simulate']
