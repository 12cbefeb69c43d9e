"""
Simulation configuration: schema, loading and flag/env precedence.

Documents are JSON, or YAML when the file suffix is .yaml/.yml. Precedence:
command-line overrides > document values > environment defaults > built-ins.
"""

import os
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import jsonschema
import yaml

from codec.construction import normalize_method
from codec.crc import CrcSpec, DEFAULT_CRC, parse_crc_flag
from decoders.config import DecoderConfig
from errors import CodeConstructionError, CrcError, DecoderConfigError, SimConfigError
from simple_version import get_version

logger = logging.getLogger(__name__)

DEFAULT_TARGET_FRAME_ERRORS = 100
DEFAULT_MAX_FRAMES = 100000

_INT_OR_HEX = {'anyOf': [{'type': 'integer', 'minimum': 0}, {'type': 'string', 'pattern': '^(0[xX])?[0-9a-fA-F]+$'}]}

SIM_CONFIG_SCHEMA = {
    'type': 'object',
    'properties': {
        'code': {
            'type': 'object',
            'properties': {
                'N': {'type': 'integer', 'minimum': 2},
                'K': {'type': 'integer', 'minimum': 1},
                'construction': {'type': 'string'},
                'design_param': {'type': ['number', 'null']},
                'reliability_file': {'type': ['string', 'null']},
                'good_fraction': {'type': 'number', 'minimum': 0, 'maximum': 1},
            },
            'required': ['N', 'K'],
            'additionalProperties': False,
        },
        'crc': {
            'anyOf': [
                {'type': 'null'},
                {'type': 'string'},
                {
                    'type': 'object',
                    'properties': {
                        'width': {'type': 'integer'},
                        'polynomial': _INT_OR_HEX,
                        'initial': _INT_OR_HEX,
                        'final_xor': _INT_OR_HEX,
                        'reflect_in': {'type': 'boolean'},
                        'reflect_out': {'type': 'boolean'},
                    },
                    'required': ['width', 'polynomial'],
                    'additionalProperties': False,
                },
            ]
        },
        'decoder': {
            'type': 'object',
            'properties': {
                'list_size': {'type': 'integer', 'minimum': 1},
                'group_width': {'type': 'integer', 'minimum': 1},
                'decision_enabled': {'type': 'boolean'},
                'adaptive': {'type': 'boolean'},
                'max_list_size': {'type': 'integer', 'minimum': 1},
                'metric_mode': {'type': 'string', 'enum': ['exact', 'min-approx']},
            },
            'additionalProperties': False,
        },
        'ebn0_db': {'type': 'array', 'items': {'type': 'number'}, 'minItems': 1},
        'max_frames': {'type': 'integer', 'minimum': 1},
        'target_frame_errors': {'type': 'integer', 'minimum': 1},
        'seed': {'type': 'integer', 'minimum': 0},
        'workers': {'type': 'integer', 'minimum': 1},
        'batch_frames': {'type': 'integer', 'minimum': 1},
    },
    'required': ['code', 'ebn0_db'],
    'additionalProperties': False,
}


@dataclass
class SimConfig:
    N: int
    K: int
    ebn0_db: List[float]
    construction: str = 'gaussian-approx'
    design_param: Optional[float] = None
    reliability_file: Optional[str] = None
    good_fraction: float = 0.0
    crc: Optional[CrcSpec] = DEFAULT_CRC
    decoder: DecoderConfig = field(default_factory=DecoderConfig)
    max_frames: int = DEFAULT_MAX_FRAMES
    target_frame_errors: int = DEFAULT_TARGET_FRAME_ERRORS
    seed: int = 0
    workers: int = 1
    batch_frames: int = 256

    @property
    def crc_width(self) -> int:
        return self.crc.width if self.crc is not None else 0

    @property
    def payload_bits(self) -> int:
        return self.K - self.crc_width

    @property
    def code_rate(self) -> float:
        """Payload bits per channel use; Eb refers to payload bits."""
        return self.payload_bits / self.N

    def validate(self) -> 'SimConfig':
        """
        Raises:
            SimConfigError: If any invariant is violated
        """
        if not self.ebn0_db:
            raise SimConfigError("At least one Eb/N0 value is required")
        if self.max_frames < 1:
            raise SimConfigError(f"max_frames must be >= 1, got {self.max_frames}")
        if self.target_frame_errors < 1:
            raise SimConfigError(f"target_frame_errors must be >= 1, got {self.target_frame_errors}")
        if self.workers < 1 or self.batch_frames < 1:
            raise SimConfigError("workers and batch_frames must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise SimConfigError(f"Seed must be a 64-bit unsigned integer, got {self.seed}")
        if not 0 < self.K <= self.N:
            raise SimConfigError(f"K={self.K} must be in [1, N={self.N}]")
        if self.payload_bits < 1:
            raise SimConfigError(f"K={self.K} leaves no payload next to a {self.crc_width}-bit CRC")
        if self.decoder.adaptive and self.crc is None:
            raise SimConfigError("Adaptive decoding needs a CRC")
        try:
            normalize_method(self.construction)
            self.decoder.validate(self.N)
        except (CodeConstructionError, DecoderConfigError) as e:
            raise SimConfigError(str(e)) from e
        return self

    def point_key(self, ebn0_db: float) -> Dict[str, Any]:
        """Everything that determines the result at one Eb/N0 (workers and batch size excluded)."""
        return {
            'N': self.N, 'K': self.K, 'construction': normalize_method(self.construction),
            'design_param': self.design_param, 'reliability_file': self.reliability_file,
            'good_fraction': self.good_fraction,
            'crc': None if self.crc is None else self.crc.to_dict(),
            'decoder': self.decoder.to_dict(),
            'ebn0_db': float(ebn0_db), 'max_frames': self.max_frames,
            'target_frame_errors': self.target_frame_errors, 'seed': self.seed,
            'tool_version': get_version(),
        }

    def to_dict(self) -> Dict[str, Any]:
        decoder = self.decoder.to_dict()
        decoder.pop('good_fraction', None)
        return {
            'code': {
                'N': self.N, 'K': self.K, 'construction': self.construction,
                'design_param': self.design_param, 'reliability_file': self.reliability_file,
                'good_fraction': self.good_fraction,
            },
            'crc': None if self.crc is None else self.crc.to_dict(),
            'decoder': decoder,
            'ebn0_db': [float(x) for x in self.ebn0_db],
            'max_frames': self.max_frames,
            'target_frame_errors': self.target_frame_errors,
            'seed': self.seed,
            'workers': self.workers,
            'batch_frames': self.batch_frames,
        }


def _parse_crc(value) -> Optional[CrcSpec]:
    if value is None:
        return None
    try:
        if isinstance(value, str):
            if value.lower() in ('none', 'off'):
                return None
            return parse_crc_flag(value)
        return CrcSpec.from_dict(value)
    except CrcError as e:
        raise SimConfigError(f"Invalid CRC specification: {e}") from e


def validate_document(document: Dict[str, Any]) -> None:
    try:
        jsonschema.validate(instance=document, schema=SIM_CONFIG_SCHEMA)
    except jsonschema.ValidationError as e:
        location = '.'.join(str(p) for p in e.absolute_path) or '<root>'
        raise SimConfigError(f"Invalid simulation config at {location}: {e.message}") from e


def config_from_document(document: Dict[str, Any]) -> SimConfig:
    """
    Build a SimConfig from a schema-valid document, filling gaps from the environment.

    Raises:
        SimConfigError: Schema or invariant violation
    """
    validate_document(document)
    code = document['code']
    good_fraction = float(code.get('good_fraction', 0.0))
    decoder_doc = dict(document.get('decoder', {}))
    decoder_doc['good_fraction'] = good_fraction
    decoder_doc.setdefault('decision_enabled', good_fraction > 0)

    config = SimConfig(
        N=int(code['N']),
        K=int(code['K']),
        ebn0_db=[float(x) for x in document['ebn0_db']],
        construction=code.get('construction', 'gaussian-approx'),
        design_param=code.get('design_param'),
        reliability_file=code.get('reliability_file'),
        good_fraction=good_fraction,
        crc=_parse_crc(document['crc']) if 'crc' in document else DEFAULT_CRC,
        decoder=DecoderConfig.from_dict(decoder_doc),
        max_frames=int(document.get('max_frames', DEFAULT_MAX_FRAMES)),
        target_frame_errors=int(document.get('target_frame_errors', DEFAULT_TARGET_FRAME_ERRORS)),
        seed=int(document.get('seed', 0)),
        workers=int(document.get('workers', os.getenv('SIM_WORKERS', 1))),
        batch_frames=int(document.get('batch_frames', os.getenv('SIM_BATCH_FRAMES', 256))),
    )
    return config.validate()


def read_document(path: Union[str, Path]) -> Dict[str, Any]:
    """Read a JSON or YAML config document."""
    path = Path(path)
    if not path.is_file():
        raise SimConfigError(f"Config file not found: {path}")
    try:
        with open(path, 'r', encoding='utf-8') as f:
            if path.suffix.lower() in ('.yaml', '.yml'):
                document = yaml.safe_load(f)
            else:
                document = json.load(f)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise SimConfigError(f"Cannot parse config file {path}: {e}") from e
    if not isinstance(document, dict):
        raise SimConfigError(f"Config file {path} must contain a mapping")
    return document


def apply_overrides(document: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
    """
    Merge flag values into a document; None values are ignored.

    Recognized keys: N, K, construction, design_param, reliability_file,
    good_fraction (code section); list_size, group_width, decision_enabled,
    adaptive, max_list_size, metric_mode (decoder section); crc, ebn0_db,
    max_frames, target_frame_errors, seed, workers, batch_frames (top level).
    """
    merged = json.loads(json.dumps(document))
    code = merged.setdefault('code', {})
    decoder = merged.setdefault('decoder', {})
    sections = {
        'N': code, 'K': code, 'construction': code, 'design_param': code,
        'reliability_file': code, 'good_fraction': code,
        'list_size': decoder, 'group_width': decoder, 'decision_enabled': decoder,
        'adaptive': decoder, 'max_list_size': decoder, 'metric_mode': decoder,
    }
    for key, value in overrides.items():
        if value is None:
            continue
        sections.get(key, merged)[key] = value
    if not decoder:
        merged.pop('decoder')
    return merged


def load_sim_config(path: Optional[Union[str, Path]] = None, overrides: Dict[str, Any] = None) -> SimConfig:
    """
    Load, override and validate a simulation config.

    Args:
        path: JSON/YAML document, or None to build from overrides only
        overrides: Flag values taking precedence over the document

    Returns:
        SimConfig: Validated configuration
    """
    document = read_document(path) if path is not None else {}
    document = apply_overrides(document, overrides or {})
    config = config_from_document(document)
    logger.debug(f"Resolved simulation config: {config.to_dict()}")
    return config
