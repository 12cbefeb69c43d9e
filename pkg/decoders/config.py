"""
Decoder configuration.
"""

from dataclasses import asdict, dataclass, replace
from typing import List

from codec.polar_core import is_power_of_two
from errors import DecoderConfigError
from .kernels import EXACT, METRIC_MODES


@dataclass(frozen=True)
class DecoderConfig:
    """
    List size L, group width m, decision-aided and adaptive switches.

    With group_width=1 and decision disabled this is the serial SC-List
    decoder; with list_size=1 as well it is plain SC.

    good_fraction records how the code was planned. The good set itself comes
    from the code (PolarCodeSpec.good_mask) and decode never reads this field.
    """
    list_size: int = 8
    group_width: int = 4
    good_fraction: float = 0.0
    decision_enabled: bool = False
    adaptive: bool = False
    max_list_size: int = 32
    metric_mode: str = EXACT

    @property
    def L(self) -> int:
        return self.list_size

    @property
    def m(self) -> int:
        return self.group_width

    @property
    def L_max(self) -> int:
        return self.max_list_size

    def validate(self, N: int = None) -> 'DecoderConfig':
        if self.list_size < 1:
            raise DecoderConfigError(f"List size must be >= 1, got {self.list_size}")
        if not is_power_of_two(self.group_width):
            raise DecoderConfigError(f"Group width m must be a power of two, got {self.group_width}")
        if N is not None and N % self.group_width != 0:
            raise DecoderConfigError(f"Group width m={self.group_width} does not divide N={N}")
        if not 0.0 <= self.good_fraction <= 1.0:
            raise DecoderConfigError(f"Good fraction must be in [0, 1], got {self.good_fraction}")
        if self.metric_mode not in METRIC_MODES:
            raise DecoderConfigError(f"Metric mode must be one of {METRIC_MODES}, got '{self.metric_mode}'")
        if self.adaptive and self.max_list_size < self.list_size:
            raise DecoderConfigError(
                f"Maximum list size {self.max_list_size} is below the list size {self.list_size}"
            )
        return self

    def with_list_size(self, list_size: int) -> 'DecoderConfig':
        return replace(self, list_size=list_size)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> 'DecoderConfig':
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        return cls(**known)


def schedule_list_sizes(max_list_size: int) -> List[int]:
    """Adaptive schedule 1, 2, 4, ... up to max_list_size (appended if not a power of two)."""
    if max_list_size < 1:
        raise DecoderConfigError(f"Maximum list size must be >= 1, got {max_list_size}")
    sizes = []
    size = 1
    while size <= max_list_size:
        sizes.append(size)
        size *= 2
    if sizes[-1] != max_list_size:
        sizes.append(max_list_size)
    return sizes
