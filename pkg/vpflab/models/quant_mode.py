"""
Coding mode enum for the scalar quantizer
"""

from enum import Enum


class QuantMode(str, Enum):
    """Coding mode that selects the de-quantization rule"""

    INTRA = "intra"
    INTER = "inter"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_string(cls, value: str) -> "QuantMode":
        """Create QuantMode from string value"""
        for mode in cls:
            if mode.value == value.lower():
                return mode
        raise ValueError(f"Invalid quantization mode: {value}")
