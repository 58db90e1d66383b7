from dataclasses import dataclass
from typing import Any, Dict


@dataclass
class CriticalSetModel:
    """Non-isolated singular set detected at a degenerate time"""
    label: str
    kind: str  # fixed-sphere, degenerate-circle, collapsed-level
    j_value: float
    h_value: float
    sample_count: int
    max_residual: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "kind": self.kind,
            "J": self.j_value,
            "H": self.h_value,
            "sample_count": self.sample_count,
            "max_residual": self.max_residual,
        }
