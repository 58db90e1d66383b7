from dataclasses import dataclass
from typing import Any, Dict, Optional


@dataclass
class HeightResultModel:
    """Heights (h1, h2) of the two focus-focus values"""
    h1: float
    h2: float
    fiber_height: float  # beta for W2, 2 R1 for S2 x S2
    quad_error: float  # absolute error bound reported by the quadrature
    oracle_value: Optional[float] = None  # Monte-Carlo h1
    oracle_stderr: Optional[float] = None
    oracle_samples: int = 0
    audit_h2: Optional[float] = None  # direct integral over the second fiber
    audit_gap: Optional[float] = None

    @property
    def conservation_gap(self) -> float:
        return abs(self.h1 + self.h2 - self.fiber_height)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "h1": self.h1,
            "h2": self.h2,
            "fiber_height": self.fiber_height,
            "quad_error": self.quad_error,
            "conservation_gap": self.conservation_gap,
            "oracle_value": self.oracle_value,
            "oracle_stderr": self.oracle_stderr,
            "oracle_samples": self.oracle_samples,
            "audit_h2": self.audit_h2,
            "audit_gap": self.audit_gap,
        }
