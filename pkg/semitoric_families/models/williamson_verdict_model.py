from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from semitoric_families.enums.williamson_type_enum import WilliamsonTypeEnum


@dataclass
class WilliamsonVerdictModel:
    """Williamson type of a rank-zero point with its witness"""
    label: str
    times: Tuple[float, ...]
    williamson_type: WilliamsonTypeEnum
    witness: Optional[Tuple[float, float]] = None  # (nu, mu) that produced the verdict
    roots: List[complex] = field(default_factory=list)  # roots of chi at the witness
    margin: float = 0.0  # margin the witness passed, relative to scale
    consistent: bool = True  # every direction with a verdict agreed
    structural: Optional[bool] = None  # for DEGENERATE: still degenerate at the strict margin
    odd_residual: float = 0.0

    @property
    def short_name(self) -> str:
        return self.williamson_type.short_name

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": self.label,
            "t": list(self.times),
            "type": self.williamson_type.name,
            "witness_nu_mu": None if self.witness is None else list(self.witness),
            "roots": [[r.real, r.imag] for r in self.roots],
            "margins": {"margin": self.margin, "odd_residual": self.odd_residual},
            "consistent": self.consistent,
            "structural": self.structural,
        }
