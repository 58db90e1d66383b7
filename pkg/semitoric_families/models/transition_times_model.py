from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from semitoric_families.enums.system_id_enum import SystemIdEnum


@dataclass
class TransitionTimesModel:
    """Degenerate times t- < t+ of the transition point"""
    system: SystemIdEnum
    label: str  # transition point
    t_minus: float
    t_plus: float
    method: str  # "closed-form" when a formula exists, else "bisection"
    bisection: Tuple[float, float]
    closed_form: Optional[Tuple[float, float]] = None

    @property
    def gap(self) -> Optional[float]:
        """Largest disagreement between the two methods"""
        if self.closed_form is None:
            return None
        return max(abs(a - b) for a, b in zip(self.closed_form, self.bisection))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "system": self.system.name,
            "point": self.label,
            "t_minus": self.t_minus,
            "t_plus": self.t_plus,
            "method": self.method,
            "closed_form": None if self.closed_form is None else list(self.closed_form),
            "bisection": list(self.bisection),
            "gap": self.gap,
        }
