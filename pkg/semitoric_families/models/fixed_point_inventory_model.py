from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from semitoric_families.enums.system_id_enum import SystemIdEnum
from semitoric_families.models.critical_set_model import CriticalSetModel
from semitoric_families.models.fixed_point_model import FixedPointModel


@dataclass
class FixedPointInventoryModel:
    """All rank-zero points of a family at one parameter value"""
    system: SystemIdEnum
    times: Tuple[float, ...]  # (t,) or (s1, s2)
    points: List[FixedPointModel] = field(default_factory=list)
    critical_sets: List[CriticalSetModel] = field(default_factory=list)

    @property
    def labels(self) -> List[str]:
        return [p.label for p in self.points]

    @property
    def max_residual(self) -> float:
        return max((p.residual for p in self.points), default=0.0)

    def point(self, label: str) -> FixedPointModel:
        """
        Look up a fixed point by label

        Args:
            label: Fixed-point label such as "C" or "NS"

        Returns:
            FixedPointModel with that label

        Raises:
            KeyError: If the label is not in the inventory
        """
        for entry in self.points:
            if entry.label == label:
                return entry
        raise KeyError(f"no fixed point labelled {label} in {self.system.name} inventory")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "system": self.system.name,
            "times": list(self.times),
            "points": [p.to_dict() for p in self.points],
            "critical_sets": [c.to_dict() for c in self.critical_sets],
        }
