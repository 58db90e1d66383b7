from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from semitoric_families.enums.corner_class_enum import CornerClassEnum
from semitoric_families.models.violation_model import ViolationModel


@dataclass
class ValidityReportModel:
    """Result of validating a marked weighted polygon"""
    violations: List[ViolationModel] = field(default_factory=list)
    corner_classes: List[Tuple[List[str], CornerClassEnum]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def cut_corner_count(self) -> int:
        """Number of Fake or Hidden corners"""
        return sum(1 for _, cls in self.corner_classes if cls in (CornerClassEnum.FAKE, CornerClassEnum.HIDDEN))

    def kinds(self) -> List[str]:
        return [v.kind for v in self.violations]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "valid": self.valid,
            "violations": [v.to_dict() for v in self.violations],
            "corners": [{"vertex": vertex, "class": cls.name} for vertex, cls in self.corner_classes],
        }
