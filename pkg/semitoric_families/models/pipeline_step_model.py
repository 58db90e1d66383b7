from dataclasses import dataclass
from fractions import Fraction
import json
from typing import Any, Dict, List

from semitoric_families.enums.pipeline_operation_enum import PipelineOperationEnum
from semitoric_families.rational_geometry import rat_to_str


@dataclass
class PipelineStepModel:
    """One chop or unchop applied to one regime polygon"""
    stage: int
    regime: str  # below, transition, above
    operation: PipelineOperationEnum
    site: List[List[str]]  # vertex, or the two endpoints of an edge
    size: Fraction  # lambda
    polygon_before: Dict[str, Any]
    polygon_after: Dict[str, Any]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "stage": self.stage,
            "regime": self.regime,
            "op": self.operation.name.lower(),
            "site": self.site,
            "lambda": rat_to_str(self.size),
            "polygon_before": self.polygon_before,
            "polygon_after": self.polygon_after,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
