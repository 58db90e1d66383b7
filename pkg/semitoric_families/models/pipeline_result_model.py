from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

from semitoric_families.models.family_polygon_triple_model import FamilyPolygonTripleModel
from semitoric_families.models.pipeline_step_model import PipelineStepModel
from semitoric_families.models.transition_bracket_model import TransitionBracketModel
from semitoric_families.rational_geometry import rat_to_str


@dataclass
class PipelineResultModel:
    """Final triple of a Hirzebruch pipeline run with its step log"""
    triple: FamilyPolygonTripleModel
    alpha_prime: Fraction
    steps: List[PipelineStepModel] = field(default_factory=list)
    brackets: List[TransitionBracketModel] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alpha_prime": rat_to_str(self.alpha_prime),
            "triple": self.triple.to_dict(),
            "brackets": [b.to_dict() for b in self.brackets],
        }
