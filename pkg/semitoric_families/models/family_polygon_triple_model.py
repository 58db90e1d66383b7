from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict

from semitoric_families.semitoric_polygon import MarkedWeightedPolygon


@dataclass(frozen=True)
class FamilyPolygonTripleModel:
    """Marked semitoric polygons of a 1-transition family in its three regimes"""
    below: MarkedWeightedPolygon  # t < t-
    transition: MarkedWeightedPolygon  # t- < t < t+, one upward mark
    above: MarkedWeightedPolygon  # t > t+

    @property
    def mark_ordinate(self) -> Fraction:
        return self.transition.marks[0].point[1]

    def regimes(self) -> Dict[str, MarkedWeightedPolygon]:
        return {"below": self.below, "transition": self.transition, "above": self.above}

    def to_dict(self) -> Dict[str, Any]:
        return {name: mp.to_json() for name, mp in self.regimes().items()}
