from dataclasses import dataclass
from typing import Any, Dict

from semitoric_families.models.chart_point_model import ChartPointModel


@dataclass
class FixedPointModel:
    """Labelled rank-zero point with its momentum image"""
    label: str  # A, B, C, D, NN, NS, ...
    point: ChartPointModel
    j_value: float
    h_value: float
    residual: float = 0.0  # max |dJ|, |dH| in chart coordinates

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "point": self.point.to_dict(),
            "J": self.j_value,
            "H": self.h_value,
            "residual": self.residual,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FixedPointModel':
        return cls(
            label=data["label"],
            point=ChartPointModel.from_dict(data["point"]),
            j_value=float(data["J"]),
            h_value=float(data["H"]),
            residual=float(data.get("residual", 0.0)),
        )
