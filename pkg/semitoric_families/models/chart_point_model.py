from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from semitoric_families.enums.chart_id_enum import ChartIdEnum


@dataclass
class ChartPointModel:
    """A manifold point in one chart, with its ambient representative"""
    chart: ChartIdEnum
    coords: List[float]  # (x_p, y_p, x_q, y_q), or (x1, y1, z1, x2, y2, z2) for S2_S2
    representative: Optional[List[complex]] = None  # [u1, u2, u3, u4] on N^-1(0)
    residual: float = 0.0  # N-level or sphere-constraint residual

    def to_dict(self) -> Dict[str, Any]:
        return {
            "chart": self.chart.name,
            "coords": list(self.coords),
            "representative": None if self.representative is None else [
                [z.real, z.imag] for z in self.representative
            ],
            "residual": self.residual,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ChartPointModel':
        """
        Create from a dictionary produced by to_dict

        Args:
            data: Dictionary with chart, coords and optional representative

        Returns:
            ChartPointModel instance
        """
        rep = data.get("representative")
        return cls(
            chart=ChartIdEnum[data["chart"]],
            coords=[float(c) for c in data["coords"]],
            representative=None if rep is None else [complex(re, im) for re, im in rep],
            residual=float(data.get("residual", 0.0)),
        )
