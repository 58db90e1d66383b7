from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np

from semitoric_families.enums.chart_id_enum import ChartIdEnum


@dataclass
class HessianBundleModel:
    """Second-order data of (J, H) at a fixed point, in Darboux chart coordinates"""
    label: str
    chart: ChartIdEnum
    times: Tuple[float, ...]
    d2j: np.ndarray  # 4x4 symmetric
    d2h: np.ndarray  # 4x4 symmetric
    omega: np.ndarray  # 4x4 antisymmetric
    step: float  # relative finite-difference step
    levels: int  # Richardson levels
    residual: float  # gradient residual of the point

    def linearisation(self, nu: float, mu: float) -> np.ndarray:
        """Omega^-1 (nu d2J + mu d2H)"""
        return np.linalg.solve(self.omega, nu * self.d2j + mu * self.d2h)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "chart": self.chart.name,
            "times": list(self.times),
            "d2J": self.d2j.tolist(),
            "d2H": self.d2h.tolist(),
            "omega": self.omega.tolist(),
            "step": self.step,
            "levels": self.levels,
            "residual": self.residual,
        }
