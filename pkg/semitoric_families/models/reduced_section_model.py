from dataclasses import dataclass
from typing import Any, Dict, List

import numpy as np


@dataclass
class ReducedSectionModel:
    """The Y = 0 section of M_j^red as two curves X = +-sqrt(relation) over R"""
    j_value: float
    r_values: np.ndarray
    x_upper: np.ndarray
    x_lower: np.ndarray

    def csv_rows(self) -> List[List[float]]:
        """Rows for the columns j, R, X_upper, X_lower"""
        return [
            [self.j_value, float(r), float(xu), float(xl)]
            for r, xu, xl in zip(self.r_values, self.x_upper, self.x_lower)
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "j": self.j_value,
            "R": self.r_values.tolist(),
            "X_upper": self.x_upper.tolist(),
            "X_lower": self.x_lower.tolist(),
        }
