from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import numpy as np

from semitoric_families.enums.system_id_enum import SystemIdEnum


@dataclass
class MomentumImageModel:
    """Sampled image of the momentum map at one parameter value"""
    system: SystemIdEnum
    times: Tuple[float, ...]
    j_values: np.ndarray
    h_values: np.ndarray
    envelope: List[Tuple[float, float, float]] = field(default_factory=list)  # (J bin centre, H min, H max)
    overlays: List[Tuple[str, float, float]] = field(default_factory=list)  # (label, J, H)

    @property
    def j_range(self) -> Tuple[float, float]:
        return float(np.min(self.j_values)), float(np.max(self.j_values))

    @property
    def h_range(self) -> Tuple[float, float]:
        return float(np.min(self.h_values)), float(np.max(self.h_values))

    def csv_rows(self) -> List[List[Any]]:
        """Rows for the columns t, s1, s2, J, H, stratum"""
        if len(self.times) == 1:
            t, s1, s2 = self.times[0], "", ""
        else:
            t, (s1, s2) = "", self.times
        rows = [[t, s1, s2, float(j), float(h), "grid"] for j, h in zip(self.j_values, self.h_values)]
        rows.extend([t, s1, s2, j, h, label] for label, j, h in self.overlays)
        return rows

    def to_dict(self) -> Dict[str, Any]:
        return {
            "system": self.system.name,
            "times": list(self.times),
            "sample_count": int(self.j_values.size),
            "envelope": [list(row) for row in self.envelope],
            "overlays": [{"label": label, "J": j, "H": h} for label, j, h in self.overlays],
        }
