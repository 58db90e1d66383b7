from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np

from semitoric_families.enums.williamson_type_enum import WilliamsonTypeEnum


@dataclass
class RegionDiagramModel:
    """Verdict pairs for B and C over an (s1, s2) grid"""
    s_values: np.ndarray  # grid along both axes
    verdicts_b: np.ndarray  # int array of WilliamsonTypeEnum values, indexed [i1, i2]
    verdicts_c: np.ndarray
    region_counts: Dict[str, int] = field(default_factory=dict)  # connected open regions per verdict pair

    def pair(self, i1: int, i2: int) -> str:
        b = WilliamsonTypeEnum(int(self.verdicts_b[i1, i2]))
        c = WilliamsonTypeEnum(int(self.verdicts_c[i1, i2]))
        return f"{b.short_name}/{c.short_name}"

    @property
    def open_region_count(self) -> int:
        return sum(self.region_counts.values())

    def csv_rows(self) -> List[List[Any]]:
        """Rows for the columns s1, s2, B, C"""
        rows = []
        for i1, s1 in enumerate(self.s_values):
            for i2, s2 in enumerate(self.s_values):
                rows.append([
                    float(s1), float(s2),
                    WilliamsonTypeEnum(int(self.verdicts_b[i1, i2])).short_name,
                    WilliamsonTypeEnum(int(self.verdicts_c[i1, i2])).short_name,
                ])
        return rows

    def to_dict(self) -> Dict[str, Any]:
        return {
            "grid": len(self.s_values),
            "region_counts": dict(self.region_counts),
            "open_region_count": self.open_region_count,
        }
