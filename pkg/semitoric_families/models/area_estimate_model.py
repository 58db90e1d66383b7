from dataclasses import dataclass
from math import pi
from typing import Any, Dict


@dataclass
class AreaEstimateModel:
    """Monte-Carlo estimate of a reduced sub-level area"""
    area: float
    stderr: float
    samples: int
    total_area: float  # reduced area of the whole space
    seed: int

    @property
    def height(self) -> float:
        """Area divided by 2 pi"""
        return self.area / (2 * pi)

    @property
    def height_stderr(self) -> float:
        return self.stderr / (2 * pi)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "area": self.area,
            "stderr": self.stderr,
            "height": self.height,
            "samples": self.samples,
            "total_area": self.total_area,
            "seed": self.seed,
        }
