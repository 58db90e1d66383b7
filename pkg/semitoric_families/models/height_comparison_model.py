from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

CSV_HEADER = ["gamma", "h1_w2", "h1_s2", "err_quad", "err_mc"]


@dataclass
class HeightComparisonRow:
    gamma: float
    h1_w2: float
    h1_s2: float
    err_quad: float
    err_mc: Optional[float] = None

    def to_list(self) -> List[Any]:
        return [self.gamma, self.h1_w2, self.h1_s2, self.err_quad, "" if self.err_mc is None else self.err_mc]


@dataclass
class HeightComparisonModel:
    """h1 of W2(alpha, beta, gamma) against h1 of S2 x S2(R1, R2) at matched scalings"""
    r1: float
    r2: float
    alpha: float  # 2 (R2 - R1)
    beta: float  # 2 R1
    rows: List[HeightComparisonRow] = field(default_factory=list)
    gamma_star: Optional[float] = None  # crossing, when the difference changes sign
    monotone: bool = True  # h1_w2 strictly decreasing along the grid
    dropped: List[float] = field(default_factory=list)  # grid values without a real rho-

    @property
    def crossing(self) -> bool:
        return self.gamma_star is not None

    def csv_rows(self) -> List[List[Any]]:
        return [row.to_list() for row in self.rows]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "R1": self.r1,
            "R2": self.r2,
            "alpha": self.alpha,
            "beta": self.beta,
            "rows": [dict(zip(CSV_HEADER, row.to_list())) for row in self.rows],
            "gamma_star": self.gamma_star,
            "monotone": self.monotone,
            "dropped": list(self.dropped),
        }
