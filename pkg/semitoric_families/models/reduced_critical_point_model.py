from dataclasses import dataclass, field
from typing import Any, Dict, List

from semitoric_families.enums.morse_type_enum import MorseTypeEnum


@dataclass
class ReducedCriticalPointModel:
    """Critical point of a reduced Hamiltonian on M_j^red"""
    rho: float
    theta: float  # 0 or pi for radial-search points
    morse_type: MorseTypeEnum
    residual: float  # max of |dH/drho|, |dH/dtheta|
    hessian: List[List[float]] = field(default_factory=list)  # [[H_rr, H_rt], [H_rt, H_tt]]
    pole: bool = False  # rho at an end of the parametrisation domain
    value: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rho": self.rho,
            "theta": self.theta,
            "morse_type": self.morse_type.name,
            "residual": self.residual,
            "hessian": self.hessian,
            "pole": self.pole,
            "value": self.value,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ReducedCriticalPointModel':
        return cls(
            rho=float(data["rho"]),
            theta=float(data["theta"]),
            morse_type=MorseTypeEnum[data["morse_type"]],
            residual=float(data["residual"]),
            hessian=[[float(v) for v in row] for row in data.get("hessian", [])],
            pole=bool(data.get("pole", False)),
            value=float(data.get("value", 0.0)),
        )
