from dataclasses import dataclass
from typing import Any, Dict, Optional

from semitoric_families.enums.system_id_enum import SystemIdEnum


@dataclass
class ProfileCertificateModel:
    """Evidence that the radial profile f is negative on the open reduced domain"""
    system: SystemIdEnum
    j_value: float
    grid_points: int
    max_f: float  # largest sampled value of f
    margin: float  # -max_f relative to the largest |f| on the grid
    exact_identity: Optional[bool] = None  # W1 discriminant identity at rational samples
    identity_samples: int = 0
    polynomial_match: Optional[bool] = None  # f/4 equals the closed-form quadratic in j
    numerical: bool = True  # False only when the exact checks carry the claim

    @property
    def negative(self) -> bool:
        return self.max_f < 0.0

    @property
    def passed(self) -> bool:
        exact = self.exact_identity is not False and self.polynomial_match is not False
        return exact and self.negative

    def to_dict(self) -> Dict[str, Any]:
        return {
            "system": self.system.name,
            "j": self.j_value,
            "grid_points": self.grid_points,
            "max_f": self.max_f,
            "margin": self.margin,
            "negative": self.negative,
            "exact_identity": self.exact_identity,
            "identity_samples": self.identity_samples,
            "polynomial_match": self.polynomial_match,
            "numerical": self.numerical,
            "passed": self.passed,
        }
