from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np


@dataclass
class ReducedCharPolyModel:
    """chi(Y) = Y^2 + c2 Y + c4, with char(A)(X) = chi(X^2)"""
    nu: float
    mu: float
    c2: float
    c4: float
    odd_residual: float  # max(|c1| / scale, |c3| / scale^3)
    scale: float  # max |entry| of A

    @property
    def discriminant(self) -> float:
        return self.c2 * self.c2 - 4.0 * self.c4

    @property
    def roots(self) -> Tuple[complex, complex]:
        """Roots Y1, Y2 of chi; the eigenvalues of A are +-sqrt(Y)"""
        y1, y2 = np.roots([1.0, self.c2, self.c4]).astype(complex)
        return complex(y1), complex(y2)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "nu": self.nu,
            "mu": self.mu,
            "c2": self.c2,
            "c4": self.c4,
            "discriminant": self.discriminant,
            "odd_residual": self.odd_residual,
            "scale": self.scale,
        }
