from dataclasses import dataclass
from typing import Any, Dict


@dataclass
class TransitionBracketModel:
    """Coupled-spins transition times on W_0(alpha', beta) recorded by the pipeline"""
    alpha: float
    alpha_prime: float
    beta: float
    t_minus: float
    t_plus: float
    lower_bound: float  # beta / (2 beta + alpha + 2 sqrt(alpha beta))

    @property
    def lower_bound_holds(self) -> bool:
        return self.lower_bound <= self.t_minus

    @property
    def brackets_half(self) -> bool:
        return self.t_minus < 0.5 < self.t_plus

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alpha": self.alpha,
            "alpha_prime": self.alpha_prime,
            "beta": self.beta,
            "t_minus": self.t_minus,
            "t_plus": self.t_plus,
            "lower_bound": self.lower_bound,
            "lower_bound_holds": self.lower_bound_holds,
            "brackets_half": self.brackets_half,
        }
