from dataclasses import dataclass
from typing import Any, Dict


@dataclass
class CriterionResultModel:
    """Outcome of one acceptance criterion of validate-all"""
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "seconds": round(self.seconds, 3)}
