from dataclasses import dataclass
from typing import Any, Dict, List, Optional


@dataclass
class ViolationModel:
    """One failed condition of a marked polygon"""
    kind: str  # mark-sign, mark-order, mark-not-interior, cut-meets-edge, cut-corner, corner-not-delzant
    message: str
    location: Optional[List[str]] = None  # ["num/den", "num/den"]
    mark_index: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "message": self.message,
            "location": self.location,
            "mark_index": self.mark_index,
        }
