from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List


@dataclass
class SlopeAuditEntryModel:
    """Slope change at one top-boundary vertex"""
    vertex: List[str]
    slope_left: Fraction  # s_l
    slope_right: Fraction  # s_r
    weight_term: Fraction  # w_e
    focus_focus_count: int  # k

    @property
    def change(self) -> Fraction:
        return self.slope_right - self.slope_left

    @property
    def expected(self) -> Fraction:
        return self.weight_term - self.focus_focus_count

    @property
    def passed(self) -> bool:
        return self.change == self.expected


@dataclass
class SlopeAuditModel:
    """Slope-change audit over the top boundary"""
    entries: List[SlopeAuditEntryModel] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def entry_at(self, vertex: List[str]) -> SlopeAuditEntryModel:
        for entry in self.entries:
            if entry.vertex == vertex:
                return entry
        raise KeyError(f"no audited vertex {vertex}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "entries": [
                {
                    "vertex": e.vertex,
                    "change": str(e.change),
                    "expected": str(e.expected),
                    "passed": e.passed,
                }
                for e in self.entries
            ],
        }
