from typing import Optional

from semitoric_families.exceptions.semitoric_error import SemitoricError


class InfeasibleError(SemitoricError):
    """Raised when a corner chop or unchop cannot be performed"""

    def __init__(self, obstruction: str, stage: Optional[int] = None):
        self.obstruction = obstruction
        self.stage = stage
        message = obstruction if stage is None else f"stage {stage}: {obstruction}"
        super().__init__(message)
