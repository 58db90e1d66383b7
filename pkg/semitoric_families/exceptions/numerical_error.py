from typing import Any, Dict, Optional

from semitoric_families.exceptions.semitoric_error import SemitoricError


class NumericalError(SemitoricError):
    """Raised when a root bracket or numerical search fails"""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        self.diagnostics = diagnostics or {}
        super().__init__(message)
