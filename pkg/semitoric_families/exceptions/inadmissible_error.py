from semitoric_families.exceptions.semitoric_error import SemitoricError


class InadmissibleError(SemitoricError):
    """Raised when a group action or comparison produces an inadmissible result"""
    pass
