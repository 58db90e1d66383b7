from semitoric_families.exceptions.semitoric_error import SemitoricError


class DomainError(SemitoricError):
    """Raised when an input lies outside the domain of an operation"""
    pass
