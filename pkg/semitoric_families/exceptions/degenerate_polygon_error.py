from semitoric_families.exceptions.domain_error import DomainError


class DegeneratePolygonError(DomainError):
    """Raised when a point set does not span a 2-dimensional polygon"""
    pass
