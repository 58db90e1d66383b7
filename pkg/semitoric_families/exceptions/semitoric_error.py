class SemitoricError(Exception):
    """Base exception for semitoric family errors"""
    pass
