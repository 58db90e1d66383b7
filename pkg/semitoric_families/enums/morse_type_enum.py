from enum import IntEnum


class MorseTypeEnum(IntEnum):
    """Morse type of a critical point of a reduced Hamiltonian"""
    ELLIPTIC = 1
    HYPERBOLIC = 2
    DEGENERATE = 3
