from enum import IntEnum


class RankOneTypeEnum(IntEnum):
    """Transverse type of a rank-one point"""
    ELLIPTIC_TRANSVERSE = 1
    HYPERBOLIC_TRANSVERSE = 2
    DEGENERATE = 3
