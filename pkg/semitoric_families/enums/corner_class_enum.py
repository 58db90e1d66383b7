from enum import IntEnum


class CornerClassEnum(IntEnum):
    """Corner type of a polygon vertex"""
    DELZANT = 1
    HIDDEN = 2
    FAKE = 3
    INVALID = 4
