from enum import IntEnum


class WilliamsonTypeEnum(IntEnum):
    """Williamson type of a rank-zero point"""
    ELLIPTIC_ELLIPTIC = 1
    FOCUS_FOCUS = 2
    ELLIPTIC_HYPERBOLIC = 3
    HYPERBOLIC_HYPERBOLIC = 4
    DEGENERATE = 5

    @property
    def short_name(self) -> str:
        """Two-letter label used in reports"""
        return {
            WilliamsonTypeEnum.ELLIPTIC_ELLIPTIC: "EE",
            WilliamsonTypeEnum.FOCUS_FOCUS: "FF",
            WilliamsonTypeEnum.ELLIPTIC_HYPERBOLIC: "EH",
            WilliamsonTypeEnum.HYPERBOLIC_HYPERBOLIC: "HH",
            WilliamsonTypeEnum.DEGENERATE: "DG",
        }[self]
