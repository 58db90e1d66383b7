from enum import IntEnum


class ChartIdEnum(IntEnum):
    """Coordinate chart of a manifold point"""
    S2_S2 = 1
    POLES_NN = 2
    POLES_NS = 3
    POLES_SN = 4
    POLES_SS = 5
    U13 = 6
    U14 = 7
    U23 = 8
    U24 = 9

    @property
    def is_hirzebruch(self) -> bool:
        """Chart U_{l,m} of a Hirzebruch surface"""
        return self in (ChartIdEnum.U13, ChartIdEnum.U14, ChartIdEnum.U23, ChartIdEnum.U24)

    @property
    def is_pole_chart(self) -> bool:
        """Darboux chart around a pole pair of S2 x S2"""
        return self in (ChartIdEnum.POLES_NN, ChartIdEnum.POLES_NS, ChartIdEnum.POLES_SN, ChartIdEnum.POLES_SS)
