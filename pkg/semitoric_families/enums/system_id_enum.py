from enum import IntEnum


class SystemIdEnum(IntEnum):
    """Explicit system families"""
    COUPLED_ANGULAR = 1
    HP_TWO_PARAM = 2
    W1_MOVING_AB = 3
    W1_SWITCH = 4
    W1_HYPERBOLIC = 5
    W2_TRANS_B = 6
    W2_TRANS_C = 7
    W2_TWO_PARAM = 8
    DEGEN_APPEARANCE = 9
    DEGEN_BECOME = 10
    DEGEN_COLLAPSE = 11
