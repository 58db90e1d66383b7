from enum import IntEnum


class PipelineOperationEnum(IntEnum):
    """Polygon operation performed by a pipeline step"""
    CHOP = 1
    UNCHOP = 2
