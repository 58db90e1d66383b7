from .rational_geometry import ConvexPolygon, LatticeMatrix, PiecewiseShear, apply_piecewise, hull, parse_rat, point, sl2z_length
from .semitoric_polygon import (
    GroupElement,
    Mark,
    MarkedWeightedPolygon,
    apply_group,
    classify_corner,
    corner_chop,
    corner_unchop,
    marked,
    orbit_equal,
    remove_cut,
    slope_change_audit,
    validate,
)
from .charts import HirzebruchSurface, SpherePair, hirzebruch_lift
from .model_systems import SystemFamily, build_family, evaluate, fixed_points, momentum_image
from .reduced_spaces import (
    ReducedHamiltonian,
    profile_negativity_certificate,
    reduced_critical_points,
    reduced_hamiltonian,
    reduced_section,
)
from .spectral_classification import (
    classify,
    classify_fixed_point,
    classify_rank_one,
    hessian_bundle,
    reduced_char_poly,
    region_diagram,
    transition_times,
)
from .invariants import height_s2xs2, height_w2, match_and_compare, sublevel_area_oracle
from .hirzebruch_pipeline import run_pipeline, standard_triple, transition_bracket

from .enums.chart_id_enum import ChartIdEnum
from .enums.corner_class_enum import CornerClassEnum
from .enums.morse_type_enum import MorseTypeEnum
from .enums.pipeline_operation_enum import PipelineOperationEnum
from .enums.rank_one_type_enum import RankOneTypeEnum
from .enums.system_id_enum import SystemIdEnum
from .enums.williamson_type_enum import WilliamsonTypeEnum

from .exceptions.semitoric_error import SemitoricError
from .exceptions.domain_error import DomainError
from .exceptions.degenerate_polygon_error import DegeneratePolygonError
from .exceptions.infeasible_error import InfeasibleError
from .exceptions.inadmissible_error import InadmissibleError
from .exceptions.numerical_error import NumericalError

from .models.fixed_point_inventory_model import FixedPointInventoryModel
from .models.height_result_model import HeightResultModel
from .models.momentum_image_model import MomentumImageModel
from .models.pipeline_result_model import PipelineResultModel
from .models.transition_times_model import TransitionTimesModel
from .models.validity_report_model import ValidityReportModel
from .models.williamson_verdict_model import WilliamsonVerdictModel

__all__ = [
    # Geometry
    "ConvexPolygon",
    "LatticeMatrix",
    "PiecewiseShear",
    "apply_piecewise",
    "hull",
    "parse_rat",
    "point",
    "sl2z_length",
    "GroupElement",
    "Mark",
    "MarkedWeightedPolygon",
    "apply_group",
    "classify_corner",
    "corner_chop",
    "corner_unchop",
    "marked",
    "orbit_equal",
    "remove_cut",
    "slope_change_audit",
    "validate",
    # Systems
    "HirzebruchSurface",
    "SpherePair",
    "hirzebruch_lift",
    "SystemFamily",
    "build_family",
    "evaluate",
    "fixed_points",
    "momentum_image",
    "ReducedHamiltonian",
    "profile_negativity_certificate",
    "reduced_critical_points",
    "reduced_hamiltonian",
    "reduced_section",
    # Classification
    "classify",
    "classify_fixed_point",
    "classify_rank_one",
    "hessian_bundle",
    "reduced_char_poly",
    "region_diagram",
    "transition_times",
    # Invariants
    "height_s2xs2",
    "height_w2",
    "match_and_compare",
    "sublevel_area_oracle",
    # Pipeline
    "run_pipeline",
    "standard_triple",
    "transition_bracket",
    # Enums
    "ChartIdEnum",
    "CornerClassEnum",
    "MorseTypeEnum",
    "PipelineOperationEnum",
    "RankOneTypeEnum",
    "SystemIdEnum",
    "WilliamsonTypeEnum",
    # Exceptions
    "SemitoricError",
    "DomainError",
    "DegeneratePolygonError",
    "InfeasibleError",
    "InadmissibleError",
    "NumericalError",
    # Models
    "FixedPointInventoryModel",
    "HeightResultModel",
    "MomentumImageModel",
    "PipelineResultModel",
    "TransitionTimesModel",
    "ValidityReportModel",
    "WilliamsonVerdictModel",
]
