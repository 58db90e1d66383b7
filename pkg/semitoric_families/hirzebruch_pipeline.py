"""
Polygon-level construction of the W_n transition families.

Starting from the W_0 polygons with a widened parameter alpha' = alpha + sum(lambda_i), each stage
chops the upper-right corner of every regime polygon by lambda_i and unchops the new lower-right
edge by beta - lambda_i, which turns the W_n polygons into the W_{n+1} ones.
"""
from fractions import Fraction
import logging
from math import sqrt
from typing import List, Optional, Sequence

from semitoric_families.enums.pipeline_operation_enum import PipelineOperationEnum
from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.exceptions.infeasible_error import InfeasibleError
from semitoric_families.models.family_polygon_triple_model import FamilyPolygonTripleModel
from semitoric_families.models.pipeline_result_model import PipelineResultModel
from semitoric_families.models.pipeline_step_model import PipelineStepModel
from semitoric_families.models.transition_bracket_model import TransitionBracketModel
from semitoric_families.rational_geometry import RationalLike, hull, parse_rat, point_to_json
from semitoric_families.semitoric_polygon import (
    MarkedWeightedPolygon,
    corner_chop,
    corner_unchop,
    marked,
    orbit_equal,
    remove_cut,
    validate,
)

_LOGGER = logging.getLogger(__name__)


def standard_triple(n: int, alpha: RationalLike, beta: RationalLike, y: RationalLike) -> FamilyPolygonTripleModel:
    """
    Polygons of the W_n transition family.

    Args:
        n: Hirzebruch index, n >= 0
        alpha: Positive rational
        beta: Positive rational
        y: Mark ordinate, 0 < y < beta

    Returns:
        FamilyPolygonTripleModel with Delta^{n,0}, the marked transition polygon and Delta^{n,1}

    Delta^{n,1} is Delzant only when alpha + n beta > beta; for n = 0 and alpha <= beta it is
    returned as the convex hull anyway and fails validate().
    """
    alpha, beta, y = parse_rat(alpha), parse_rat(beta), parse_rat(y)
    if n < 0:
        raise DomainError(f"Hirzebruch index must be non-negative, got {n}")
    if alpha <= 0 or beta <= 0:
        raise DomainError("alpha and beta must be positive")
    if not 0 < y < beta:
        raise DomainError(f"mark ordinate {y} must lie strictly between 0 and {beta}")

    below = hull([(0, 0), (beta, beta), (alpha + beta, beta), (alpha + n * beta, 0)])
    above = hull([(0, beta), (beta, 0), (alpha + beta, beta), (alpha + n * beta, 0)])
    return FamilyPolygonTripleModel(
        below=marked(below),
        transition=marked(below, [((beta, y), 1)]),
        above=marked(above),
    )


def transition_bracket(alpha: RationalLike, alpha_prime: RationalLike, beta: RationalLike) -> TransitionBracketModel:
    """Transition times of coupled spins on W_0(alpha', beta) next to the stated lower bound"""
    a, ap, b = float(parse_rat(alpha)), float(parse_rat(alpha_prime)), float(parse_rat(beta))
    bracket = TransitionBracketModel(
        alpha=a,
        alpha_prime=ap,
        beta=b,
        t_minus=b / (2 * b + ap + 2 * sqrt(ap * b)),
        t_plus=b / (2 * b + ap - 2 * sqrt(ap * b)),
        lower_bound=b / (2 * b + a + 2 * sqrt(a * b)),
    )
    if not bracket.lower_bound_holds:
        _LOGGER.warning(
            f"t- = {bracket.t_minus:.6f} on W_0({ap}, {b}) is below the bound {bracket.lower_bound:.6f}"
        )
    if not bracket.brackets_half:
        _LOGGER.warning(f"transition times ({bracket.t_minus:.6f}, {bracket.t_plus:.6f}) do not bracket 1/2")
    return bracket


def _upper_right(mp: MarkedWeightedPolygon):
    return max(mp.polygon.vertices, key=lambda p: (p[1], p[0]))


def _lower_right(mp: MarkedWeightedPolygon):
    return max(mp.polygon.vertices, key=lambda p: (-p[1], p[0]))


def _run_stage(
        stage: int,
        regime: str,
        mp: MarkedWeightedPolygon,
        lam: Fraction,
        beta: Fraction,
        steps: List[PipelineStepModel],
) -> MarkedWeightedPolygon:
    corner = _upper_right(mp)
    try:
        chopped = corner_chop(mp, corner, lam)
    except InfeasibleError as exc:
        raise InfeasibleError(f"{regime} chop: {exc.obstruction}", stage=stage) from exc
    steps.append(PipelineStepModel(
        stage=stage,
        regime=regime,
        operation=PipelineOperationEnum.CHOP,
        site=[point_to_json(corner)],
        size=lam,
        polygon_before=mp.to_json(),
        polygon_after=chopped.to_json(),
    ))

    start = _lower_right(chopped)
    end = chopped.polygon.neighbours(start)[1]
    try:
        unchopped = corner_unchop(chopped, (start, end), beta - lam)
    except InfeasibleError as exc:
        raise InfeasibleError(f"{regime} unchop: {exc.obstruction}", stage=stage) from exc
    steps.append(PipelineStepModel(
        stage=stage,
        regime=regime,
        operation=PipelineOperationEnum.UNCHOP,
        site=[point_to_json(start), point_to_json(end)],
        size=beta - lam,
        polygon_before=chopped.to_json(),
        polygon_after=unchopped.to_json(),
    ))
    counts = (len(mp.polygon), len(chopped.polygon), len(unchopped.polygon))
    if counts[1] != counts[0] + 1 or counts[2] != counts[1] - 1:
        _LOGGER.warning(f"stage {stage} {regime}: vertex counts {counts} break the chop +1 / unchop -1 pattern")
    _LOGGER.debug(f"stage {stage} {regime}: {counts[0]} -> {counts[1]} -> {counts[2]} vertices")
    return unchopped


def run_pipeline(
        n_target: int,
        alpha: RationalLike,
        beta: RationalLike,
        lambdas: Optional[Sequence[RationalLike]] = None,
        y: Optional[RationalLike] = None,
) -> PipelineResultModel:
    """
    Build the W_{n_target} triple by alternating corner chops and unchops.

    Args:
        n_target: Number of stages
        alpha: Target alpha
        beta: Beta, shared by every stage
        lambdas: Chop sizes, one per stage; defaults to beta/2 each
        y: Mark ordinate; defaults to beta/2

    Returns:
        PipelineResultModel holding the final triple, the step log and the recorded bracket

    Example:
        >>> result = run_pipeline(1, 1, 1)
        >>> orbit_equal(result.triple.below, standard_triple(1, 1, 1, "1/2").below)
        True
    """
    alpha, beta = parse_rat(alpha), parse_rat(beta)
    if n_target < 0:
        raise DomainError("n_target must be non-negative")
    sizes = [parse_rat(lam) for lam in lambdas] if lambdas is not None else [beta / 2] * n_target
    if len(sizes) != n_target:
        raise DomainError(f"expected {n_target} chop sizes, got {len(sizes)}")
    for stage, lam in enumerate(sizes, start=1):
        if lam <= 0:
            raise DomainError(f"chop size at stage {stage} must be positive")
    y = parse_rat(y) if y is not None else beta / 2

    alpha_prime = alpha + sum(sizes, Fraction(0))
    triple = standard_triple(0, alpha_prime, beta, y)
    for name, mp in triple.regimes().items():
        report = validate(mp)
        if not report.valid:
            raise DomainError(f"initial {name} polygon is not admissible: {', '.join(report.kinds())}")

    result = PipelineResultModel(triple=triple, alpha_prime=alpha_prime)
    result.brackets.append(transition_bracket(alpha, alpha_prime, beta))

    for stage, lam in enumerate(sizes, start=1):
        regimes = {
            name: _run_stage(stage, name, mp, lam, beta, result.steps)
            for name, mp in triple.regimes().items()
        }
        triple = FamilyPolygonTripleModel(**regimes)
        _LOGGER.info(f"stage {stage}/{n_target} done with lambda={lam}")
    result.triple = triple
    return result


def matches_standard(triple: FamilyPolygonTripleModel, n: int, alpha: RationalLike, beta: RationalLike) -> bool:
    """Orbit equality of all three regimes with standard_triple(n, alpha, beta, y)"""
    target = standard_triple(n, alpha, beta, triple.mark_ordinate)
    return all(
        orbit_equal(triple.regimes()[name], target.regimes()[name])
        for name in ("below", "transition", "above")
    )


def transition_regimes_agree(triple: FamilyPolygonTripleModel) -> bool:
    """Removing the mark upward gives the lower regime, downward the upper regime"""
    return (
        orbit_equal(remove_cut(triple.transition, 0, 1), triple.below)
        and orbit_equal(remove_cut(triple.transition, 0, -1), triple.above)
    )
