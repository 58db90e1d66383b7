"""
Williamson types of rank-zero points and transition times.

At a fixed point m the linearisation A = Omega^-1 (nu d2J + mu d2H) is Hamiltonian, so its
characteristic polynomial is even: char(A)(X) = chi(X^2) with chi(Y) = Y^2 + c2 Y + c4. When the
two roots of chi are distinct and nonzero their signs give the type:

    both negative    elliptic-elliptic
    complex pair     focus-focus
    opposite signs   elliptic-hyperbolic
    both positive    hyperbolic-hyperbolic
"""
import logging
from math import cos, pi, sin
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import ndimage
from scipy.optimize import bisect

from semitoric_families.charts import symplectic_matrix
from semitoric_families.enums.morse_type_enum import MorseTypeEnum
from semitoric_families.enums.rank_one_type_enum import RankOneTypeEnum
from semitoric_families.enums.williamson_type_enum import WilliamsonTypeEnum
from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.exceptions.numerical_error import NumericalError
from semitoric_families.model_systems import SystemFamily, TimesLike, W2TwoParamFamily
from semitoric_families.models.chart_point_model import ChartPointModel
from semitoric_families.models.fixed_point_model import FixedPointModel
from semitoric_families.models.hessian_bundle_model import HessianBundleModel
from semitoric_families.models.reduced_char_poly_model import ReducedCharPolyModel
from semitoric_families.models.reduced_critical_point_model import ReducedCriticalPointModel
from semitoric_families.models.region_diagram_model import RegionDiagramModel
from semitoric_families.models.transition_times_model import TransitionTimesModel
from semitoric_families.models.williamson_verdict_model import WilliamsonVerdictModel
from semitoric_families.utils.constants import (
    DEGENERACY_MARGIN,
    DIRECTION_NET_REFINEMENT,
    DIRECTION_NET_SIZE,
    FD_RICHARDSON_LEVELS,
    FD_STEP,
    FIXED_POINT_RESIDUAL,
    STRUCTURAL_DEGENERACY_MARGIN,
    TRANSITION_SAMPLES,
    TRANSITION_TOLERANCE,
)
from semitoric_families.utils.finite_differences import hessian_fd
from semitoric_families.utils.parallel import map_tiles

_LOGGER = logging.getLogger(__name__)

Direction = Tuple[float, float]


def hessian_bundle(
        family: SystemFamily,
        params: TimesLike,
        point: Union[str, FixedPointModel],
        step: float = FD_STEP,
        levels: int = FD_RICHARDSON_LEVELS,
) -> HessianBundleModel:
    """
    Hessians of J and H at a fixed point, in its Darboux chart.

    Args:
        family: System family
        params: t or (s1, s2)
        point: Fixed-point label from the inventory, or an inventory entry
        step: Relative finite-difference step
        levels: Richardson levels

    Returns:
        HessianBundleModel

    Raises:
        DomainError: If the point does not pass the fixed-point residual check
    """
    times = family.times(params)
    if isinstance(point, str):
        point = family.fixed_points(times).point(point)
    chart = point.point.chart
    coords = np.asarray(point.point.coords, dtype=float)
    residual = family.gradient_residual(chart, times, coords)
    if residual > FIXED_POINT_RESIDUAL:
        raise DomainError(f"{point.label} is not a fixed point at {times}: gradient residual {residual:.3e}")
    j_fn, h_fn = family.chart_functions(chart, times)
    return HessianBundleModel(
        label=point.label,
        chart=chart,
        times=times,
        d2j=hessian_fd(j_fn, coords, step, levels),
        d2h=hessian_fd(h_fn, coords, step, levels),
        omega=symplectic_matrix(chart),
        step=step,
        levels=levels,
        residual=residual,
    )


def reduced_char_poly(hb: HessianBundleModel, nu: float, mu: float) -> ReducedCharPolyModel:
    """chi for the combination nu J + mu H"""
    matrix = hb.linearisation(nu, mu)
    scale = float(np.max(np.abs(matrix)))
    coefficients = np.poly(matrix).real
    odd = 0.0
    if scale > 0:
        odd = max(abs(coefficients[1]) / scale, abs(coefficients[3]) / scale ** 3)
    return ReducedCharPolyModel(
        nu=nu,
        mu=mu,
        c2=float(coefficients[2]),
        c4=float(coefficients[4]),
        odd_residual=odd,
        scale=scale,
    )


def verdict_from_roots(cp: ReducedCharPolyModel, margin: float) -> Optional[WilliamsonTypeEnum]:
    """Type read off chi, or None when the roots are not distinct and nonzero within the margin"""
    s = cp.scale
    if s == 0.0:
        return None
    disc = cp.discriminant
    if abs(disc) <= margin * s ** 4:
        return None
    if disc < 0:
        return WilliamsonTypeEnum.FOCUS_FOCUS
    root = np.sqrt(disc)
    y1, y2 = (-cp.c2 - root) / 2, (-cp.c2 + root) / 2
    if min(abs(y1), abs(y2)) <= margin * s ** 2:
        return None
    if y1 < 0 and y2 < 0:
        return WilliamsonTypeEnum.ELLIPTIC_ELLIPTIC
    if y1 > 0 and y2 > 0:
        return WilliamsonTypeEnum.HYPERBOLIC_HYPERBOLIC
    return WilliamsonTypeEnum.ELLIPTIC_HYPERBOLIC


def direction_net(size: int = DIRECTION_NET_SIZE) -> List[Direction]:
    return [(cos(2 * pi * k / size), sin(2 * pi * k / size)) for k in range(size)]


def classify_fixed_point(
        hb: HessianBundleModel,
        special: Sequence[Direction] = (),
        margin: float = DEGENERACY_MARGIN,
) -> WilliamsonVerdictModel:
    """
    Williamson type of a fixed point from its Hessian bundle.

    The special directions are tried first, then a 64-direction net on the unit circle; the net
    is refined four-fold when nothing passes. A point with no passing direction is Degenerate,
    and a second pass at a tighter margin records whether that is marginal or structural.

    Args:
        hb: Hessian bundle of the point
        special: Extra (nu, mu) combinations tried first
        margin: Relative margin for distinct nonzero roots

    Returns:
        WilliamsonVerdictModel
    """
    odd = 0.0
    for directions in (list(special) + direction_net(), direction_net(DIRECTION_NET_SIZE * DIRECTION_NET_REFINEMENT)):
        witness, verdicts = None, set()
        for nu, mu in directions:
            cp = reduced_char_poly(hb, nu, mu)
            odd = max(odd, cp.odd_residual)
            verdict = verdict_from_roots(cp, margin)
            if verdict is None:
                continue
            verdicts.add(verdict)
            if witness is None:
                witness = (cp, verdict)
        if witness is not None:
            cp, verdict = witness
            if len(verdicts) > 1:
                _LOGGER.warning(f"{hb.label} at {hb.times}: directions disagree: {sorted(v.name for v in verdicts)}")
            _LOGGER.debug(f"{hb.label} at {hb.times}: {verdict.name} witnessed by ({cp.nu:.4f}, {cp.mu:.4f})")
            return WilliamsonVerdictModel(
                label=hb.label,
                times=hb.times,
                williamson_type=verdict,
                witness=(cp.nu, cp.mu),
                roots=list(cp.roots),
                margin=margin,
                consistent=len(verdicts) == 1,
                odd_residual=odd,
            )

    refined = direction_net(DIRECTION_NET_SIZE * DIRECTION_NET_REFINEMENT)
    marginal = [
        cp for cp in (reduced_char_poly(hb, nu, mu) for nu, mu in list(special) + refined)
        if verdict_from_roots(cp, STRUCTURAL_DEGENERACY_MARGIN) is not None
    ]
    if marginal:
        _LOGGER.warning(f"{hb.label} at {hb.times}: degenerate at margin {margin:g} but not at {STRUCTURAL_DEGENERACY_MARGIN:g}")
    witness = marginal[0] if marginal else reduced_char_poly(hb, 0.0, 1.0)
    return WilliamsonVerdictModel(
        label=hb.label,
        times=hb.times,
        williamson_type=WilliamsonTypeEnum.DEGENERATE,
        witness=(witness.nu, witness.mu),
        roots=list(witness.roots),
        margin=margin,
        consistent=True,
        structural=not marginal,
        odd_residual=odd,
    )


def classify(family: SystemFamily, params: TimesLike, label: str) -> WilliamsonVerdictModel:
    """Hessian bundle and verdict for a labelled fixed point"""
    times = family.times(params)
    return classify_fixed_point(hessian_bundle(family, times, label), family.special_directions(times))


def classify_inventory(family: SystemFamily, params: TimesLike) -> List[WilliamsonVerdictModel]:
    times = family.times(params)
    special = family.special_directions(times)
    return [
        classify_fixed_point(hessian_bundle(family, times, point), special)
        for point in family.fixed_points(times).points
    ]


def classify_rank_one(
        family: SystemFamily,
        params: TimesLike,
        j: float,
        point: Union[ReducedCriticalPointModel, ChartPointModel],
) -> RankOneTypeEnum:
    """
    Transverse type of a rank-one point.

    A reduced critical point carries its Morse type. A point of a sphere fixed by the J-action
    (dJ = 0, dH != 0) is typed by the eigenvalues of Omega^-1 d2J: a nonzero imaginary pair is
    elliptic, a nonzero real pair hyperbolic.
    """
    if isinstance(point, ReducedCriticalPointModel):
        return {
            MorseTypeEnum.ELLIPTIC: RankOneTypeEnum.ELLIPTIC_TRANSVERSE,
            MorseTypeEnum.HYPERBOLIC: RankOneTypeEnum.HYPERBOLIC_TRANSVERSE,
            MorseTypeEnum.DEGENERATE: RankOneTypeEnum.DEGENERATE,
        }[point.morse_type]

    j_fn, _ = family.chart_functions(point.chart, params)
    coords = np.asarray(point.coords, dtype=float)
    j_value = float(j_fn(coords[None, :])[0])
    if abs(j_value - j) > 1e-9 * max(1.0, abs(j)):
        raise DomainError(f"point has J = {j_value}, not on the level {j}")
    eigenvalues = np.linalg.eigvals(np.linalg.solve(symplectic_matrix(point.chart), hessian_fd(j_fn, coords)))
    scale = max(1.0, float(np.max(np.abs(eigenvalues))))
    nonzero = eigenvalues[np.abs(eigenvalues) > DEGENERACY_MARGIN * scale]
    if nonzero.size != 2:
        return RankOneTypeEnum.DEGENERATE
    if np.all(np.abs(nonzero.real) < DEGENERACY_MARGIN * scale):
        return RankOneTypeEnum.ELLIPTIC_TRANSVERSE
    if np.all(np.abs(nonzero.imag) < DEGENERACY_MARGIN * scale):
        return RankOneTypeEnum.HYPERBOLIC_TRANSVERSE
    return RankOneTypeEnum.DEGENERATE


def _transition_discriminant(family: SystemFamily, label: str, t: float) -> float:
    # Scale-free discriminant of chi for Omega^-1 d2H_t at the transition point
    cp = reduced_char_poly(hessian_bundle(family, t, label), 0.0, 1.0)
    return cp.discriminant / cp.scale ** 4 if cp.scale > 0 else 0.0


def transition_times(family: SystemFamily, samples: int = TRANSITION_SAMPLES) -> TransitionTimesModel:
    """
    Degenerate times of the transition point, by closed form and by bisection.

    The bisection runs on the sign of disc(chi) for Omega^-1 d2H_t at the transition point:
    positive while elliptic-elliptic, negative while focus-focus.

    Raises:
        DomainError: If the family has no designated transition point
        NumericalError: If the sampled discriminant never changes sign
    """
    label = family.transition_label
    if label is None or family.arity != 1:
        raise DomainError(f"{family.system_id.name} has no designated transition point")

    grid = np.linspace(0.0, 1.0, samples)
    values = np.array(map_tiles(lambda t: _transition_discriminant(family, label, float(t)), list(grid)))
    falling = [k for k in range(samples - 1) if values[k] > 0 > values[k + 1]]
    rising = [k for k in range(samples - 1) if values[k] < 0 < values[k + 1]]
    if not falling or not rising:
        raise NumericalError(
            f"no focus-focus window found for {label} in {family.system_id.name}",
            {"samples": samples, "signs": np.sign(values).astype(int).tolist()},
        )

    def refine(k: int) -> float:
        return float(bisect(
            lambda t: _transition_discriminant(family, label, t),
            grid[k], grid[k + 1], xtol=TRANSITION_TOLERANCE,
        ))

    numeric = (refine(falling[0]), refine(rising[-1]))
    closed = family.closed_form_transition_times()
    result = TransitionTimesModel(
        system=family.system_id,
        label=label,
        t_minus=(closed or numeric)[0],
        t_plus=(closed or numeric)[1],
        method="closed-form" if closed else "bisection",
        bisection=numeric,
        closed_form=closed,
    )
    _LOGGER.info(f"{family.system_id.name} transition times {result.t_minus:.10f}, {result.t_plus:.10f} (gap {result.gap})")
    return result


def verdict_sweep(family: SystemFamily, label: str, times: Sequence[TimesLike]) -> List[WilliamsonVerdictModel]:
    """Verdicts for one labelled point along a list of parameter values"""
    return map_tiles(lambda params: classify(family, params, label), list(times))


def eigenvalue_trajectory(family: SystemFamily, label: str, times: Sequence[float]) -> List[np.ndarray]:
    """Eigenvalues of Omega^-1 d2H_t at a labelled point, sorted by (real, imag)"""
    trajectory = []
    for t in times:
        hb = hessian_bundle(family, t, label)
        eigenvalues = np.linalg.eigvals(hb.linearisation(0.0, 1.0))
        trajectory.append(np.array(sorted(eigenvalues, key=lambda z: (round(z.real, 12), z.imag))))
    return trajectory


def hamiltonian_hopf_pattern(
        family: SystemFamily,
        label: str,
        t_critical: float,
        window: float = 0.05,
        tolerance: float = 1e-6,
) -> Dict[str, bool]:
    """
    Collide-and-split check around a degenerate time.

    On the elliptic side the spectrum is two imaginary pairs with distinct moduli; on the
    focus-focus side it is a quadruple +-a +-ib with a != 0. The sides are told apart by the sign
    of the transition discriminant just before t_critical, so the check holds both where the
    point enters the focus-focus window and where it leaves it.

    Returns:
        "before" and "after" tell whether each side shows the spectrum its type predicts;
        "leaving_focus_focus" is True when the focus-focus side comes first.
    """
    t_before, t_after = t_critical - window, t_critical + window
    leaving = _transition_discriminant(family, label, t_before) < 0
    results = {"leaving_focus_focus": bool(leaving)}
    for side, t, focus_focus in (("before", t_before, leaving), ("after", t_after, not leaving)):
        eigenvalues = eigenvalue_trajectory(family, label, [t])[0]
        scale = max(1.0, float(np.max(np.abs(eigenvalues))))
        if focus_focus:
            results[side] = bool(np.all(np.abs(eigenvalues.real) > tolerance * scale))
        else:
            imaginary = bool(np.all(np.abs(eigenvalues.real) < tolerance * scale))
            distinct = len({round(abs(z.imag) / scale, 6) for z in eigenvalues}) == 2
            results[side] = imaginary and distinct
    _LOGGER.debug(f"Hamiltonian-Hopf check for {label} at t={t_critical}: {results}")
    return results


def _count_regions(verdicts_b: np.ndarray, verdicts_c: np.ndarray) -> Dict[str, int]:
    counts = {}
    degenerate = int(WilliamsonTypeEnum.DEGENERATE)
    for b in WilliamsonTypeEnum:
        for c in WilliamsonTypeEnum:
            if int(b) == degenerate or int(c) == degenerate:
                continue
            mask = (verdicts_b == int(b)) & (verdicts_c == int(c))
            if mask.any():
                _, count = ndimage.label(mask)
                counts[f"{b.short_name}/{c.short_name}"] = int(count)
    return counts


def region_diagram(family: W2TwoParamFamily, grid: int = 41) -> RegionDiagramModel:
    """
    Types of B and C over an (s1, s2) grid on [0, 1]^2.

    Args:
        family: W2 two-parameter family
        grid: Points per axis

    Returns:
        RegionDiagramModel with per-cell verdicts and connected open regions per verdict pair
    """
    if family.arity != 2 or not {"B", "C"} <= set(family.origin_labels):
        raise DomainError(f"region diagrams need the W2 two-parameter family, got {family.system_id.name}")
    values = np.linspace(0.0, 1.0, grid)

    def classify_row(s1: float) -> Tuple[List[int], List[int]]:
        row_b, row_c = [], []
        for s2 in values:
            row_b.append(int(classify(family, (s1, s2), "B").williamson_type))
            row_c.append(int(classify(family, (s1, s2), "C").williamson_type))
        return row_b, row_c

    rows = map_tiles(classify_row, [float(s) for s in values])
    verdicts_b = np.array([b for b, _ in rows], dtype=int)
    verdicts_c = np.array([c for _, c in rows], dtype=int)
    diagram = RegionDiagramModel(values, verdicts_b, verdicts_c, _count_regions(verdicts_b, verdicts_c))
    _LOGGER.info(f"region diagram {grid}x{grid}: {diagram.region_counts}")
    return diagram
