"""
Acceptance suite run by ``semitoric-families validate-all``.

Each criterion is a check returning (passed, detail). Failures and package errors are collected
into CriterionResultModel entries; nothing in here raises.
"""
from fractions import Fraction
import logging
from math import sqrt
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from semitoric_families.enums.rank_one_type_enum import RankOneTypeEnum
from semitoric_families.enums.system_id_enum import SystemIdEnum
from semitoric_families.enums.williamson_type_enum import WilliamsonTypeEnum
from semitoric_families.exceptions.semitoric_error import SemitoricError
from semitoric_families.hirzebruch_pipeline import matches_standard, run_pipeline, standard_triple, transition_regimes_agree
from semitoric_families.invariants import height_s2xs2, height_w2, match_and_compare
from semitoric_families.model_systems import SystemFamily, build_family, fixed_points
from semitoric_families.models.criterion_result_model import CriterionResultModel
from semitoric_families.rational_geometry import add, hull, scale, sl2z_length
from semitoric_families.reduced_spaces import (
    profile_negativity_certificate,
    reduced_critical_points,
    reduced_hamiltonian,
    w1_quadratic_in_j,
)
from semitoric_families.semitoric_polygon import (
    GroupElement,
    MarkedWeightedPolygon,
    apply_group,
    corner_chop,
    corner_unchop,
    corner_vectors,
    marked,
    orbit_equal,
)
from semitoric_families.spectral_classification import (
    classify,
    classify_rank_one,
    hessian_bundle,
    reduced_char_poly,
    region_diagram,
    transition_times,
)
from semitoric_families.utils.constants import EVEN_POLYNOMIAL_TOLERANCE, FIXED_POINT_RESIDUAL, MONTE_CARLO_SAMPLES

_LOGGER = logging.getLogger(__name__)

Check = Callable[[bool], Tuple[bool, str]]

EE = WilliamsonTypeEnum.ELLIPTIC_ELLIPTIC
FF = WilliamsonTypeEnum.FOCUS_FOCUS

SUITE_SEED = 20240131


def _types(verdicts: Sequence[WilliamsonTypeEnum]) -> str:
    return "/".join(v.short_name for v in verdicts)


# ----------------------------
# FIXED-POINT CRITERIA
# ----------------------------

def check_w1_transition(quick: bool) -> Tuple[bool, str]:
    """C in W1MovingAB(1, 2, 9/(20 sqrt(2 beta))) is focus-focus exactly on (10/29, 10/11)"""
    family = build_family(SystemIdEnum.W1_MOVING_AB, alpha=1.0, beta=2.0, gamma=9.0 / (20.0 * sqrt(4.0)))
    result = transition_times(family)
    t_minus, t_plus = result.bisection
    error = max(abs(t_minus - 10 / 29), abs(t_plus - 10 / 11))
    verdicts = [classify(family, t, "C").williamson_type for t in (0.2, 0.6, 0.95)]
    passed = error < 1e-6 and verdicts == [EE, FF, EE]
    return passed, f"t- = {t_minus:.9f}, t+ = {t_plus:.9f}, error {error:.1e}, C types {_types(verdicts)}"


def check_w1_switch(quick: bool) -> Tuple[bool, str]:
    """W1Switch(1, 3) degenerates at 4/11 and 4/5 and carries a fixed sphere at t = 1/2"""
    family = build_family(SystemIdEnum.W1_SWITCH, alpha=1.0, beta=3.0)
    result = transition_times(family)
    t_minus, t_plus = result.bisection
    error = max(abs(t_minus - 4 / 11), abs(t_plus - 4 / 5))
    spheres = [c for c in fixed_points(family, 0.5).critical_sets if c.kind == "fixed-sphere"]
    sphere_ok = bool(spheres) and spheres[0].max_residual <= FIXED_POINT_RESIDUAL
    detail = f"t- = {t_minus:.9f}, t+ = {t_plus:.9f}, error {error:.1e}, fixed sphere {'found' if sphere_ok else 'missing'}"
    return error < 1e-6 and sphere_ok, detail


def check_coupled_angular(quick: bool) -> Tuple[bool, str]:
    family = build_family(SystemIdEnum.COUPLED_ANGULAR, r1=1.0, r2=2.0)
    result = transition_times(family)
    verdict = classify(family, 0.5, "NS").williamson_type
    gap = result.gap if result.gap is not None else float("inf")
    return gap < 1e-9 and verdict == FF, f"closed form vs bisection gap {gap:.1e}, NS at t=1/2 is {verdict.short_name}"


def check_w2_families(quick: bool) -> Tuple[bool, str]:
    """W2 closed forms, the (1/2, 1/2) types and the region diagram"""
    gaps = []
    for system in (SystemIdEnum.W2_TRANS_B, SystemIdEnum.W2_TRANS_C):
        result = transition_times(build_family(system, alpha=1.0, beta=1.0, gamma=0.45))
        gaps.append(result.gap if result.gap is not None else float("inf"))

    family = build_family(SystemIdEnum.W2_TWO_PARAM, alpha=1.0, beta=1.0, gamma=0.45)
    verdicts = [classify(family, (0.5, 0.5), label).williamson_type for label in "ABCD"]
    diagram = region_diagram(family, grid=21 if quick else 41)
    regions_ok = diagram.open_region_count == 4 and set(diagram.region_counts) == {"EE/EE", "FF/EE", "EE/FF", "FF/FF"}
    passed = max(gaps) < 1e-6 and verdicts == [EE, FF, FF, EE] and regions_ok
    return passed, f"gaps {max(gaps):.1e}, ABCD at (1/2,1/2) {_types(verdicts)}, regions {diagram.region_counts}"


def _evenness_pool() -> List[Tuple[SystemFamily, List[Tuple[float, ...]]]]:
    return [
        (build_family(SystemIdEnum.COUPLED_ANGULAR, r1=1.0, r2=2.0), [(0.1,), (0.3,), (0.7,), (0.9,)]),
        (build_family(SystemIdEnum.W1_MOVING_AB), [(0.1,), (0.3,), (0.5,), (0.8,)]),
        (build_family(SystemIdEnum.W1_SWITCH), [(0.2,), (0.4,), (0.7,)]),
        (build_family(SystemIdEnum.W2_TWO_PARAM), [(0.25, 0.25), (0.5, 0.5), (0.25, 0.75), (0.9, 0.1)]),
        (build_family(SystemIdEnum.HP_TWO_PARAM), [(0.2, 0.3), (0.5, 0.5), (0.8, 0.1)]),
    ]


def check_char_poly_evenness(quick: bool) -> Tuple[bool, str]:
    """Odd coefficients of char(Omega^-1 (nu d2J + mu d2H)) vanish at random fixed points"""
    rng = np.random.default_rng(SUITE_SEED)
    pool = _evenness_pool()
    bundles: Dict[Tuple[int, Tuple[float, ...], str], object] = {}
    draws = 100 if quick else 1000
    worst = 0.0
    for _ in range(draws):
        index = int(rng.integers(len(pool)))
        family, grid = pool[index]
        times = grid[int(rng.integers(len(grid)))]
        points = fixed_points(family, times).points
        point = points[int(rng.integers(len(points)))]
        key = (index, times, point.label)
        if key not in bundles:
            bundles[key] = hessian_bundle(family, times, point)
        nu, mu = rng.normal(size=2)
        worst = max(worst, reduced_char_poly(bundles[key], float(nu), float(mu)).odd_residual)
    return worst < EVEN_POLYNOMIAL_TOLERANCE, f"{draws} draws over {len(bundles)} Hessians, worst odd residual {worst:.1e}"


# ----------------------------
# POLYGON CRITERIA
# ----------------------------

def _random_delzant(rng: np.random.Generator) -> MarkedWeightedPolygon:
    sizes = [Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2), Fraction(3, 2)]
    a = sizes[int(rng.integers(len(sizes)))]
    b = sizes[int(rng.integers(len(sizes)))]
    kind = int(rng.integers(3))
    if kind == 0:
        base = marked(hull([(0, 0), (a, 0), (a, b), (0, b)]))
    elif kind == 1:
        base = marked(hull([(0, 0), (a, 0), (0, a)]))
    else:
        base = standard_triple(int(rng.integers(4)), a, b, b / 2).below
    g = GroupElement(shear_exponent=int(rng.integers(-3, 4)), vertical_shift=Fraction(int(rng.integers(-5, 6)), 2))
    return apply_group(g, base)


def chop_round_trip(mp: MarkedWeightedPolygon, vertex_index: int, numerator: int) -> bool:
    """Chop at a vertex with lam = numerator/8 of the shorter adjacent edge, then unchop the new edge"""
    q = mp.polygon.vertices[vertex_index % len(mp.polygon)]
    prev_vertex, next_vertex = mp.polygon.neighbours(q)
    lam = min(sl2z_length(q, prev_vertex), sl2z_length(q, next_vertex)) * Fraction(numerator, 8)
    u, v = corner_vectors(mp.polygon, q)
    chopped = corner_chop(mp, q, lam)
    restored = corner_unchop(chopped, (add(q, scale(lam, u)), add(q, scale(lam, v))), lam)
    return restored == mp


def check_polygon_algebra(quick: bool) -> Tuple[bool, str]:
    left = marked(hull([(0, 0), (2, 2), (5, 2), (3, 0)]), [((2, 1), 1)])
    right = marked(hull([(0, 2), (2, 0), (3, 0), (5, 2)]), [((2, 1), -1)])
    worked = apply_group(GroupElement(shear_exponent=-1, vertical_shift=Fraction(2), flips=(-1,)), left) == right

    rng = np.random.default_rng(SUITE_SEED)
    cases = 100 if quick else 1000
    failures = 0
    for _ in range(cases):
        mp = _random_delzant(rng)
        if not chop_round_trip(mp, int(rng.integers(len(mp.polygon))), int(rng.integers(1, 8))):
            failures += 1

    w2 = standard_triple(2, 1, 1, "1/2")
    orbits = orbit_equal(left, right) and not orbit_equal(w2.below, w2.above)
    passed = worked and failures == 0 and orbits
    return passed, f"worked example {'ok' if worked else 'differs'}, {failures}/{cases} round-trip failures, orbit checks {'ok' if orbits else 'failed'}"


def check_pipeline(quick: bool) -> Tuple[bool, str]:
    top = 3 if quick else 5
    bad = []
    # alpha > beta keeps Delta^{0,1} Delzant at n = 0
    for n in range(top + 1):
        result = run_pipeline(n, 2, 1)
        if not (matches_standard(result.triple, n, 2, 1) and transition_regimes_agree(result.triple)):
            bad.append(n)
    return not bad, f"n = 0..{top}" + (f", mismatches at n = {bad}" if bad else ", all orbit-equal")


# ----------------------------
# RANK-ONE CRITERIA
# ----------------------------

def rank_one_types(family: SystemFamily, grid: Sequence, levels: Sequence[float]) -> List[RankOneTypeEnum]:
    """Transverse types of all reduced critical points over a parameter grid and J-levels"""
    found = []
    for params in grid:
        for j in levels:
            rh = reduced_hamiltonian(family, params, j)
            found.extend(classify_rank_one(family, params, j, p) for p in reduced_critical_points(rh))
    return found


def interior_levels(top: float, count: int, avoid: Sequence[float] = ()) -> List[float]:
    """count evenly spaced levels in (0, top) without the critical values in avoid"""
    levels = [top * k / (count + 1) for k in range(1, count + 1)]
    return [j for j in levels if all(abs(j - a) > 1e-9 for a in avoid)]


def check_rank_one(quick: bool) -> Tuple[bool, str]:
    count = 4 if quick else 9
    w1 = build_family(SystemIdEnum.W1_MOVING_AB)
    w1_types = rank_one_types(w1, [0.1, 0.3, 0.5, 0.7, 0.9], interior_levels(w1.alpha + w1.beta, count, [w1.alpha]))

    w2 = build_family(SystemIdEnum.W2_TWO_PARAM)
    s_grid = [(s1, s2) for s1 in (0.25, 0.5, 0.75) for s2 in (0.25, 0.5, 0.75)]
    w2_types = rank_one_types(w2, s_grid, interior_levels(w2.alpha + 2 * w2.beta, count, [w2.beta, w2.alpha + w2.beta]))

    elliptic = all(t == RankOneTypeEnum.ELLIPTIC_TRANSVERSE for t in w1_types + w2_types)

    hyperbolic_family = build_family(SystemIdEnum.W1_HYPERBOLIC)
    h_types = rank_one_types(
        hyperbolic_family,
        [0.25, 0.5, 0.75],
        interior_levels(hyperbolic_family.alpha + hyperbolic_family.beta, 9, [hyperbolic_family.alpha]),
    )
    hyperbolic = h_types.count(RankOneTypeEnum.HYPERBOLIC_TRANSVERSE)

    identity = True
    for alpha, beta in ((Fraction(1), Fraction(1)), (Fraction(1), Fraction(2)), (Fraction(2), Fraction(3)), (Fraction(1, 2), Fraction(5, 2))):
        for k in range(1, 9):
            s = 2 * beta * Fraction(k, 9)
            a, b, c = w1_quadratic_in_j(alpha, beta, s)
            identity &= b * b - 4 * a * c == -64 * s ** 3 * (2 * beta - s) ** 3
    certificates = all(profile_negativity_certificate(w1, 0.5, j).passed for j in (0.5, 1.5, 2.5))

    passed = elliptic and hyperbolic > 0 and identity and certificates
    detail = (
        f"{len(w1_types) + len(w2_types)} W1/W2 points {'all elliptic' if elliptic else 'not all elliptic'}, "
        f"{hyperbolic} hyperbolic in W1Hyperbolic, discriminant identity {'exact' if identity else 'broken'}"
    )
    return passed, detail


# ----------------------------
# HEIGHT CRITERIA
# ----------------------------

def check_heights(quick: bool) -> Tuple[bool, str]:
    """Conservation, quadrature against Monte Carlo, monotonicity and a crossing gamma"""
    samples = MONTE_CARLO_SAMPLES // 100 if quick else MONTE_CARLO_SAMPLES
    tolerance = 1e-3 if quick else 1e-4
    r1, r2 = 1.0, 2.0
    w2 = height_w2(2 * (r2 - r1), 2 * r1, 0.35, audit=True, oracle_samples=samples)
    s2 = height_s2xs2(r1, r2, oracle_samples=samples)
    conservation = max(w2.conservation_gap, s2.conservation_gap)
    oracle = max(abs(w2.oracle_value - w2.h1), abs(s2.oracle_value - s2.h1))

    comparison = match_and_compare(r1, r2)
    # (1, 2) has no sign change of h1_w2 - h1_s2 on the window; (3, 4) does
    crossing = match_and_compare(3.0, 4.0)
    passed = conservation < 1e-8 and oracle < tolerance and comparison.monotone and crossing.crossing
    detail = (
        f"conservation gap {conservation:.1e}, oracle gap {oracle:.1e} at {samples} samples, "
        f"monotone {comparison.monotone}, gamma* {crossing.gamma_star}"
    )
    return passed, detail


# name, check, part of --quick
CRITERIA: List[Tuple[str, Check, bool]] = [
    ("w1-transition-times", check_w1_transition, True),
    ("w1-switch-degenerate-times", check_w1_switch, True),
    ("coupled-angular-momenta", check_coupled_angular, True),
    ("w2-families", check_w2_families, False),
    ("char-poly-evenness", check_char_poly_evenness, True),
    ("polygon-algebra", check_polygon_algebra, True),
    ("pipeline", check_pipeline, True),
    ("rank-one-suites", check_rank_one, False),
    ("heights", check_heights, False),
]


def run_criterion(name: str, check: Check, quick: bool = False) -> CriterionResultModel:
    started = time.perf_counter()
    try:
        passed, detail = check(quick)
    except SemitoricError as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    result = CriterionResultModel(name=name, passed=bool(passed), detail=detail, seconds=time.perf_counter() - started)
    if result.passed:
        _LOGGER.info(f"{name}: passed in {result.seconds:.1f}s ({detail})")
    else:
        _LOGGER.error(f"{name}: FAILED ({detail})")
    return result


def run_suite(quick: bool = False, names: Optional[Sequence[str]] = None) -> List[CriterionResultModel]:
    """
    Run the acceptance criteria in order.

    Args:
        quick: Run only the fast criteria, with reduced sample counts
        names: Restrict to these criterion names

    Returns:
        One CriterionResultModel per criterion run
    """
    selected = [
        (name, check) for name, check, fast in CRITERIA
        if (fast or not quick) and (names is None or name in names)
    ]
    return [run_criterion(name, check, quick) for name, check in selected]


def first_failure(results: Sequence[CriterionResultModel]) -> Optional[CriterionResultModel]:
    return next((r for r in results if not r.passed), None)
