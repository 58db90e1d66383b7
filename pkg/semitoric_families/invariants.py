"""
Height invariants of the two-focus-focus systems on W_2 and S2 x S2.

The height of a focus-focus value is the reduced area below the critical level, divided by
2 pi. Both systems are taken at (s1, s2) = (1/2, 1/2), where the critical level is H = 0.
"""
import logging
from math import pi, sqrt
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.exceptions.inadmissible_error import InadmissibleError
from semitoric_families.model_systems import HPTwoParamFamily, W2TwoParamFamily
from semitoric_families.models.area_estimate_model import AreaEstimateModel
from semitoric_families.models.height_comparison_model import HeightComparisonModel, HeightComparisonRow
from semitoric_families.models.height_result_model import HeightResultModel
from semitoric_families.reduced_spaces import ReducedHamiltonian, reduced_hamiltonian
from semitoric_families.utils.constants import (
    CROSSING_TOLERANCE,
    GAMMA_GRID_SIZE,
    MONTE_CARLO_CHUNK,
    MONTE_CARLO_SEED,
    QUADRATURE_LIMIT,
    QUADRATURE_RELATIVE_TOLERANCE,
)
from semitoric_families.utils.parallel import map_tiles

_LOGGER = logging.getLogger(__name__)

HALF = (0.5, 0.5)


def _sin2_quad(integrand, lo: float, hi: float) -> Tuple[float, float]:
    # rho = lo + (hi - lo) sin^2(phi) tames the square-root behaviour at both ends
    width = hi - lo

    def transformed(phi: float) -> float:
        s, c = np.sin(phi), np.cos(phi)
        return integrand(lo + width * s * s) * 2 * width * s * c

    value, error = quad(transformed, 0.0, pi / 2, epsrel=QUADRATURE_RELATIVE_TOLERANCE, limit=QUADRATURE_LIMIT)
    return float(value), float(error)


def w2_radicand(alpha: float, beta: float, gamma: float) -> float:
    """(alpha + 2beta)^2 (alpha + beta)^2 gamma^2 - alpha^4, positive exactly when rho- is real"""
    return (alpha + 2 * beta) ** 2 * (alpha + beta) ** 2 * gamma ** 2 - alpha ** 4


def w2_rho_minus(alpha: float, beta: float, gamma: float) -> float:
    """Smallest rho with f(rho) <= 1, where f = alpha^2 / ((alpha + 2beta) gamma rho sqrt(2(alpha + beta) - rho^2))"""
    radicand = w2_radicand(alpha, beta, gamma)
    if radicand <= 0:
        raise DomainError(
            f"rho- is not real: need (alpha+2beta)^2 (alpha+beta)^2 gamma^2 > alpha^4, got {radicand:.3e}"
        )
    return sqrt(max(0.0, alpha + beta - sqrt(radicand) / ((alpha + 2 * beta) * gamma)))


def height_w2(
        alpha: float,
        beta: float,
        gamma: float,
        audit: bool = False,
        oracle_samples: int = 0,
        seed: int = MONTE_CARLO_SEED,
) -> HeightResultModel:
    """
    Heights of B and C for the W2 two-parameter family at (1/2, 1/2).

    h1 = beta - I / pi with I the integral of rho arccos(f(rho)) over [rho-, sqrt(2 beta)];
    h2 = beta - h1.

    Args:
        alpha, beta, gamma: Parameters inside the two-parameter window
        audit: Also integrate the fiber over C directly and report the gap to h2
        oracle_samples: Monte-Carlo samples for an independent h1, 0 to skip
        seed: Monte-Carlo seed

    Returns:
        HeightResultModel

    Raises:
        DomainError: Outside the gamma window or when rho- is not real
    """
    family = W2TwoParamFamily(alpha, beta, gamma)
    rho_minus = w2_rho_minus(alpha, beta, gamma)
    top = sqrt(2 * beta)
    scale = (alpha + 2 * beta) * gamma

    def integrand(rho: float) -> float:
        if rho <= 0.0:
            return 0.0
        radicand = 2 * (alpha + beta) - rho * rho
        f = alpha ** 2 / (scale * rho * sqrt(radicand))
        return rho * np.arccos(min(1.0, max(-1.0, f)))

    if rho_minus >= top:
        integral, error = 0.0, 0.0
    else:
        integral, error = _sin2_quad(integrand, rho_minus, top)
    h1 = beta - integral / pi
    result = HeightResultModel(h1=h1, h2=beta - h1, fiber_height=beta, quad_error=error / pi)

    if audit:
        rh = reduced_hamiltonian(family, HALF, alpha + beta)
        value, _ = quad(
            lambda r: r * float(rh.sublevel_angle_measure(np.array(r), 0.0)),
            0.0, rh.hi,
            points=[min(rho_minus, rh.hi)],
            epsrel=QUADRATURE_RELATIVE_TOLERANCE,
            limit=QUADRATURE_LIMIT,
        )
        result.audit_h2 = value / (2 * pi)
        result.audit_gap = abs(result.audit_h2 - result.h2)

    if oracle_samples:
        estimate = sublevel_area_oracle(reduced_hamiltonian(family, HALF, beta), 0.0, oracle_samples, seed)
        result.oracle_value = estimate.height
        result.oracle_stderr = estimate.height_stderr
        result.oracle_samples = estimate.samples

    _LOGGER.debug(f"W2 heights at ({alpha}, {beta}, {gamma}): h1={h1:.12f} +- {result.quad_error:.1e}")
    return result


def s2xs2_upper_bound(theta: float) -> float:
    """rho beyond which the arccos argument exceeds 1"""
    squared = (9 - theta + 4 * sqrt(5)) / (theta - 1)
    if squared <= 0:
        raise DomainError(f"R2/R1 = {theta} leaves no integration range: upper bound squared is {squared:.3e}")
    return sqrt(squared)


def height_s2xs2(
        r1: float,
        r2: float,
        oracle_samples: int = 0,
        seed: int = MONTE_CARLO_SEED,
) -> HeightResultModel:
    """
    Heights of NS and SN for the two-parameter S2 x S2 family at (1/2, 1/2).

    h1 = 2 R1 (1 - 2I / pi), with I the integral of rho / (1 + rho^2)^2 arccos(...) over
    [0, ub] in the coordinate rho = sqrt((1 - z1) / (1 + z1)); h2 = 2 R1 - h1.

    Raises:
        DomainError: Unless 0 < R1 < R2
    """
    if not 0 < r1 < r2:
        raise DomainError(f"heights on S2 x S2 need 0 < R1 < R2, got R1={r1}, R2={r2}")
    theta = r2 / r1
    upper = s2xs2_upper_bound(theta)

    def integrand(rho: float) -> float:
        argument = (theta - 1) * (1 + rho * rho) / (4 * sqrt(theta + (theta - 1) * rho * rho))
        return rho / (1 + rho * rho) ** 2 * np.arccos(min(1.0, argument))

    integral, error = _sin2_quad(integrand, 0.0, upper)
    h1 = 2 * r1 * (1 - 2 * integral / pi)
    result = HeightResultModel(h1=h1, h2=2 * r1 - h1, fiber_height=2 * r1, quad_error=4 * r1 * error / pi)

    if oracle_samples:
        rh = reduced_hamiltonian(HPTwoParamFamily(r1, r2), HALF, r1 - r2)
        estimate = sublevel_area_oracle(rh, 0.0, oracle_samples, seed)
        result.oracle_value = estimate.height
        result.oracle_stderr = estimate.height_stderr
        result.oracle_samples = estimate.samples
    return result


def sublevel_area_oracle(
        rh: ReducedHamiltonian,
        level: float,
        samples: int,
        seed: int = MONTE_CARLO_SEED,
        chunk: int = MONTE_CARLO_CHUNK,
) -> AreaEstimateModel:
    """
    Stratified Monte-Carlo estimate of the reduced area of {H^{red,j} < level}.

    The reduced space is mapped onto [0, 1] x [0, 2 pi) uniformly in area; each cell of a
    regular grid gets two jittered samples, and the paired differences give the standard error.
    Chunks draw from independent child seeds, so the result does not depend on the thread count.

    Args:
        rh: Reduced Hamiltonian
        level: Level value
        samples: Total number of samples (rounded down to whole cell pairs)
        seed: Root seed
        chunk: Approximate samples per chunk

    Returns:
        AreaEstimateModel
    """
    cells = max(1, samples // 2)
    n_u = max(1, int(round(sqrt(cells))))
    n_theta = max(1, cells // n_u)
    rows_per_chunk = max(1, chunk // (2 * n_theta))
    starts = list(range(0, n_u, rows_per_chunk))
    children = np.random.SeedSequence(seed).spawn(len(starts))

    def run_chunk(task: Tuple[int, np.random.SeedSequence]) -> Tuple[float, float]:
        start, child = task
        rng = np.random.default_rng(child)
        rows = np.arange(start, min(start + rows_per_chunk, n_u))
        shape = (rows.size, n_theta, 2)
        u = (rows[:, None, None] + rng.random(shape)) / n_u
        theta = (np.arange(n_theta)[None, :, None] + rng.random(shape)) * (2 * pi / n_theta)
        below = (rh.value(rh.area_coordinate(u), theta) < level).astype(float)
        return float(below.sum()), float(((below[..., 0] - below[..., 1]) ** 2).sum())

    totals = map_tiles(run_chunk, list(zip(starts, children)))
    count = 2 * n_u * n_theta
    fraction = sum(t for t, _ in totals) / count
    variance = sum(d for _, d in totals) / count ** 2
    area = rh.total_area
    return AreaEstimateModel(
        area=area * fraction,
        stderr=area * sqrt(variance),
        samples=count,
        total_area=area,
        seed=seed,
    )


def gamma_grid(alpha: float, beta: float, size: int = GAMMA_GRID_SIZE) -> List[float]:
    """Interior points of the two-parameter gamma window"""
    lo, hi = W2TwoParamFamily.gamma_window(alpha, beta)
    return [lo + (hi - lo) * k / (size + 1) for k in range(1, size + 1)]


def match_and_compare(
        r1: float,
        r2: float,
        gammas: Optional[Sequence[float]] = None,
        alpha: Optional[float] = None,
        beta: Optional[float] = None,
        oracle_samples: int = 0,
        seed: int = MONTE_CARLO_SEED,
) -> HeightComparisonModel:
    """
    Compare h1 of W2(2(R2 - R1), 2R1, gamma) with h1 of S2 x S2(R1, R2) along a gamma grid.

    Args:
        r1, r2: Sphere radii, 0 < R1 < R2
        gammas: Grid, 20 interior window points by default
        alpha, beta: Optional explicit scalings; they must equal the matched ones
        oracle_samples: Monte-Carlo samples per grid point, 0 to skip
        seed: Monte-Carlo seed

    Returns:
        HeightComparisonModel with the crossing gamma* when the difference changes sign

    Raises:
        InadmissibleError: If explicit scalings differ from the matched ones
    """
    if not 0 < r1 < r2:
        raise DomainError(f"comparison needs 0 < R1 < R2, got R1={r1}, R2={r2}")
    matched_alpha, matched_beta = 2 * (r2 - r1), 2 * r1
    if (alpha is not None and abs(alpha - matched_alpha) > 1e-12) or (beta is not None and abs(beta - matched_beta) > 1e-12):
        raise InadmissibleError(
            f"(alpha, beta) = ({alpha}, {beta}) differs from ({matched_alpha}, {matched_beta}): "
            f"the unmarked semitoric polygons are distinct and the systems are not isomorphic"
        )
    alpha, beta = matched_alpha, matched_beta
    h1_s2 = height_s2xs2(r1, r2).h1
    comparison = HeightComparisonModel(r1=r1, r2=r2, alpha=alpha, beta=beta)

    usable = []
    for gamma in (gamma_grid(alpha, beta) if gammas is None else gammas):
        if w2_radicand(alpha, beta, gamma) <= 0:
            _LOGGER.warning(f"dropping gamma={gamma}: rho- is not real")
            comparison.dropped.append(float(gamma))
        else:
            usable.append(float(gamma))

    heights = map_tiles(lambda g: height_w2(alpha, beta, g, oracle_samples=oracle_samples, seed=seed), usable)
    for gamma, height in zip(usable, heights):
        err_mc = None if height.oracle_value is None else abs(height.oracle_value - height.h1)
        comparison.rows.append(HeightComparisonRow(gamma, height.h1, h1_s2, height.quad_error, err_mc))

    values = [row.h1_w2 for row in comparison.rows]
    comparison.monotone = all(b < a for a, b in zip(values, values[1:]))
    if not comparison.monotone:
        _LOGGER.warning(f"h1 of W2 is not strictly decreasing on the grid for R1={r1}, R2={r2}")

    for left, right in zip(comparison.rows, comparison.rows[1:]):
        if (left.h1_w2 - h1_s2) * (right.h1_w2 - h1_s2) < 0:
            comparison.gamma_star = float(brentq(
                lambda g: height_w2(alpha, beta, g).h1 - h1_s2,
                left.gamma, right.gamma, xtol=CROSSING_TOLERANCE,
            ))
            _LOGGER.info(f"heights cross at gamma*={comparison.gamma_star:.10f}")
            break
    return comparison


def sublevel_areas(rh: ReducedHamiltonian, levels: Sequence[float], samples: int, seed: int = MONTE_CARLO_SEED) -> List[float]:
    """Oracle areas for increasing levels with a shared seed, so they are nondecreasing"""
    return [sublevel_area_oracle(rh, level, samples, seed).area for level in levels]
