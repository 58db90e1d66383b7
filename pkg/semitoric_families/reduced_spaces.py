"""
Reduced spaces M_j^red = J^-1(j) / S1 and the reduced Hamiltonians on them.

Every reduced Hamiltonian handled here has the form

    H(r, theta) = A(r) + k sqrt(Q(r)) cos(theta)

with A and Q polynomials in a radial coordinate r. On W_1 and W_2 the coordinate is rho
(the modulus of u3 in U14), Q = rho^2 g(rho) and the reduced area form is rho drho dtheta.
On S2 x S2 the coordinate is z1, theta is the angle between the two horizontal parts and the
area form is R1 dz1 dtheta.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
import logging
from math import pi, sqrt
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from scipy.optimize import brentq, least_squares

from semitoric_families.enums.chart_id_enum import ChartIdEnum
from semitoric_families.enums.morse_type_enum import MorseTypeEnum
from semitoric_families.enums.system_id_enum import SystemIdEnum
from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.model_systems import (
    CoupledAngularFamily,
    DegenCollapseFamily,
    HirzebruchFamily,
    HPTwoParamFamily,
    SphereFamily,
    SystemFamily,
    TimesLike,
    Times,
    W1Family,
    W2Family,
)
from semitoric_families.models.chart_point_model import ChartPointModel
from semitoric_families.models.profile_certificate_model import ProfileCertificateModel
from semitoric_families.models.reduced_critical_point_model import ReducedCriticalPointModel
from semitoric_families.models.reduced_section_model import ReducedSectionModel
from semitoric_families.utils.constants import (
    ENDPOINT_MARGIN,
    MORSE_TOLERANCE,
    RADIAL_SAMPLES,
    ROOT_TOLERANCE,
)

_LOGGER = logging.getLogger(__name__)

PROFILE_CSV_HEADER = ["rho", "g", "h", "f", "Hred(theta=0)", "Hred(theta=pi)"]


@dataclass
class ReducedHamiltonian(ABC):
    """H^{red,j} = A(r) + k sqrt(Q(r)) cos(theta) on lo <= r <= hi"""
    family: SystemFamily
    times: Times
    j_value: float
    a_poly: Polynomial
    q_poly: Polynomial
    k: float
    lo: float
    hi: float
    coefficients: Dict[str, float] = field(default_factory=dict)

    @property
    def system(self) -> SystemIdEnum:
        return self.family.system_id

    @property
    @abstractmethod
    def total_area(self) -> float:
        pass

    @abstractmethod
    def area_coordinate(self, u: np.ndarray) -> np.ndarray:
        """Radial coordinate for u in [0, 1], uniform in reduced area"""

    @abstractmethod
    def density(self, r: np.ndarray) -> np.ndarray:
        """Reduced area density in (r, theta)"""

    @abstractmethod
    def area_derivative(self, r: float) -> float:
        """dA/dtau where dtau = density dr"""

    @abstractmethod
    def lift(self, r: float, theta: float) -> ChartPointModel:
        """A point of J^-1(j) over (r, theta)"""

    def value(self, r, theta) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return self.a_poly(r) + self.k * np.sqrt(np.clip(self.q_poly(r), 0.0, None)) * np.cos(theta)

    def gradient(self, r: float, theta: float) -> Tuple[float, float]:
        q = self.q_poly(r)
        root = sqrt(max(q, 0.0))
        dq = self.q_poly.deriv()(r)
        h_r = self.a_poly.deriv()(r) + (self.k * np.cos(theta) * dq / (2 * root) if root > 0 else 0.0)
        h_theta = -self.k * np.sin(theta) * root
        return float(h_r), float(h_theta)

    def hessian(self, r: float, theta: float) -> np.ndarray:
        q = self.q_poly(r)
        dq, ddq = self.q_poly.deriv()(r), self.q_poly.deriv(2)(r)
        root = sqrt(max(q, 0.0))
        if root <= 0:
            raise DomainError(f"reduced Hessian needs Q > 0, got Q({r}) = {q}")
        h_rr = self.a_poly.deriv(2)(r) + self.k * np.cos(theta) * (2 * q * ddq - dq * dq) / (4 * q * root)
        h_rt = -self.k * np.sin(theta) * dq / (2 * root)
        h_tt = -self.k * np.cos(theta) * root
        return np.array([[h_rr, h_rt], [h_rt, h_tt]], dtype=float)

    def sublevel_angle_measure(self, r: np.ndarray, level: float) -> np.ndarray:
        """Length of {theta : H(r, theta) < level} on each circle of radius r"""
        r = np.asarray(r, dtype=float)
        a = self.a_poly(r) - level
        b = np.abs(self.k) * np.sqrt(np.clip(self.q_poly(r), 0.0, None))
        safe = np.where(b > 0, b, 1.0)
        # A + B cos < 0  <=>  cos < -A/B
        measure = 2 * np.pi - 2 * np.arccos(np.clip(-a / safe, -1.0, 1.0))
        return np.where(b > 0, measure, np.where(a < 0, 2 * np.pi, 0.0))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "system": self.system.name,
            "times": list(self.times),
            "j": self.j_value,
            "coefficients": dict(self.coefficients),
            "domain": [self.lo, self.hi],
            "total_area": self.total_area,
        }


@dataclass
class CylindricalReducedHamiltonian(ReducedHamiltonian):
    """W_1 and W_2: H = a rho^2 + b rho cos(theta) sqrt(g(rho)) + c + e g(rho)"""
    profile: Polynomial = field(default_factory=lambda: Polynomial([1.0]))  # G(s) with g(rho) = G(rho^2)

    @property
    def rho_max(self) -> float:
        return self.hi

    @property
    def total_area(self) -> float:
        return pi * self.hi ** 2

    def area_coordinate(self, u):
        return self.hi * np.sqrt(u)

    def density(self, r):
        return np.asarray(r, dtype=float)

    def area_derivative(self, r: float) -> float:
        # A as a polynomial in s = rho^2 is a s + c + e G(s); tau = s / 2
        s = r * r
        return 2 * (self.coefficients["a"] + self.coefficients["e"] * self.profile.deriv()(s))

    def lift(self, r: float, theta: float) -> ChartPointModel:
        coords = self.family.reduced_lift(self.j_value, np.array(r), np.array(theta))
        return self.family.chart_point(ChartIdEnum.U14, coords)

    def g(self, rho):
        return self.profile(np.asarray(rho, dtype=float) ** 2)

    def h(self, rho):
        """(rho sqrt(g))' = (2g + rho g') / (2 sqrt(g))"""
        rho = np.asarray(rho, dtype=float)
        g = self.g(rho)
        dg = 2 * rho * self.profile.deriv()(rho ** 2)
        return (2 * g + rho * dg) / (2 * np.sqrt(g))

    def f(self, rho):
        """2 rho^2 g g'' + 2 rho g g' - rho^2 g'^2 - 4 g^2, which is 4 g^{3/2} (rho h' - h)"""
        return 4 * profile_f_quarter(self.profile)(np.asarray(rho, dtype=float) ** 2)


@dataclass
class SphereReducedHamiltonian(ReducedHamiltonian):
    """S2 x S2: H = p z1 + q z2 + r z1 z2 + k sqrt((1 - z1^2)(1 - z2^2)) cos(theta), z2 = (j - R1 z1) / R2"""
    r1: float = 1.0
    r2: float = 1.0

    @property
    def total_area(self) -> float:
        return 2 * pi * self.r1 * (self.hi - self.lo)

    def area_coordinate(self, u):
        return self.lo + (self.hi - self.lo) * np.asarray(u, dtype=float)

    def density(self, r):
        return np.full(np.shape(r), self.r1)

    def area_derivative(self, r: float) -> float:
        return float(self.a_poly.deriv()(r)) / self.r1

    def z2(self, z1):
        return (self.j_value - self.r1 * np.asarray(z1, dtype=float)) / self.r2

    def lift(self, r: float, theta: float) -> ChartPointModel:
        z2 = float(self.z2(r))
        s1, s2 = sqrt(max(0.0, 1 - r * r)), sqrt(max(0.0, 1 - z2 * z2))
        return ChartPointModel(
            chart=ChartIdEnum.S2_S2,
            coords=[s1, 0.0, float(r), s2 * np.cos(theta), s2 * np.sin(theta), z2],
        )

    @staticmethod
    def rho_coordinate(z1):
        """rho = sqrt((1 - z1) / (1 + z1))"""
        z1 = np.asarray(z1, dtype=float)
        return np.sqrt((1 - z1) / (1 + z1))

    def rho_weight(self, rho):
        """R1 dz1 = -4 R1 rho / (1 + rho^2)^2 drho"""
        rho = np.asarray(rho, dtype=float)
        return 4 * self.r1 * rho / (1 + rho ** 2) ** 2


def _in_rho(profile: Polynomial) -> Polynomial:
    coef = np.zeros(2 * len(profile.coef) - 1)
    coef[::2] = profile.coef
    return Polynomial(coef)


def profile_f_quarter(profile: Polynomial) -> Polynomial:
    """f / 4 = 2 s G G' + 2 s^2 G G'' - s^2 G'^2 - G^2 as a polynomial in s = rho^2"""
    s = Polynomial([0.0, 1.0])
    d1, d2 = profile.deriv(), profile.deriv(2)
    return 2 * s * profile * d1 + 2 * s ** 2 * profile * d2 - s ** 2 * d1 ** 2 - profile ** 2


def radial_profile(family: HirzebruchFamily, j: float) -> Tuple[Polynomial, float]:
    """
    G(s) with g(rho) = G(rho^2), and rho_max on the level J = j.

    Raises:
        DomainError: If j is not an interior value of J
    """
    alpha, beta = family.alpha, family.beta
    s = Polynomial([0.0, 1.0])
    if isinstance(family, W1Family):
        if not 0.0 < j < alpha + beta:
            raise DomainError(f"W1 reduced spaces need 0 < j < {alpha + beta}, got j={j}")
        profile = (2 * beta - s) * (2 * (alpha + beta - j) - s)
        rho_max2 = min(2 * beta, 2 * (alpha + beta - j))
    elif isinstance(family, W2Family):
        if not 0.0 < j < alpha + 2 * beta:
            raise DomainError(f"W2 reduced spaces need 0 < j < {alpha + 2 * beta}, got j={j}")
        profile = (2 * (alpha + 2 * beta - j) - s) * (2 * j - s) * (2 * beta - s)
        rho_max2 = min(2 * beta, 2 * j, 2 * (alpha + 2 * beta - j))
    else:
        raise DomainError(f"{family.system_id.name} has no cylindrical reduced space")
    return profile, sqrt(rho_max2)


def _w1_coefficients(family: W1Family, times: Times, j: float) -> Dict[str, float]:
    (t,) = times
    coefficients = {"a": (1 - 2 * t) / 2, "b": family.gamma * t, "c": 0.0, "e": 0.0}
    if family.system_id == SystemIdEnum.W1_SWITCH:
        coefficients.update(b=family.gamma * t * j, c=t * family.beta)
    elif family.system_id == SystemIdEnum.W1_HYPERBOLIC:
        coefficients["e"] = 2 * t
    return coefficients


def _w2_slice(system: SystemIdEnum, times: Times) -> Tuple[float, float]:
    if system == SystemIdEnum.W2_TRANS_B:
        return times[0], 1.0
    if system == SystemIdEnum.W2_TRANS_C:
        return 0.0, 1.0 - times[0]
    return times


def _w2_coefficients(family: W2Family, times: Times, j: float) -> Dict[str, float]:
    s1, s2 = _w2_slice(family.system_id, times)
    alpha, beta, gamma = family.alpha, family.beta, family.gamma
    norm = alpha * (alpha + 2 * beta)
    level = 2 * j - alpha - 2 * beta
    return {
        "a": s2 - s1 + level * (s1 * s2 * beta - (1 - s1) * (1 - s2) * (alpha + beta)) / norm,
        "b": ((1 - s1) * (1 - s2) * (alpha + beta) + s1 * s2 * beta) * gamma / norm,
        "c": (1 - s1 - s2 + 2 * s1 * s2) * level * beta / (alpha + 2 * beta) + (s1 - s2) * beta,
        "e": 0.0,
    }


def _sphere_coefficients(family: SphereFamily, times: Times, j: float) -> Dict[str, float]:
    if isinstance(family, HPTwoParamFamily):
        s1, s2 = times
        return {
            "p": (1 - s1) * (1 - s2),
            "q": s1 * s2,
            "r": s1 * (1 - s2) - s2 * (1 - s1),
            "k": s1 * (1 - s2) + s2 * (1 - s1),
        }
    (t,) = times
    if isinstance(family, DegenCollapseFamily):
        return {"p": 1 - 2 * t, "q": 0.0, "r": 0.0, "k": j - family.j0}
    return {"p": 1 - t, "q": 0.0, "r": t, "k": t}


def reduced_hamiltonian(family: SystemFamily, params: TimesLike, j: float) -> ReducedHamiltonian:
    """
    Closed-form reduced Hamiltonian on the level J = j.

    Args:
        family: W1, W2 or S2 x S2 family whose J rotates both factors
        params: t or (s1, s2)
        j: Interior value of J

    Returns:
        CylindricalReducedHamiltonian or SphereReducedHamiltonian

    Raises:
        DomainError: For j outside the open J-range or a family without this reduction
    """
    times = family.times(params)
    j = float(j)
    if isinstance(family, HirzebruchFamily):
        profile, rho_max = radial_profile(family, j)
        if isinstance(family, W1Family):
            coefficients = _w1_coefficients(family, times, j)
        else:
            coefficients = _w2_coefficients(family, times, j)
        s_profile = Polynomial([coefficients["c"], coefficients["a"]]) + coefficients["e"] * profile
        rho = Polynomial([0.0, 1.0])
        return CylindricalReducedHamiltonian(
            family=family,
            times=times,
            j_value=j,
            a_poly=_in_rho(s_profile),
            q_poly=rho ** 2 * _in_rho(profile),
            k=coefficients["b"],
            lo=0.0,
            hi=rho_max,
            coefficients=coefficients,
            profile=profile,
        )

    if isinstance(family, (CoupledAngularFamily, HPTwoParamFamily, DegenCollapseFamily)):
        r1, r2 = family.sphere.r1, family.sphere.r2
        if not -(r1 + r2) < j < r1 + r2:
            raise DomainError(f"S2 x S2 reduced spaces need |j| < {r1 + r2}, got j={j}")
        coefficients = _sphere_coefficients(family, times, j)
        z1 = Polynomial([0.0, 1.0])
        z2 = Polynomial([j / r2, -r1 / r2])
        a_poly = coefficients["p"] * z1 + coefficients["q"] * z2 + coefficients["r"] * z1 * z2
        return SphereReducedHamiltonian(
            family=family,
            times=times,
            j_value=j,
            a_poly=a_poly,
            q_poly=(1 - z1 ** 2) * (1 - z2 ** 2),
            k=coefficients["k"],
            lo=max(-1.0, (j - r2) / r1),
            hi=min(1.0, (j + r2) / r1),
            coefficients=coefficients,
            r1=r1,
            r2=r2,
        )
    raise DomainError(f"{family.system_id.name} has no cylindrical reduced Hamiltonian")


def _morse_type(hessian: np.ndarray) -> MorseTypeEnum:
    scale = float(np.max(np.abs(hessian)))
    eigenvalues = np.linalg.eigvalsh(hessian)
    if scale == 0.0 or np.min(np.abs(eigenvalues)) < MORSE_TOLERANCE * scale:
        return MorseTypeEnum.DEGENERATE
    if eigenvalues[0] * eigenvalues[1] > 0:
        return MorseTypeEnum.ELLIPTIC
    return MorseTypeEnum.HYPERBOLIC


def _pole_points(rh: ReducedHamiltonian) -> List[ReducedCriticalPointModel]:
    # With k = 0 the ends of the radial range are poles of the reduced sphere where H is radial
    found = []
    for r, side in ((rh.lo, 1.0), (rh.hi, -1.0)):
        scale = side * rh.area_derivative(r)
        hessian = np.diag([scale, scale])
        morse = MorseTypeEnum.ELLIPTIC if scale != 0 else MorseTypeEnum.DEGENERATE
        found.append(ReducedCriticalPointModel(
            rho=float(r), theta=0.0, morse_type=morse, residual=0.0,
            hessian=hessian.tolist(), pole=True, value=float(rh.value(r, 0.0)),
        ))
    return found


def reduced_critical_points(rh: ReducedHamiltonian, samples: int = RADIAL_SAMPLES) -> List[ReducedCriticalPointModel]:
    """
    Critical points of H^{red,j}.

    Away from the poles dH/dtheta = -k sin(theta) sqrt(Q) vanishes only at theta = 0 or pi, so the
    search runs on those two rays: sign changes of dH/dr on a radial grid, refined with brentq.

    Args:
        rh: Reduced Hamiltonian
        samples: Radial grid size

    Returns:
        List of ReducedCriticalPointModel, ordered by theta then radius
    """
    margin = ENDPOINT_MARGIN * max(1.0, rh.hi - rh.lo)
    grid = np.linspace(rh.lo + margin, rh.hi - margin, samples)
    found = _pole_points(rh) if rh.k == 0 else []
    for theta in ((0.0,) if rh.k == 0 else (0.0, pi)):
        def radial(r: float) -> float:
            return rh.gradient(r, theta)[0]

        values = np.array([radial(r) for r in grid])
        roots = []
        for k in range(samples - 1):
            if values[k] == 0.0:
                roots.append(float(grid[k]))
            elif values[k] * values[k + 1] < 0:
                roots.append(float(brentq(radial, grid[k], grid[k + 1], xtol=ROOT_TOLERANCE)))
        for r in roots:
            hessian = rh.hessian(r, theta)
            residual = float(max(abs(v) for v in rh.gradient(r, theta)))
            found.append(ReducedCriticalPointModel(
                rho=r, theta=theta, morse_type=_morse_type(hessian), residual=residual,
                hessian=hessian.tolist(), value=float(rh.value(r, theta)),
            ))
    _LOGGER.debug(f"{rh.system.name} j={rh.j_value}: {len(found)} reduced critical points")
    return found


def critical_point_sweep(
        rh: ReducedHamiltonian,
        known: Sequence[ReducedCriticalPointModel],
        starts: int = 64,
        seed: int = 0,
) -> List[Tuple[float, float]]:
    """
    Gradient sweep over the whole (r, theta) domain from random starts.

    Returns:
        Critical points found by the sweep that match none of the known points
    """
    rng = np.random.default_rng(seed)
    margin = ENDPOINT_MARGIN * max(1.0, rh.hi - rh.lo)
    lo, hi = rh.lo + margin, rh.hi - margin
    scale = max(1.0, float(np.max(np.abs(rh.value(np.linspace(lo, hi, 32), 0.0)))))
    unmatched: List[Tuple[float, float]] = []
    for _ in range(starts):
        x0 = np.array([rng.uniform(lo, hi), rng.uniform(0.0, 2 * pi)])
        result = least_squares(
            lambda x: np.array(rh.gradient(x[0], x[1])),
            x0,
            bounds=([lo, -np.inf], [hi, np.inf]),
            xtol=1e-14,
            ftol=1e-14,
            gtol=1e-14,
        )
        if np.max(np.abs(result.fun)) > 1e-9 * scale:
            continue
        r, theta = float(result.x[0]), float(np.mod(result.x[1], 2 * pi))
        matched = any(
            abs(r - p.rho) < 1e-6 and abs(np.cos(theta) - np.cos(p.theta)) < 1e-6 and abs(np.sin(theta)) < 1e-6
            for p in known
        )
        duplicate = any(abs(r - u) < 1e-6 and abs(theta - v) < 1e-6 for u, v in unmatched)
        if not matched and not duplicate:
            _LOGGER.warning(f"sweep found an unmatched critical point at r={r:.8f}, theta={theta:.8f}")
            unmatched.append((r, theta))
    return unmatched


def _exact_profile_quarter(alpha: Fraction, beta: Fraction, j: Fraction, s: Fraction) -> Fraction:
    big_g = (2 * beta - s) * (2 * (alpha + beta - j) - s)
    d1 = 2 * s - 2 * beta - 2 * (alpha + beta - j)
    d2 = Fraction(2)
    return 2 * s * big_g * d1 + 2 * s * s * big_g * d2 - s * s * d1 * d1 - big_g * big_g


def w1_quadratic_in_j(alpha: Fraction, beta: Fraction, s: Fraction) -> Tuple[Fraction, Fraction, Fraction]:
    """Coefficients (A, B, C) of f / 4 = A j^2 + B j + C on W1"""
    return (
        -16 * beta ** 2,
        8 * (s ** 3 - 3 * beta * s ** 2 + 4 * beta ** 2 * (alpha + beta)),
        3 * s ** 4 - 8 * (alpha + 2 * beta) * s ** 3 + 24 * beta * (alpha + beta) * s ** 2
        - 16 * beta ** 2 * (alpha + beta) ** 2,
    )


def profile_negativity_certificate(
        family: HirzebruchFamily,
        params: TimesLike,
        j: float,
        grid_points: int = 10_000,
        identity_samples: int = 8,
) -> ProfileCertificateModel:
    """
    Check that f < 0 on the open radial domain of M_j^red.

    On W1, f / 4 is a quadratic in j whose discriminant equals -64 s^3 (2 beta - s)^3; this is
    checked exactly in rationals at identity_samples values of s = rho^2, together with the
    match between f / 4 and that quadratic. On W2 only the grid check is available.

    Returns:
        ProfileCertificateModel; violations are recorded, never raised
    """
    rh = reduced_hamiltonian(family, params, j)
    if not isinstance(rh, CylindricalReducedHamiltonian):
        raise DomainError(f"{family.system_id.name} has no radial profile certificate")
    rho = np.linspace(rh.rho_max * 1e-3, rh.rho_max * (1 - 1e-3), grid_points)
    values = rh.f(rho)
    max_f = float(np.max(values))
    certificate = ProfileCertificateModel(
        system=family.system_id,
        j_value=rh.j_value,
        grid_points=grid_points,
        max_f=max_f,
        margin=-max_f / float(np.max(np.abs(values))),
    )

    if isinstance(family, W1Family):
        alpha, beta, jj = Fraction(family.alpha), Fraction(family.beta), Fraction(rh.j_value)
        identity, match = True, True
        for k in range(1, identity_samples + 1):
            s = 2 * beta * Fraction(k, identity_samples + 1)
            a, b, c = w1_quadratic_in_j(alpha, beta, s)
            identity &= b * b - 4 * a * c == -64 * s ** 3 * (2 * beta - s) ** 3
            match &= _exact_profile_quarter(alpha, beta, jj, s) == a * jj * jj + b * jj + c
        certificate.exact_identity = identity
        certificate.polynomial_match = match
        certificate.identity_samples = identity_samples
        certificate.numerical = not (identity and match)

    if not certificate.passed:
        _LOGGER.warning(f"profile certificate failed for {family.system_id.name} at j={j}: max f = {max_f:.3e}")
    return certificate


def reduced_section(family: HirzebruchFamily, j: float, count: int = 200) -> ReducedSectionModel:
    """
    The section Y = 0 of M_j^red in the (R, X) plane.

    Returns:
        ReducedSectionModel with X = +-sqrt(relation(j, R)) sampled over the R-range
    """
    _, rho_max = radial_profile(family, j)
    rho = np.linspace(0.0, rho_max, count)
    r_values = rho ** 2 / 2 if isinstance(family, W1Family) else rho ** 2 - family.beta
    x = np.sqrt(np.clip(family.reduced_relation(j, r_values), 0.0, None))
    return ReducedSectionModel(j_value=float(j), r_values=r_values, x_upper=x, x_lower=-x)


def implicit_residual(family: HirzebruchFamily, j: float, rho, theta) -> float:
    """max |X^2 + Y^2 - relation(J, R)| over lifted reduced-space points"""
    coords = family.reduced_lift(j, rho, theta)
    u = family.surface.lift(ChartIdEnum.U14, coords)
    j_values, r_values, x, y = family.invariants(u)
    return float(np.max(np.abs(x ** 2 + y ** 2 - family.reduced_relation(j_values, r_values))))


def profile_rows(rh: CylindricalReducedHamiltonian, count: int = 400) -> List[List[float]]:
    """Rows for the profile CSV: rho, g, h, f, H(theta=0), H(theta=pi)"""
    rho = np.linspace(rh.rho_max * 1e-3, rh.rho_max * (1 - 1e-3), count)
    columns = [rho, rh.g(rho), rh.h(rho), rh.f(rho), rh.value(rho, 0.0), rh.value(rho, pi)]
    return [[float(c[k]) for c in columns] for k in range(count)]


def reduced_vs_ambient_gap(rh: ReducedHamiltonian, points: Optional[Sequence[Tuple[float, float]]] = None) -> float:
    """Largest |H^{red,j}(r, theta) - H(lift(r, theta))| over sample points"""
    if points is None:
        radii = np.linspace(rh.lo, rh.hi, 9)[1:-1]
        points = [(r, th) for r in radii for th in np.linspace(0.0, 2 * pi, 6, endpoint=False)]
    gap = 0.0
    for r, theta in points:
        point = rh.lift(r, theta)
        j_value, h_value = rh.family.evaluate(rh.times, point)
        gap = max(gap, abs(h_value - float(rh.value(r, theta))), abs(j_value - rh.j_value))
    return gap
