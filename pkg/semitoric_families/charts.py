"""
Charts of the two ambient manifolds.

Hirzebruch surfaces W_n(alpha, beta) are the reduction of C^4 at level zero of
N = 1/2 (|u1|^2 + |u2|^2 + n|u3|^2, |u3|^2 + |u4|^2) - (alpha + n beta, beta). The chart U_{l,m}
fixes the phases so that u_l and u_m are real and positive; the remaining two slots p < q are the
chart coordinates (x_p, y_p, x_q, y_q) and the symplectic form is dx_p^dy_p + dx_q^dy_q.

S2 x S2 carries R1 w_S2 + R2 w_S2. Besides the ambient (x1, y1, z1, x2, y2, z2) coordinates, each
pair of poles has an equal-area Darboux chart (a1, b1, a2, b2).
"""
from dataclasses import dataclass
import logging
from typing import Dict, Sequence, Tuple

import numpy as np

from semitoric_families.enums.chart_id_enum import ChartIdEnum
from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.models.chart_point_model import ChartPointModel
from semitoric_families.utils.constants import RADICAND_TOLERANCE, SPHERE_TOLERANCE

_LOGGER = logging.getLogger(__name__)

# (l, m) real-positive slots and (p, q) coordinate slots, zero-based
HIRZEBRUCH_SLOTS: Dict[ChartIdEnum, Tuple[Tuple[int, int], Tuple[int, int]]] = {
    ChartIdEnum.U13: ((0, 2), (1, 3)),
    ChartIdEnum.U14: ((0, 3), (1, 2)),
    ChartIdEnum.U23: ((1, 2), (0, 3)),
    ChartIdEnum.U24: ((1, 3), (0, 2)),
}

# Pole signs (sigma1, sigma2), +1 for the north pole z = 1
POLE_SIGNS: Dict[ChartIdEnum, Tuple[int, int]] = {
    ChartIdEnum.POLES_NN: (1, 1),
    ChartIdEnum.POLES_NS: (1, -1),
    ChartIdEnum.POLES_SN: (-1, 1),
    ChartIdEnum.POLES_SS: (-1, -1),
}


def symplectic_matrix(chart: ChartIdEnum) -> np.ndarray:
    """Omega with omega(e_i, e_j) = Omega[i, j] in the chart's Darboux coordinates"""
    if chart == ChartIdEnum.S2_S2:
        raise DomainError("ambient S2 x S2 coordinates are not Darboux; use a pole chart")
    block = np.array([[0.0, 1.0], [-1.0, 0.0]])
    omega = np.zeros((4, 4))
    omega[:2, :2] = block
    omega[2:, 2:] = block
    return omega


def _checked_sqrt(radicand: np.ndarray, what: str) -> np.ndarray:
    radicand = np.asarray(radicand, dtype=float)
    if np.any(radicand < -RADICAND_TOLERANCE):
        worst = float(np.min(radicand))
        raise DomainError(f"point outside the chart domain: {what} radicand {worst:.3e} < 0")
    return np.sqrt(np.clip(radicand, 0.0, None))


@dataclass(frozen=True)
class HirzebruchSurface:
    """W_n(alpha, beta) with its four charts U_{l,m}"""
    n: int
    alpha: float
    beta: float

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"Hirzebruch index must be non-negative, got {self.n}")
        if self.alpha <= 0 or self.beta <= 0:
            raise DomainError("alpha and beta must be positive")

    def level(self, u: np.ndarray) -> np.ndarray:
        """N(u) as an array of shape (..., 2)"""
        sq = np.abs(u) ** 2
        first = 0.5 * (sq[..., 0] + sq[..., 1] + self.n * sq[..., 2]) - (self.alpha + self.n * self.beta)
        second = 0.5 * (sq[..., 2] + sq[..., 3]) - self.beta
        return np.stack([first, second], axis=-1)

    def level_residual(self, u: np.ndarray) -> float:
        return float(np.max(np.abs(self.level(u))))

    def lift(self, chart: ChartIdEnum, coords: np.ndarray) -> np.ndarray:
        """
        Representative on N^-1(0) of chart coordinates.

        Args:
            chart: One of U13, U14, U23, U24
            coords: Array of shape (..., 4) holding (x_p, y_p, x_q, y_q)

        Returns:
            Complex array of shape (..., 4) with u_l, u_m real and non-negative
        """
        if chart not in HIRZEBRUCH_SLOTS:
            raise DomainError(f"{chart.name} is not a Hirzebruch chart")
        (l, m), (p, q) = HIRZEBRUCH_SLOTS[chart]
        coords = np.asarray(coords, dtype=float)
        u = np.zeros(coords.shape[:-1] + (4,), dtype=complex)
        u[..., p] = coords[..., 0] + 1j * coords[..., 1]
        u[..., q] = coords[..., 2] + 1j * coords[..., 3]

        # m is always slot 3 or 4 and l always slot 1 or 2
        if m == 2:
            sq4 = np.abs(u[..., 3]) ** 2
            sq3 = 2 * self.beta - sq4
            u[..., 2] = _checked_sqrt(sq3, "|u3|^2")
        else:
            sq3 = np.abs(u[..., 2]) ** 2
            u[..., 3] = _checked_sqrt(2 * self.beta - sq3, "|u4|^2")
            sq3 = np.clip(sq3, 0.0, None)
        other = 1 - l
        sq_other = np.abs(u[..., other]) ** 2
        u[..., l] = _checked_sqrt(
            2 * (self.alpha + self.n * self.beta) - self.n * np.clip(sq3, 0.0, None) - sq_other,
            f"|u{l + 1}|^2",
        )
        return u

    def to_chart(self, u: np.ndarray, chart: ChartIdEnum) -> np.ndarray:
        """Chart coordinates of a representative, after normalising the torus phases"""
        if chart not in HIRZEBRUCH_SLOTS:
            raise DomainError(f"{chart.name} is not a Hirzebruch chart")
        (l, m), (p, q) = HIRZEBRUCH_SLOTS[chart]
        u = np.asarray(u, dtype=complex)
        if np.any(np.abs(u[..., l]) <= 0) or np.any(np.abs(u[..., m]) <= 0):
            raise DomainError(f"point outside {chart.name}: u{l + 1} or u{m + 1} vanishes")
        phi1 = -np.angle(u[..., l])
        phi2 = -np.angle(u[..., m]) - (self.n * phi1 if m == 2 else 0.0)
        phases = np.stack([phi1, phi1, self.n * phi1 + phi2, phi2], axis=-1)
        v = u * np.exp(1j * phases)
        return np.stack([v[..., p].real, v[..., p].imag, v[..., q].real, v[..., q].imag], axis=-1)

    def in_domain(self, chart: ChartIdEnum, coords: Sequence[float]) -> bool:
        try:
            self.lift(chart, np.asarray(coords, dtype=float))
        except DomainError:
            return False
        return True


@dataclass(frozen=True)
class SpherePair:
    """S2 x S2 with symplectic form R1 w_S2 + R2 w_S2"""
    r1: float
    r2: float

    def __post_init__(self):
        if self.r1 <= 0 or self.r2 <= 0:
            raise DomainError("sphere radii must be positive")

    def sphere_residual(self, p: np.ndarray) -> float:
        p = np.asarray(p, dtype=float)
        first = np.sum(p[..., :3] ** 2, axis=-1) - 1.0
        second = np.sum(p[..., 3:] ** 2, axis=-1) - 1.0
        return float(np.max(np.abs(np.stack([first, second]))))

    def check_ambient(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        if p.shape[-1] != 6:
            raise DomainError("S2 x S2 points need six coordinates")
        residual = self.sphere_residual(p)
        if residual > SPHERE_TOLERANCE:
            raise DomainError(f"point off the unit spheres, residual {residual:.3e}")
        return p

    @staticmethod
    def _pole_lift(r: float, sigma: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        rr = a ** 2 + b ** 2
        s = _checked_sqrt((1.0 - rr / (4.0 * r)) / r, "pole chart")
        z = sigma * (1.0 - rr / (2.0 * r))
        return np.stack([a * s, sigma * b * s, z], axis=-1)

    def lift(self, chart: ChartIdEnum, coords: np.ndarray) -> np.ndarray:
        """Ambient (..., 6) coordinates of a chart point"""
        coords = np.asarray(coords, dtype=float)
        if chart == ChartIdEnum.S2_S2:
            return self.check_ambient(coords)
        if chart not in POLE_SIGNS:
            raise DomainError(f"{chart.name} is not an S2 x S2 chart")
        s1, s2 = POLE_SIGNS[chart]
        first = self._pole_lift(self.r1, s1, coords[..., 0], coords[..., 1])
        second = self._pole_lift(self.r2, s2, coords[..., 2], coords[..., 3])
        return np.concatenate([first, second], axis=-1)

    @staticmethod
    def _pole_coords(r: float, sigma: int, xyz: np.ndarray) -> np.ndarray:
        rr = 2.0 * r * (1.0 - sigma * xyz[..., 2])
        s = np.sqrt(np.clip((1.0 - rr / (4.0 * r)) / r, 0.0, None))
        if np.any(s <= 0):
            raise DomainError("the antipodal pole is outside the pole chart")
        return np.stack([xyz[..., 0] / s, sigma * xyz[..., 1] / s], axis=-1)

    def to_chart(self, p: np.ndarray, chart: ChartIdEnum) -> np.ndarray:
        p = self.check_ambient(p)
        if chart == ChartIdEnum.S2_S2:
            return p
        if chart not in POLE_SIGNS:
            raise DomainError(f"{chart.name} is not an S2 x S2 chart")
        s1, s2 = POLE_SIGNS[chart]
        return np.concatenate([
            self._pole_coords(self.r1, s1, p[..., :3]),
            self._pole_coords(self.r2, s2, p[..., 3:]),
        ], axis=-1)

    def poisson_bracket(self, grad_f: np.ndarray, grad_g: np.ndarray, p: np.ndarray) -> float:
        """
        Bracket of two functions from their ambient gradients.

        {f, g} = sum_i (1/R_i) p_i . (grad_i f x grad_i g); normal components drop out.
        """
        total = 0.0
        for k, r in ((0, self.r1), (1, self.r2)):
            sl = slice(3 * k, 3 * k + 3)
            total += float(np.dot(p[sl], np.cross(grad_f[sl], grad_g[sl]))) / r
        return total


def hirzebruch_lift(
        n: int,
        alpha: float,
        beta: float,
        chart: ChartIdEnum,
        coords: Sequence[float],
) -> ChartPointModel:
    """
    Reconstruct a representative [u1, u2, u3, u4] on N^-1(0) from chart coordinates.

    Example:
        >>> point = hirzebruch_lift(2, 1.0, 1.0, ChartIdEnum.U14, [0, 0, 0, 0])
        >>> [round(abs(z) ** 2, 9) for z in point.representative]
        [6.0, 0.0, 0.0, 2.0]
    """
    surface = HirzebruchSurface(n, float(alpha), float(beta))
    coords = [float(c) for c in coords]
    if len(coords) != 4:
        raise DomainError("Hirzebruch chart points need four coordinates")
    u = surface.lift(chart, np.array(coords))
    residual = surface.level_residual(u)
    _LOGGER.debug(f"lifted {coords} in {chart.name} with level residual {residual:.2e}")
    return ChartPointModel(chart=chart, coords=coords, representative=[complex(z) for z in u], residual=residual)
