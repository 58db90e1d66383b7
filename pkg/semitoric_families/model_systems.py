"""
Explicit system families on S2 x S2 and on the Hirzebruch surfaces W_1, W_2.

Every family evaluates its momentum map (J, H) on ambient points, vectorised over leading axes:
complex arrays u of shape (..., 4) on N^-1(0) for W_n, real arrays p of shape (..., 6) for
S2 x S2. Charts turn these into functions of four Darboux coordinates for Hessian work.
"""
from abc import ABC, abstractmethod
import logging
from math import cos, pi, sin, sqrt
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Type, Union

import numpy as np
from scipy.optimize import brentq

from semitoric_families.charts import POLE_SIGNS, HirzebruchSurface, SpherePair, hirzebruch_lift, symplectic_matrix
from semitoric_families.enums.chart_id_enum import ChartIdEnum
from semitoric_families.enums.system_id_enum import SystemIdEnum
from semitoric_families.exceptions.domain_error import DomainError
from semitoric_families.exceptions.numerical_error import NumericalError
from semitoric_families.models.chart_point_model import ChartPointModel
from semitoric_families.models.critical_set_model import CriticalSetModel
from semitoric_families.models.fixed_point_inventory_model import FixedPointInventoryModel
from semitoric_families.models.fixed_point_model import FixedPointModel
from semitoric_families.models.momentum_image_model import MomentumImageModel
from semitoric_families.utils.constants import (
    FIXED_POINT_RESIDUAL,
    MIN_RESOLUTION,
    QUARTIC_TOLERANCE,
    RADIAL_SAMPLES,
    ROOT_TOLERANCE,
)
from semitoric_families.utils.finite_differences import gradient_fd
from semitoric_families.utils.parallel import map_tiles

_LOGGER = logging.getLogger(__name__)

Times = Tuple[float, ...]
TimesLike = Union[float, int, Sequence[float]]
ChartFunction = Callable[[np.ndarray], np.ndarray]
LabelledPoint = Tuple[str, ChartIdEnum, Sequence[float]]

_ORIGIN = (0.0, 0.0, 0.0, 0.0)


def _is_half(t: float) -> bool:
    return abs(t - 0.5) < 1e-12


class SystemFamily(ABC):
    """A named family (J, H_t) or (J, H_{s1,s2}) with its fixed-point inventory"""
    system_id: SystemIdEnum
    arity: int = 1
    transition_label: Optional[str] = None
    charts: Tuple[ChartIdEnum, ...] = ()

    def times(self, params: TimesLike) -> Times:
        """Normalise a time t or a pair (s1, s2) and check it lies in [0, 1]"""
        if isinstance(params, (int, float)):
            values = (float(params),)
        else:
            values = tuple(float(v) for v in params)
        if len(values) != self.arity:
            raise DomainError(f"{self.system_id.name} takes {self.arity} time parameter(s), got {len(values)}")
        for v in values:
            if not 0.0 <= v <= 1.0:
                raise DomainError(f"time parameter {v} outside [0, 1]")
        return values

    @abstractmethod
    def parameters(self) -> Dict[str, float]:
        pass

    @abstractmethod
    def lift(self, chart: ChartIdEnum, coords: np.ndarray) -> np.ndarray:
        """Ambient representative of chart coordinates"""

    @abstractmethod
    def ambient_j(self, x: np.ndarray) -> np.ndarray:
        pass

    @abstractmethod
    def ambient_h(self, x: np.ndarray, times: Times) -> np.ndarray:
        pass

    @abstractmethod
    def labelled_points(self, times: Times) -> List[LabelledPoint]:
        """Rank-zero points as (label, chart, chart coordinates)"""

    @abstractmethod
    def ambient_tiles(self, resolution: int) -> List[np.ndarray]:
        """Deterministic sampling grid of the manifold, split into tiles"""

    def critical_sets(self, times: Times) -> List[CriticalSetModel]:
        return []

    def closed_form_transition_times(self) -> Optional[Tuple[float, float]]:
        return None

    def special_directions(self, times: Times) -> List[Tuple[float, float]]:
        """Extra (nu, mu) combinations tried before the unit-circle net"""
        return [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, -1.0)]

    def check_chart(self, chart: ChartIdEnum) -> None:
        if chart not in self.charts:
            raise DomainError(f"{chart.name} is not a chart of {self.system_id.name}")

    def chart_functions(self, chart: ChartIdEnum, params: TimesLike) -> Tuple[ChartFunction, ChartFunction]:
        """J and H_t as vectorised functions of chart coordinates"""
        self.check_chart(chart)
        times = self.times(params)

        def j_fn(coords: np.ndarray) -> np.ndarray:
            return self.ambient_j(self.lift(chart, coords))

        def h_fn(coords: np.ndarray) -> np.ndarray:
            return self.ambient_h(self.lift(chart, coords), times)

        return j_fn, h_fn

    def evaluate(self, params: TimesLike, point: ChartPointModel) -> Tuple[float, float]:
        self.check_chart(point.chart)
        times = self.times(params)
        x = self.lift(point.chart, np.asarray(point.coords, dtype=float))
        return float(self.ambient_j(x)), float(self.ambient_h(x, times))

    def gradient_residual(self, chart: ChartIdEnum, params: TimesLike, coords: Sequence[float]) -> float:
        """max(|dJ|, |dH|) at a chart point"""
        j_fn, h_fn = self.chart_functions(chart, params)
        x = np.asarray(coords, dtype=float)
        return float(max(np.max(np.abs(gradient_fd(j_fn, x))), np.max(np.abs(gradient_fd(h_fn, x)))))

    @abstractmethod
    def poisson_bracket(self, params: TimesLike, chart: ChartIdEnum, coords: Sequence[float]) -> float:
        """{J, H_t} at a chart point from finite-difference gradients"""

    def chart_point(self, chart: ChartIdEnum, coords: Sequence[float]) -> ChartPointModel:
        return ChartPointModel(chart=chart, coords=[float(c) for c in coords])

    def fixed_points(self, params: TimesLike) -> FixedPointInventoryModel:
        times = self.times(params)
        inventory = FixedPointInventoryModel(system=self.system_id, times=times)
        for label, chart, coords in self.labelled_points(times):
            point = self.chart_point(chart, coords)
            j_value, h_value = self.evaluate(times, point)
            residual = self.gradient_residual(chart, times, coords)
            if residual > FIXED_POINT_RESIDUAL:
                _LOGGER.warning(f"{self.system_id.name} {label} at {times}: gradient residual {residual:.2e}")
            inventory.points.append(FixedPointModel(label, point, j_value, h_value, residual))
        inventory.critical_sets.extend(self.critical_sets(times))
        return inventory


# ----------------------------
# S2 x S2 FAMILIES
# ----------------------------

class SphereFamily(SystemFamily):
    """Families on S2 x S2 with J = w1 z1 + w2 z2"""
    charts = (ChartIdEnum.S2_S2, ChartIdEnum.POLES_NN, ChartIdEnum.POLES_NS, ChartIdEnum.POLES_SN, ChartIdEnum.POLES_SS)

    def __init__(self, r1: float, r2: float, weights: Tuple[float, float]):
        self.sphere = SpherePair(float(r1), float(r2))
        self.weights = weights

    def parameters(self) -> Dict[str, float]:
        return {"r1": self.sphere.r1, "r2": self.sphere.r2}

    def lift(self, chart: ChartIdEnum, coords: np.ndarray) -> np.ndarray:
        return self.sphere.lift(chart, coords)

    def ambient_j(self, p: np.ndarray) -> np.ndarray:
        return self.weights[0] * p[..., 2] + self.weights[1] * p[..., 5]

    @staticmethod
    def coupling(p: np.ndarray) -> np.ndarray:
        """X = x1 x2 + y1 y2"""
        return p[..., 0] * p[..., 3] + p[..., 1] * p[..., 4]

    def labelled_points(self, times: Times) -> List[LabelledPoint]:
        return [(chart.name.split("_")[1], chart, _ORIGIN) for chart in POLE_SIGNS]

    def pole_chart(self, label: str) -> ChartIdEnum:
        return ChartIdEnum[f"POLES_{label}"]

    def ambient_tiles(self, resolution: int) -> List[np.ndarray]:
        z = np.linspace(-1.0, 1.0, resolution)
        phi = np.linspace(0.0, 2 * pi, resolution, endpoint=False)
        tiles = []
        for z1 in z:
            z2, ph = np.meshgrid(z, phi, indexing="ij")
            s1, s2 = sqrt(max(0.0, 1 - z1 * z1)), np.sqrt(np.clip(1 - z2 ** 2, 0.0, None))
            p = np.stack([
                np.full_like(z2, s1), np.zeros_like(z2), np.full_like(z2, z1),
                s2 * np.cos(ph), s2 * np.sin(ph), z2,
            ], axis=-1)
            tiles.append(p.reshape(-1, 6))
        return tiles

    def ambient_gradients(self, params: TimesLike, p: Sequence[float]) -> Tuple[np.ndarray, np.ndarray]:
        times = self.times(params)
        p = np.asarray(p, dtype=float)
        return (
            gradient_fd(self.ambient_j, p),
            gradient_fd(lambda x: self.ambient_h(x, times), p),
        )

    def poisson_bracket(self, params: TimesLike, chart: ChartIdEnum, coords: Sequence[float]) -> float:
        self.check_chart(chart)
        p = self.lift(chart, np.asarray(coords, dtype=float))
        grad_j, grad_h = self.ambient_gradients(params, p)
        return self.sphere.poisson_bracket(grad_j, grad_h, p)

    def level_samples(self, j: float, count: int = 64) -> np.ndarray:
        """Points of J^-1(j), sampled along z1 and the relative angle"""
        w1, w2 = self.weights
        if w2 == 0:
            raise DomainError("level sampling needs J to involve z2")
        lo = max(-1.0, (j - w2) / w1)
        hi = min(1.0, (j + w2) / w1)
        if lo > hi:
            raise DomainError(f"level {j} outside the J-range")
        side = max(2, int(sqrt(count)))
        z1, phi = np.meshgrid(np.linspace(lo, hi, side), np.linspace(0.0, 2 * pi, side, endpoint=False), indexing="ij")
        z2 = np.clip((j - w1 * z1) / w2, -1.0, 1.0)
        s1, s2 = np.sqrt(np.clip(1 - z1 ** 2, 0, None)), np.sqrt(np.clip(1 - z2 ** 2, 0, None))
        p = np.stack([s1, np.zeros_like(z1), z1, s2 * np.cos(phi), s2 * np.sin(phi), z2], axis=-1)
        return p.reshape(-1, 6)


class CoupledAngularFamily(SphereFamily):
    """Coupled angular momenta: J = R1 z1 + R2 z2, H_t = (1 - t) z1 + t (x1 x2 + y1 y2 + z1 z2)"""
    system_id = SystemIdEnum.COUPLED_ANGULAR
    transition_label = "NS"

    def __init__(self, r1: float = 1.0, r2: float = 2.0):
        if not 0 < r1 < r2:
            raise DomainError(f"coupled angular momenta need 0 < R1 < R2, got R1={r1}, R2={r2}")
        super().__init__(r1, r2, (float(r1), float(r2)))

    def ambient_h(self, p: np.ndarray, times: Times) -> np.ndarray:
        (t,) = times
        return (1 - t) * p[..., 2] + t * (self.coupling(p) + p[..., 2] * p[..., 5])

    def closed_form_transition_times(self) -> Optional[Tuple[float, float]]:
        r1, r2 = self.sphere.r1, self.sphere.r2
        root = 2 * sqrt(r1 * r2)
        return r2 / (2 * r2 + r1 + root), r2 / (2 * r2 + r1 - root)


class HPTwoParamFamily(SphereFamily):
    """Two-parameter family on S2 x S2 with focus-focus points at NS and SN near (1/2, 1/2)"""
    system_id = SystemIdEnum.HP_TWO_PARAM
    arity = 2

    def __init__(self, r1: float = 1.0, r2: float = 2.0):
        if not 0 < r1 < r2:
            raise DomainError(f"the two-parameter family needs 0 < R1 < R2, got R1={r1}, R2={r2}")
        super().__init__(r1, r2, (float(r1), float(r2)))

    def ambient_h(self, p: np.ndarray, times: Times) -> np.ndarray:
        s1, s2 = times
        x, z1, z2 = self.coupling(p), p[..., 2], p[..., 5]
        return (
            (1 - s1) * (1 - s2) * z1
            + s1 * s2 * z2
            + s1 * (1 - s2) * (x + z1 * z2)
            + s2 * (1 - s1) * (x - z1 * z2)
        )


class _UnitSphereFamily(SphereFamily):
    """J = z1 on S2 x S2 with the standard form"""

    def __init__(self, j0: float):
        if not -1.0 <= j0 <= 1.0:
            raise DomainError(f"j0 must lie in [-1, 1], got {j0}")
        super().__init__(1.0, 1.0, (1.0, 0.0))
        self.j0 = float(j0)

    def parameters(self) -> Dict[str, float]:
        return {"j0": self.j0}

    def _circle_set(self, label: str, kind: str, sigma1: int, z2: float, times: Times) -> CriticalSetModel:
        # Circle z1 = sigma1, z2 = const sampled in a pole chart of the second factor
        chart = ChartIdEnum.POLES_NN if sigma1 > 0 else ChartIdEnum.POLES_SN
        radius = sqrt(2.0 * (1.0 - z2))
        samples = [(0.0, 0.0, radius * cos(a), radius * sin(a)) for a in np.linspace(0, 2 * pi, 16, endpoint=False)]
        residual = max(self.gradient_residual(chart, times, c) for c in samples)
        h_value = float(self.ambient_h(self.lift(chart, np.array(samples[0])), times))
        return CriticalSetModel(label, kind, float(sigma1), h_value, len(samples), residual)


class DegenAppearanceFamily(_UnitSphereFamily):
    """H_t = z2^3 + ((z1 - j0)^2 + (1 - 2t)^2) z2: a circle of degenerate rank-zero points appears at t = 1/2"""
    system_id = SystemIdEnum.DEGEN_APPEARANCE

    def __init__(self, j0: float = -1.0):
        super().__init__(j0)

    def ambient_h(self, p: np.ndarray, times: Times) -> np.ndarray:
        (t,) = times
        z1, z2 = p[..., 2], p[..., 5]
        return z2 ** 3 + ((z1 - self.j0) ** 2 + (1 - 2 * t) ** 2) * z2

    def critical_sets(self, times: Times) -> List[CriticalSetModel]:
        (t,) = times
        if not _is_half(t) or abs(self.j0) != 1.0:
            return []
        sigma = 1 if self.j0 > 0 else -1
        return [self._circle_set("z1=j0,z2=0", "degenerate-circle", sigma, 0.0, times)]


class DegenBecomeFamily(_UnitSphereFamily):
    """H_t = (z2 - 1)^2 + ((1 - 2t)^2 + (z1 - j0)^2) z2: SN turns degenerate at t = 1/2"""
    system_id = SystemIdEnum.DEGEN_BECOME

    def __init__(self, j0: float = -1.0):
        super().__init__(j0)

    def ambient_h(self, p: np.ndarray, times: Times) -> np.ndarray:
        (t,) = times
        z1, z2 = p[..., 2], p[..., 5]
        return (z2 - 1) ** 2 + ((1 - 2 * t) ** 2 + (z1 - self.j0) ** 2) * z2

    def critical_sets(self, times: Times) -> List[CriticalSetModel]:
        # On each fixed sphere z1 = +-1, H restricted to the second factor has a critical circle at z2 = 1 - c/2
        (t,) = times
        found = []
        for sigma in (1, -1):
            c = (1 - 2 * t) ** 2 + (sigma - self.j0) ** 2
            z2 = 1.0 - c / 2.0
            if -1.0 < z2 < 1.0:
                found.append(self._circle_set(f"z1={sigma},z2={z2:.6g}", "critical-circle", sigma, z2, times))
        return found


class DegenCollapseFamily(SphereFamily):
    """H_t = (1 - 2t) z1 + (J - j0)(x1 x2 + y1 y2): the level J^-1(j0) collapses at t = 1/2"""
    system_id = SystemIdEnum.DEGEN_COLLAPSE

    def __init__(self, r1: float = 1.0, r2: float = 2.0, j0: float = -1.0):
        if not 0 < r1 < r2:
            raise DomainError(f"need 0 < R1 < R2, got R1={r1}, R2={r2}")
        if not -(r1 + r2) < j0 < r1 + r2:
            raise DomainError(f"j0={j0} must be an interior value of J")
        super().__init__(r1, r2, (float(r1), float(r2)))
        self.j0 = float(j0)

    def parameters(self) -> Dict[str, float]:
        return {"r1": self.sphere.r1, "r2": self.sphere.r2, "j0": self.j0}

    def ambient_h(self, p: np.ndarray, times: Times) -> np.ndarray:
        (t,) = times
        return (1 - 2 * t) * p[..., 2] + (self.ambient_j(p) - self.j0) * self.coupling(p)

    def critical_sets(self, times: Times) -> List[CriticalSetModel]:
        (t,) = times
        if not _is_half(t):
            return []
        samples = self.level_samples(self.j0)
        values = self.ambient_h(samples, times)
        return [CriticalSetModel(
            label=f"J={self.j0:g}",
            kind="collapsed-level",
            j_value=self.j0,
            h_value=0.0,
            sample_count=int(values.size),
            max_residual=float(np.max(np.abs(values))),
        )]


# ----------------------------
# HIRZEBRUCH FAMILIES
# ----------------------------

class HirzebruchFamily(SystemFamily):
    """Families on W_n(alpha, beta); fixed points A, B, C, D are the chart origins"""
    n: int = 1
    charts = (ChartIdEnum.U13, ChartIdEnum.U14, ChartIdEnum.U23, ChartIdEnum.U24)
    origin_labels = {"A": ChartIdEnum.U14, "B": ChartIdEnum.U13, "C": ChartIdEnum.U23, "D": ChartIdEnum.U24}

    def __init__(self, alpha: float, beta: float, gamma: float):
        self.surface = HirzebruchSurface(self.n, float(alpha), float(beta))
        self.alpha, self.beta, self.gamma = float(alpha), float(beta), float(gamma)
        lo, hi = self.gamma_window(self.alpha, self.beta)
        if not lo < self.gamma < hi:
            raise DomainError(
                f"{self.system_id.name} needs {lo:.6g} < gamma < {hi:.6g}, got gamma={self.gamma}"
            )

    @classmethod
    def gamma_window(cls, alpha: float, beta: float) -> Tuple[float, float]:
        return 0.0, float("inf")

    def parameters(self) -> Dict[str, float]:
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}

    def lift(self, chart: ChartIdEnum, coords: np.ndarray) -> np.ndarray:
        return self.surface.lift(chart, coords)

    def chart_point(self, chart: ChartIdEnum, coords: Sequence[float]) -> ChartPointModel:
        return hirzebruch_lift(self.n, self.alpha, self.beta, chart, coords)

    @abstractmethod
    def invariants(self, u: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """(J, R, X, Y) of ambient representatives"""

    @abstractmethod
    def reduced_relation(self, j: np.ndarray, r: np.ndarray) -> np.ndarray:
        """Right-hand side of X^2 + Y^2 = ... on the level J = j"""

    @abstractmethod
    def reduced_lift(self, j: float, rho: np.ndarray, theta: np.ndarray) -> np.ndarray:
        """U14 coordinates of the reduced-space point (rho, theta) on J^-1(j)"""

    def ambient_j(self, u: np.ndarray) -> np.ndarray:
        return self.invariants(u)[0]

    def labelled_points(self, times: Times) -> List[LabelledPoint]:
        return [(label, chart, _ORIGIN) for label, chart in self.origin_labels.items()]

    def sphere_point(self, x3: float) -> Tuple[ChartIdEnum, List[float]]:
        """Point (0, 0, x3, 0) of U14 in whichever of U14, U13 keeps it away from the chart edge"""
        chart = ChartIdEnum.U13 if x3 * x3 > self.beta else ChartIdEnum.U14
        if chart == ChartIdEnum.U14:
            return chart, [0.0, 0.0, float(x3), 0.0]
        u = self.surface.lift(ChartIdEnum.U14, np.array([0.0, 0.0, x3, 0.0]))
        return chart, [float(c) for c in self.surface.to_chart(u, chart)]

    def ambient_tiles(self, resolution: int) -> List[np.ndarray]:
        n, alpha, beta = self.n, self.alpha, self.beta
        fractions = np.linspace(0.0, 1.0, resolution)
        theta = np.linspace(0.0, 2 * pi, resolution, endpoint=False)
        tiles = []
        for r in np.linspace(0.0, 2 * beta, resolution):
            q_max = 2 * (alpha + n * beta) - n * r
            frac, th = np.meshgrid(fractions, theta, indexing="ij")
            q = frac * q_max
            u = np.stack([
                np.sqrt(np.clip(q_max - q, 0.0, None)).astype(complex),
                np.sqrt(q).astype(complex),
                sqrt(r) * np.exp(1j * th),
                np.full(q.shape, sqrt(max(0.0, 2 * beta - r)), dtype=complex),
            ], axis=-1)
            tiles.append(u.reshape(-1, 4))
        return tiles

    def poisson_bracket(self, params: TimesLike, chart: ChartIdEnum, coords: Sequence[float]) -> float:
        j_fn, h_fn = self.chart_functions(chart, params)
        x = np.asarray(coords, dtype=float)
        grad_j, grad_h = gradient_fd(j_fn, x), gradient_fd(h_fn, x)
        return float(grad_j @ np.linalg.solve(symplectic_matrix(chart), grad_h))


class W1Family(HirzebruchFamily):
    """W_1: J = |u2|^2 / 2, R = |u3|^2 / 2, X + iY = conj(u1) u3 conj(u4)"""
    n = 1

    def invariants(self, u: np.ndarray):
        z = np.conj(u[..., 0]) * u[..., 2] * np.conj(u[..., 3])
        return 0.5 * np.abs(u[..., 1]) ** 2, 0.5 * np.abs(u[..., 2]) ** 2, z.real, z.imag

    def reduced_relation(self, j, r):
        return 8 * r * (self.beta - r) * (self.alpha + self.beta - j - r)

    def reduced_lift(self, j: float, rho, theta):
        rho, theta = np.broadcast_arrays(np.asarray(rho, dtype=float), np.asarray(theta, dtype=float))
        return np.stack([np.full(rho.shape, sqrt(2 * j)), np.zeros(rho.shape), rho * np.cos(theta), rho * np.sin(theta)], axis=-1)

    def special_directions(self, times: Times) -> List[Tuple[float, float]]:
        k = 2.0 / (self.gamma * sqrt(2 * self.beta))
        return super().special_directions(times) + [(1.0, k), (1.0, -k)]


class W1MovingABFamily(W1Family):
    """H_t = (1 - 2t) R + t gamma X: A_t and B_t move along J^-1(0), C is the transition point"""
    system_id = SystemIdEnum.W1_MOVING_AB
    transition_label = "C"

    def __init__(self, alpha: float = 1.0, beta: float = 2.0, gamma: float = 9.0 / 40.0):
        super().__init__(alpha, beta, gamma)

    @classmethod
    def gamma_window(cls, alpha: float, beta: float) -> Tuple[float, float]:
        return 0.0, 1.0 / (2 * sqrt(2 * beta))

    def ambient_h(self, u: np.ndarray, times: Times) -> np.ndarray:
        (t,) = times
        _, r, x, _ = self.invariants(u)
        return (1 - 2 * t) * r + t * self.gamma * x

    def closed_form_transition_times(self) -> Optional[Tuple[float, float]]:
        k = self.gamma * sqrt(2 * self.beta)
        return 1 / (2 * (1 + k)), 1 / (2 * (1 - k))

    def _quadratic(self, big_x: float) -> float:
        a, b = self.alpha, self.beta
        return 3 * big_x ** 2 - 4 * (a + 2 * b) * big_x + 4 * b * (a + b)

    def _sphere_equation(self, x: float, t: float) -> float:
        a, b = self.alpha, self.beta
        root = sqrt(max(0.0, (2 * b - x * x) * (2 * (a + b) - x * x)))
        return (1 - 2 * t) * x * root + t * self.gamma * self._quadratic(x * x)

    def moving_points(self, t: float) -> Tuple[float, float]:
        """
        x3 coordinates of A_t and B_t on J^-1(0) in U14.

        The squares solve a quartic; one root lies in (0, X-) and one in (X-, 2 beta), where
        X- is the smaller zero of 3X^2 - 4(alpha + 2beta)X + 4beta(alpha + beta).

        Returns:
            (x3-, x3+) with -sqrt(2 beta) < x3- <= 0 < x3+ < sqrt(2 beta)
        """
        a, b, g = self.alpha, self.beta, self.gamma
        x_minus = (2.0 / 3.0) * (a + 2 * b - sqrt(a * a + a * b + b * b))
        if t == 0.0:
            return 0.0, sqrt(2 * b)
        if _is_half(t):
            return -sqrt(x_minus), sqrt(x_minus)

        def quartic(big_x: float) -> float:
            return (
                (1 - 2 * t) ** 2 * big_x * (2 * b - big_x) * (2 * (a + b) - big_x)
                - (t * g * self._quadratic(big_x)) ** 2
            )

        if quartic(x_minus) <= 0.0:
            _LOGGER.debug(f"quartic peak {quartic(x_minus):.3e} not positive at t={t}, using the double root")
            low = high = x_minus
        else:
            try:
                low = brentq(quartic, 0.0, x_minus, xtol=QUARTIC_TOLERANCE)
                high = brentq(quartic, x_minus, 2 * b, xtol=QUARTIC_TOLERANCE)
            except ValueError as exc:
                raise NumericalError(
                    f"fixed-point quartic bracket failed at t={t}",
                    {"t": t, "bracket": [0.0, x_minus, 2 * b],
                     "values": [quartic(0.0), quartic(x_minus), quartic(2 * b)]},
                ) from exc

        sign = 1.0 if t < 0.5 else -1.0
        roots = sorted([-sign * sqrt(low), sign * sqrt(high)])
        scale = 4 * b * (a + b)
        for x in roots:
            residual = abs(self._sphere_equation(x, t))
            if residual > 1e-8 * scale:
                raise NumericalError(
                    f"root x3={x} of the fixed-point equation has residual {residual:.3e}",
                    {"t": t, "x3": x, "residual": residual},
                )
        return roots[0], roots[1]

    def labelled_points(self, times: Times) -> List[LabelledPoint]:
        (t,) = times
        points = [(label, self.origin_labels[label], _ORIGIN) for label in ("C", "D")]
        if t == 0.0:
            points.extend([("A", ChartIdEnum.U14, _ORIGIN), ("B", ChartIdEnum.U13, _ORIGIN)])
            return points
        x_minus, x_plus = self.moving_points(t)
        for label, x3 in (("A", x_minus), ("B", x_plus)):
            chart, coords = self.sphere_point(x3)
            points.append((label, chart, coords))
        return points


class W1SwitchFamily(W1Family):
    """H_t = (1 - 2t) R + t (gamma J X + beta): A and B swap heights, J^-1(0) collapses at t = 1/2"""
    system_id = SystemIdEnum.W1_SWITCH
    transition_label = "C"

    def __init__(self, alpha: float = 1.0, beta: float = 3.0, gamma: Optional[float] = None):
        if gamma is None:
            gamma = 3.0 / (8.0 * alpha * sqrt(2 * beta))
        super().__init__(alpha, beta, gamma)

    @classmethod
    def gamma_window(cls, alpha: float, beta: float) -> Tuple[float, float]:
        return 0.0, 1.0 / (2 * alpha * sqrt(2 * beta))

    def ambient_h(self, u: np.ndarray, times: Times) -> np.ndarray:
        (t,) = times
        j, r, x, _ = self.invariants(u)
        return (1 - 2 * t) * r + t * (self.gamma * j * x + self.beta)

    def closed_form_transition_times(self) -> Optional[Tuple[float, float]]:
        k = self.alpha * self.gamma * sqrt(2 * self.beta)
        return 1 / (2 * (1 + k)), 1 / (2 * (1 - k))

    def special_directions(self, times: Times) -> List[Tuple[float, float]]:
        k = 2.0 / (self.alpha * self.gamma * sqrt(2 * self.beta))
        return HirzebruchFamily.special_directions(self, times) + [(1.0, k), (1.0, -k)]

    def critical_sets(self, times: Times) -> List[CriticalSetModel]:
        (t,) = times
        if not _is_half(t):
            return []
        # J^-1(0) in U14 is the disc x2 = y2 = 0; stay clear of its rim for the difference stencil
        radius = 0.9 * sqrt(2 * self.beta)
        samples = [(0.0, 0.0, 0.0, 0.0)] + [
            (0.0, 0.0, r * cos(a), r * sin(a))
            for r in np.linspace(radius / 4, radius, 4)
            for a in np.linspace(0.0, 2 * pi, 12, endpoint=False)
        ]
        residual = max(self.gradient_residual(ChartIdEnum.U14, times, c) for c in samples)
        return [CriticalSetModel("J=0", "fixed-sphere", 0.0, self.beta / 2, len(samples), residual)]


class W1HyperbolicFamily(W1Family):
    """H_t = (1 - 2t) R + t gamma X + 2t |u1|^2 |u4|^2, which develops hyperbolic-transverse rank-one points"""
    system_id = SystemIdEnum.W1_HYPERBOLIC

    def __init__(self, alpha: float = 1.0, beta: float = 1.0, gamma: float = 1.0):
        super().__init__(alpha, beta, gamma)

    def ambient_h(self, u: np.ndarray, times: Times) -> np.ndarray:
        (t,) = times
        _, r, x, _ = self.invariants(u)
        return (1 - 2 * t) * r + t * self.gamma * x + 2 * t * np.abs(u[..., 0]) ** 2 * np.abs(u[..., 3]) ** 2

    def sphere_critical_points(self, t: float) -> List[float]:
        """x3 of the critical points of H_t on J^-1(0); they all lie on y3 = 0"""
        a, b, g = self.alpha, self.beta, self.gamma

        def scaled_derivative(x: float) -> float:
            # dH/dx3 multiplied by sqrt((2(a+b) - x^2)(2b - x^2))
            p, q = 2 * (a + b) - x * x, 2 * b - x * x
            s = sqrt(max(0.0, p * q))
            quad = 3 * x ** 4 - 4 * (a + 2 * b) * x ** 2 + 4 * b * (a + b)
            return (1 - 2 * t) * x * s + t * g * quad - 4 * t * x * (p + q) * s

        edge = sqrt(2 * b)
        grid = np.linspace(-edge, edge, RADIAL_SAMPLES + 1)[1:-1]
        values = np.array([scaled_derivative(x) for x in grid])
        roots = []
        for k in range(len(grid) - 1):
            if values[k] == 0.0:
                roots.append(float(grid[k]))
            elif values[k] * values[k + 1] < 0:
                roots.append(float(brentq(scaled_derivative, grid[k], grid[k + 1], xtol=ROOT_TOLERANCE)))
        _LOGGER.debug(f"W1 hyperbolic t={t}: {len(roots)} critical points on J^-1(0)")
        return roots

    def labelled_points(self, times: Times) -> List[LabelledPoint]:
        (t,) = times
        points = [(label, self.origin_labels[label], _ORIGIN) for label in ("C", "D")]
        if t == 0.0:
            points.extend([("A", ChartIdEnum.U14, _ORIGIN), ("B", ChartIdEnum.U13, _ORIGIN)])
            return points
        for k, x3 in enumerate(self.sphere_critical_points(t), start=1):
            chart, coords = self.sphere_point(x3)
            points.append((f"P{k}", chart, coords))
        return points


class W2Family(HirzebruchFamily):
    """W_2: J = (|u2|^2 + |u3|^2) / 2, R = (|u3|^2 - |u4|^2) / 2, X + iY = conj(u1 u2) u3 conj(u4)"""
    n = 2

    @property
    def nu(self) -> float:
        return self.beta / self.alpha

    @classmethod
    def gamma_window(cls, alpha: float, beta: float) -> Tuple[float, float]:
        return 0.0, 1.0 / (2 * sqrt(beta / alpha))

    def invariants(self, u: np.ndarray):
        z = np.conj(u[..., 0]) * np.conj(u[..., 1]) * u[..., 2] * np.conj(u[..., 3])
        sq = np.abs(u) ** 2
        return 0.5 * (sq[..., 1] + sq[..., 2]), 0.5 * (sq[..., 2] - sq[..., 3]), z.real, z.imag

    def reduced_relation(self, j, r):
        a, b = self.alpha, self.beta
        return (2 * a + 3 * b - 2 * j - r) * (2 * j - b - r) * (b * b - r * r)

    def reduced_lift(self, j: float, rho, theta):
        rho, theta = np.broadcast_arrays(np.asarray(rho, dtype=float), np.asarray(theta, dtype=float))
        return np.stack([np.sqrt(np.clip(2 * j - rho ** 2, 0.0, None)), np.zeros(rho.shape), rho * np.cos(theta), rho * np.sin(theta)], axis=-1)

    def _h00(self, j, r, x):
        a, b = self.alpha, self.beta
        return (a + b) * (self.gamma * x - (2 * j - a - 2 * b) * (r + b * b / (a + b))) / (a * (a + 2 * b))

    def _h11(self, j, r, x):
        a, b = self.alpha, self.beta
        return b * (self.gamma * x + (2 * j - a - 2 * b) * (r + a + b)) / (a * (a + 2 * b))

    def two_parameter_h(self, u: np.ndarray, s1: float, s2: float) -> np.ndarray:
        j, r, x, _ = self.invariants(u)
        return (
            (1 - s1) * (1 - s2) * self._h00(j, r, x)
            + s2 * (1 - s1) * r
            - s1 * (1 - s2) * r
            + s1 * s2 * self._h11(j, r, x)
        )


class W2TransBFamily(W2Family):
    """H_t = (1 - t) R + t H_11, transition point B"""
    system_id = SystemIdEnum.W2_TRANS_B
    transition_label = "B"

    def __init__(self, alpha: float = 1.0, beta: float = 1.0, gamma: float = 0.45):
        super().__init__(alpha, beta, gamma)

    def ambient_h(self, u: np.ndarray, times: Times) -> np.ndarray:
        (t,) = times
        return self.two_parameter_h(u, t, 1.0)

    def closed_form_transition_times(self) -> Optional[Tuple[float, float]]:
        nu, c = self.nu, 2 * self.gamma * sqrt(self.nu)
        return (1 + 2 * nu) / (1 + (3 + c) * nu), (1 + 2 * nu) / (1 + (3 - c) * nu)


class W2TransCFamily(W2Family):
    """H_t = (1 - t) R + t H_00, transition point C"""
    system_id = SystemIdEnum.W2_TRANS_C
    transition_label = "C"

    def __init__(self, alpha: float = 1.0, beta: float = 1.0, gamma: float = 0.45):
        super().__init__(alpha, beta, gamma)

    def ambient_h(self, u: np.ndarray, times: Times) -> np.ndarray:
        (t,) = times
        return self.two_parameter_h(u, 0.0, 1.0 - t)

    def closed_form_transition_times(self) -> Optional[Tuple[float, float]]:
        nu, c = self.nu, 2 * self.gamma * sqrt(self.nu)
        return (1 + 2 * nu) / (2 + c + (3 + c) * nu), (1 + 2 * nu) / (2 - c + (3 - c) * nu)


class W2TwoParamFamily(W2Family):
    """H_{s1,s2} = (1-s1)(1-s2) H_00 + s2(1-s1) R - s1(1-s2) R + s1 s2 H_11"""
    system_id = SystemIdEnum.W2_TWO_PARAM
    arity = 2

    def __init__(self, alpha: float = 1.0, beta: float = 1.0, gamma: float = 0.45):
        super().__init__(alpha, beta, gamma)

    @classmethod
    def gamma_window(cls, alpha: float, beta: float) -> Tuple[float, float]:
        nu = beta / alpha
        return 1.0 / (2 * (1 + 2 * nu) * sqrt(nu)), 1.0 / (2 * sqrt(nu))

    def ambient_h(self, u: np.ndarray, times: Times) -> np.ndarray:
        s1, s2 = times
        return self.two_parameter_h(u, s1, s2)


FAMILY_CLASSES: Dict[SystemIdEnum, Type[SystemFamily]] = {
    SystemIdEnum.COUPLED_ANGULAR: CoupledAngularFamily,
    SystemIdEnum.HP_TWO_PARAM: HPTwoParamFamily,
    SystemIdEnum.W1_MOVING_AB: W1MovingABFamily,
    SystemIdEnum.W1_SWITCH: W1SwitchFamily,
    SystemIdEnum.W1_HYPERBOLIC: W1HyperbolicFamily,
    SystemIdEnum.W2_TRANS_B: W2TransBFamily,
    SystemIdEnum.W2_TRANS_C: W2TransCFamily,
    SystemIdEnum.W2_TWO_PARAM: W2TwoParamFamily,
    SystemIdEnum.DEGEN_APPEARANCE: DegenAppearanceFamily,
    SystemIdEnum.DEGEN_BECOME: DegenBecomeFamily,
    SystemIdEnum.DEGEN_COLLAPSE: DegenCollapseFamily,
}


def build_family(system: SystemIdEnum, **parameters: Any) -> SystemFamily:
    """
    Construct a family, enforcing its parameter window.

    Args:
        system: Family identifier
        **parameters: Geometric parameters (alpha, beta, gamma, r1, r2, j0), family defaults otherwise

    Returns:
        SystemFamily instance

    Example:
        >>> family = build_family(SystemIdEnum.W1_MOVING_AB, alpha=1, beta=2)
        >>> family.transition_label
        'C'
    """
    cls = FAMILY_CLASSES[SystemIdEnum(system)]
    given = {k: v for k, v in parameters.items() if v is not None}
    try:
        return cls(**given)
    except TypeError as exc:
        raise DomainError(f"{cls.system_id.name} does not take parameters {sorted(given)}") from exc


def evaluate(family: SystemFamily, params: TimesLike, point: ChartPointModel) -> Tuple[float, float]:
    """(J, H) at a chart point"""
    return family.evaluate(params, point)


def fixed_points(family: SystemFamily, params: TimesLike) -> FixedPointInventoryModel:
    return family.fixed_points(params)


def momentum_image(family: SystemFamily, params: TimesLike, resolution: int) -> MomentumImageModel:
    """
    Sample the momentum map on a deterministic grid.

    Args:
        family: System family
        params: t or (s1, s2)
        resolution: Samples per grid axis, at least 8

    Returns:
        MomentumImageModel with samples, per-J-slice envelope and fixed-point overlays
    """
    if resolution < MIN_RESOLUTION:
        raise DomainError(f"resolution must be at least {MIN_RESOLUTION}, got {resolution}")
    times = family.times(params)

    def evaluate_tile(tile: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return family.ambient_j(tile), family.ambient_h(tile, times)

    results = map_tiles(evaluate_tile, family.ambient_tiles(resolution))
    j_values = np.concatenate([j for j, _ in results])
    h_values = np.concatenate([h for _, h in results])

    edges = np.linspace(float(np.min(j_values)), float(np.max(j_values)), resolution + 1)
    bins = np.clip(np.digitize(j_values, edges) - 1, 0, resolution - 1)
    envelope = []
    for k in range(resolution):
        selected = h_values[bins == k]
        if selected.size:
            envelope.append((0.5 * (edges[k] + edges[k + 1]), float(np.min(selected)), float(np.max(selected))))

    overlays = [(p.label, p.j_value, p.h_value) for p in family.fixed_points(times).points]
    _LOGGER.debug(f"{family.system_id.name} image at {times}: {j_values.size} samples")
    return MomentumImageModel(family.system_id, times, j_values, h_values, envelope, overlays)
