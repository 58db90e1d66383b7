# Central finite differences with Richardson extrapolation.
# Functions passed in are vectorised: they take an array of shape (..., n) and return shape (...).
from typing import Callable

import numpy as np

from semitoric_families.utils.constants import FD_RICHARDSON_LEVELS, FD_STEP

VectorFunction = Callable[[np.ndarray], np.ndarray]


def _steps(x: np.ndarray, step: float) -> np.ndarray:
    return step * (1.0 + np.abs(x))


def _gradient_once(fn: VectorFunction, x: np.ndarray, h: np.ndarray) -> np.ndarray:
    n = x.size
    offsets = np.diag(h)
    stencil = np.concatenate([x + offsets, x - offsets])
    values = np.asarray(fn(stencil), dtype=float)
    return (values[:n] - values[n:]) / (2.0 * h)


def _hessian_once(fn: VectorFunction, x: np.ndarray, h: np.ndarray) -> np.ndarray:
    n = x.size
    eye = np.diag(h)
    points = [x]
    for i in range(n):
        points.extend([x + eye[i], x - eye[i]])
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for i, j in pairs:
        points.extend([
            x + eye[i] + eye[j],
            x + eye[i] - eye[j],
            x - eye[i] + eye[j],
            x - eye[i] - eye[j],
        ])
    values = np.asarray(fn(np.array(points)), dtype=float)

    hess = np.empty((n, n))
    centre = values[0]
    for i in range(n):
        plus, minus = values[1 + 2 * i], values[2 + 2 * i]
        hess[i, i] = (plus - 2.0 * centre + minus) / h[i] ** 2
    base = 1 + 2 * n
    for k, (i, j) in enumerate(pairs):
        pp, pm, mp, mm = values[base + 4 * k: base + 4 * k + 4]
        hess[i, j] = hess[j, i] = (pp - pm - mp + mm) / (4.0 * h[i] * h[j])
    return hess


def _richardson(estimate: Callable[[np.ndarray], np.ndarray], h: np.ndarray, levels: int) -> np.ndarray:
    # Tableau for an even error expansion in h; each level halves the step.
    table = [estimate(h / 2 ** k) for k in range(levels + 1)]
    for level in range(1, levels + 1):
        factor = 4.0 ** level
        table = [(factor * table[k + 1] - table[k]) / (factor - 1.0) for k in range(len(table) - 1)]
    return table[0]


def gradient_fd(
        fn: VectorFunction,
        x: np.ndarray,
        step: float = FD_STEP,
        levels: int = FD_RICHARDSON_LEVELS,
) -> np.ndarray:
    """Gradient of a scalar function by central differences"""
    x = np.asarray(x, dtype=float)
    return _richardson(lambda h: _gradient_once(fn, x, h), _steps(x, step), levels)


def hessian_fd(
        fn: VectorFunction,
        x: np.ndarray,
        step: float = FD_STEP,
        levels: int = FD_RICHARDSON_LEVELS,
) -> np.ndarray:
    """
    Symmetric Hessian of a scalar function by central differences.

    Args:
        fn: Vectorised scalar function
        x: Evaluation point, shape (n,)
        step: Relative step, h_i = step * (1 + |x_i|)
        levels: Richardson levels on top of the plain central estimate

    Returns:
        Array of shape (n, n)
    """
    x = np.asarray(x, dtype=float)
    hess = _richardson(lambda h: _hessian_once(fn, x, h), _steps(x, step), levels)
    return 0.5 * (hess + hess.T)
