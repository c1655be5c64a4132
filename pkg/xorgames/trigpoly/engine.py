""" Certified global maximum of a squared trigonometric polynomial

The engine maximizes S(x) ≥ 0, the square of either

* the modulus |C(x)| of a complex series C(x) = Σ_{m=0..n} c_m e^{imx}  (`ModulusSquared`), or
* the real part Re C(x) = Σ a_m cos mx + b_m sin mx, with c_m = a_m − i·b_m  (`RealPartSquared`).

S is a real trigonometric polynomial of degree d (d = n for the modulus, d = 2n for the real part),
and it is smooth where |C| is not: optimizing S avoids the kinks of |C| at its zeros.

Method:

1. Sample S, S', S'' on m = max(8n+1, 64) equispaced points with three FFTs.
2. Certify a global bound U ≥ max S with the equispaced-grid inequality:
   if S reaches its maximum M at x0, then S(x0+t) ≥ M·cos(d·t) for |t| ≤ π/d,
   and the nearest grid point is at most π/m away, so  M ≤ max_grid S / cos(d·π/m)  for m > 2d.
3. Refine the best grid point by safeguarded Newton/bisection on S' to get a lower bound L.
4. Every grid point is the center of a cell of radius r = π/m. On a cell, S(c+t) is at most
   the cubic Taylor polynomial at c, maximized exactly over |t| ≤ r, plus d⁴·U·r⁴/24
   (Bernstein: |S⁗| ≤ d⁴·‖S‖).
   Cells whose bound falls below L cannot hold the maximum and are dropped;
   the others are halved (a local doubling of the grid) until √(max bound) − √L ≤ tol/2.
5. The surviving cells are refined by Newton; among their maxima, the smallest angle within tol/2
   of the best one is the argmax.
"""

from __future__ import annotations

import abc
import logging
import math
from dataclasses import dataclass

import numpy as np

from xorgames.config import settings
from xorgames.error import exc


logger = logging.getLogger(__name__)

TWO_PI = 2 * math.pi
EPS = np.finfo(float).eps

# A function and its first three derivatives
Derivatives = tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


class TrigSeries(abc.ABC):
    """ C(x) = Σ_{m=0..n} c_m e^{imx}, its derivatives, and the square S(x) derived from it """

    # c_0..c_n
    coefficients: np.ndarray

    def __init__(self, coefficients):
        self.coefficients = np.asarray(coefficients, dtype=complex)
        self._j = np.arange(len(self.coefficients), dtype=float)

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1

    @property
    @abc.abstractmethod
    def squared_degree(self) -> int:
        """ Degree of the trigonometric polynomial S """

    def norm_bound(self) -> float:
        """ A trivial bound on max S: (Σ |c_m|)² """
        return math.fsum(np.abs(self.coefficients)) ** 2

    def series_on_grid(self, m: int) -> Derivatives:
        """ C, C', C'', C''' at x_k = 2πk/m, k = 0..m-1

        ifft computes (1/m)·Σ a_j e^{+2πijk/m}, i.e. the series itself up to the factor m
        """
        c, j = self.coefficients, self._j
        return (
            m * np.fft.ifft(c, m),
            m * np.fft.ifft(1j * j * c, m),
            m * np.fft.ifft(-(j * j) * c, m),
            m * np.fft.ifft(-1j * j ** 3 * c, m),
        )

    def series_at(self, angles: np.ndarray) -> Derivatives:
        """ C, C', C'', C''' at arbitrary angles """
        c, j = self.coefficients, self._j
        basis = np.exp(1j * np.outer(angles, j))
        return (
            basis @ c,
            basis @ (1j * j * c),
            basis @ (-(j * j) * c),
            basis @ (-1j * j ** 3 * c),
        )

    @abc.abstractmethod
    def square(self, C: np.ndarray, C1: np.ndarray, C2: np.ndarray, C3: np.ndarray) -> Derivatives:
        """ S, S', S'', S''' from C, C', C'', C''' """

    def squared_on_grid(self, m: int) -> Derivatives:
        return self.square(*self.series_on_grid(m))

    def squared_at(self, angles: np.ndarray) -> Derivatives:
        return self.square(*self.series_at(np.atleast_1d(np.asarray(angles, dtype=float))))


class ModulusSquared(TrigSeries):
    """ S = |C|² """

    @property
    def squared_degree(self) -> int:
        return self.n

    def square(self, C, C1, C2, C3):
        def dot(u, v):
            """ Re(u·conj v) """
            return u.real * v.real + u.imag * v.imag

        return (
            dot(C, C),
            2 * dot(C1, C),
            2 * (dot(C1, C1) + dot(C2, C)),
            2 * (dot(C3, C) + 3 * dot(C2, C1)),
        )


class RealPartSquared(TrigSeries):
    """ S = (Re C)² """

    @property
    def squared_degree(self) -> int:
        return 2 * self.n

    def norm_bound(self) -> float:
        # |Re C| ≤ Σ |a_m| + |b_m|
        c = self.coefficients
        return math.fsum(np.concatenate([np.abs(c.real), np.abs(c.imag)])) ** 2

    def square(self, C, C1, C2, C3):
        T, T1, T2, T3 = C.real, C1.real, C2.real, C3.real
        return T * T, 2 * T * T1, 2 * (T1 * T1 + T * T2), 2 * (3 * T1 * T2 + T * T3)


@dataclass(frozen=True)
class SquaredMaximum:
    """ Certified bracket on max S """
    # The argmax; in [0, 2π)
    angle: float

    # S(angle) ≤ max S ≤ upper
    lower: float
    upper: float

    # Effective resolution of the finest cells: m·2^depth
    grid_size: int


def initial_grid_size(n: int) -> int:
    """ m = max(8n+1, 64): oversampling ≥ 4 relative to the degree 2n """
    return max(8 * n + 1, 64)


def maximize_squared(series: TrigSeries, tol: float) -> SquaredMaximum:
    """ Certified maximum of S over the circle

    Args:
        series: The polynomial
        tol: Absolute tolerance on √S, i.e. on |C| or |Re C|

    Raises:
        exc.F_TOLERANCE_NOT_REACHED: the cells got finer than `settings.MAX_GRID_POINTS` allows
    """
    if not tol > 0:
        raise exc.E_INVALID_ARGUMENT.format('Tolerance must be positive, got {tol}', name='tol', tol=tol)

    d = series.squared_degree
    B = series.norm_bound()
    if B == 0:
        return SquaredMaximum(angle=0.0, lower=0.0, upper=0.0, grid_size=1)

    # Rounding error allowance on computed values of S
    margin = 16 * (series.n + 1) * EPS * B

    # 1. Grid
    m = initial_grid_size(series.n)
    h = TWO_PI / m
    S, S1, S2, S3 = series.squared_on_grid(m)
    centers = h * np.arange(m)

    # 2. Grid inequality
    U = B
    if 2 * d < m:
        U = min(U, float(S.max()) / math.cos(d * math.pi / m) + margin)

    # 3. Lower bound from the best grid point
    k = int(np.argmax(S))
    best_angle, best = _refine(series, centers[k] - h, centers[k] + h, S1[k - 1], S1[(k + 1) % m], fallback=(centers[k], float(S[k])))

    # 4. Drop and halve cells
    r = h / 2
    depth = 0
    while True:
        bound = _cell_bound(S, S1, S2, S3, r, d, U) + margin
        alive = bound >= best
        upper = float(bound[alive].max()) if alive.any() else best
        U = min(U, upper)

        gap = math.sqrt(max(upper, best)) - math.sqrt(best)
        logger.debug('depth=%d cells=%d lower=%.17g upper=%.17g gap=%.3g', depth, int(alive.sum()), best, upper, gap)
        if gap <= tol / 2:
            break
        if m << (depth + 1) > settings.MAX_GRID_POINTS:
            raise exc.F_TOLERANCE_NOT_REACHED.format(
                'Certified gap {gap:.3g} is above the tolerance {tol:.3g}',
                'Use a larger tolerance',
                gap=gap, tol=tol, grid_size=m << depth,
            )

        c = centers[alive]
        r /= 2
        depth += 1
        centers = np.concatenate([c - r, c + r])
        S, S1, S2, S3 = series.squared_at(centers)

        # Refine a new best cell
        i = int(np.argmax(S))
        if S[i] > best:
            c = float(centers[i])
            left1 = series.squared_at(c - r)[1]
            right1 = series.squared_at(c + r)[1]
            best_angle, best = _refine(series, c - r, c + r, left1[0], right1[0], fallback=(c, float(S[i])))

    # 5. Local maxima of the surviving cells
    candidates = [(best_angle, best)]
    if len(centers[alive]) <= 64:
        for c in centers[alive]:
            left1 = series.squared_at(c - r)[1]
            right1 = series.squared_at(c + r)[1]
            candidates.append(_refine(series, c - r, c + r, left1[0], right1[0], fallback=(best_angle, best)))

    top = max(s for _, s in candidates)
    threshold = math.sqrt(top) - tol / 2
    angle = min(_wrap(a) for a, s in candidates if math.sqrt(s) >= threshold)
    return SquaredMaximum(angle=angle, lower=top, upper=max(upper, top), grid_size=m << depth)


def _cell_bound(S, S1, S2, S3, r: float, d: int, U: float) -> np.ndarray:
    """ Upper bound of S on [c−r, c+r]: the cubic Taylor polynomial q at c, maximized exactly, plus the Bernstein remainder """
    def q(t):
        return S + t * (S1 + t * (S2 / 2 + t * S3 / 6))

    best = np.maximum(q(r), q(-r))

    # Critical points: S1 + S2·t + (S3/2)·t² = 0, roots in the stable form
    a, b, c = S3 / 2, S2, S1
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        disc = b * b - 4 * a * c
        real = disc >= 0
        h = -(b + np.where(b >= 0, 1.0, -1.0) * np.sqrt(np.where(real, disc, 0))) / 2
        for t in (h / a, c / h):
            inside = real & np.isfinite(t) & (np.abs(t) <= r)
            best = np.maximum(best, np.where(inside, q(np.where(inside, t, 0)), -np.inf))

    return best + (d ** 4) * U * r ** 4 / 24


def _refine(series: TrigSeries, a: float, b: float, slope_a: float, slope_b: float, *, fallback: tuple[float, float]) -> tuple[float, float]:
    """ Safeguarded Newton/bisection for a root of S' in [a, b], where S' goes from + to −

    Returns:
        (angle, S(angle)), or `fallback` when [a, b] does not bracket a maximum
    """
    if not (slope_a >= 0 >= slope_b):
        return fallback

    x = 0.5 * (a + b)
    for _ in range(100):
        S, S1, S2, _ = (float(v[0]) for v in series.squared_at(x))
        if S1 > 0:
            a = x
        elif S1 < 0:
            b = x
        else:
            break

        # Newton step, unless it leaves the bracket or S'' does not point to a maximum
        step = -S1 / S2 if S2 < 0 else math.inf
        x_new = x + step
        if not (a < x_new < b):
            x_new = 0.5 * (a + b)
        if abs(x_new - x) <= 4 * EPS * max(1.0, abs(x)):
            break
        x = x_new

    S = float(series.squared_at(x)[0][0])
    if S < fallback[1]:
        return fallback
    return x, S


def _wrap(angle: float) -> float:
    """ Reduce to [0, 2π) """
    angle = math.fmod(angle, TWO_PI)
    if angle < 0:
        angle += TWO_PI
    if angle >= TWO_PI:
        angle = 0.0
    return angle
