"""Growth-rate estimates from exact ball counts.

Since log gamma is subadditive, gamma(k)^(1/k) converges to its infimum
(Fekete), so every k-th root is a certified upper bound for the growth rate
of the pair and the minimum over k is the best bound the table supports.
Ratio and least-squares estimates are heuristics layered on the same data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cayley import GrowthTable
from .errors import DegenerateSphere, DomainError, FitRejected, WindowTooSmall

EXPONENTIAL_RATIO_THRESHOLD = 1.2
POLYNOMIAL_RATIO_THRESHOLD = 1.1
_VERDICT_POINTS = 5  # trailing ratios consulted for the verdict


def root_bounds(table: GrowthTable) -> list[float]:
    """u_k = gamma(k)^(1/k) for k = 1..kmax; each bounds the rate from above."""
    return [table.gamma[k] ** (1.0 / k) for k in range(1, table.kmax + 1)]


def ratio_estimates(table: GrowthTable) -> list[float]:
    """sigma(k+1)/sigma(k) for k = 1..kmax-1; heuristic only, no bound semantics."""
    for k in range(1, table.kmax + 1):
        if table.sigma[k] == 0:
            raise DegenerateSphere(f"sphere {k} is empty; the group is exhausted")
    return [table.sigma[k + 1] / table.sigma[k] for k in range(1, table.kmax)]


def _check_window(table: GrowthTable, window) -> tuple[int, int]:
    lo, hi = window
    if lo < 2:
        raise WindowTooSmall(f"window must start at k >= 2, got {lo}")
    if hi > table.kmax:
        raise WindowTooSmall(f"window end {hi} exceeds table kmax {table.kmax}")
    if hi - lo + 1 < 4:
        raise WindowTooSmall(f"window [{lo},{hi}] has fewer than 4 points")
    return lo, hi


def _trailing_ratios(table: GrowthTable, lo: int, hi: int) -> list[float] | None:
    """sigma(k)/sigma(k-1) for the last few window points; None when a sphere died."""
    ks = range(max(lo, hi - _VERDICT_POINTS + 1), hi + 1)
    out = []
    for k in ks:
        if table.sigma[k - 1] == 0:
            return None
        out.append(table.sigma[k] / table.sigma[k - 1])
    return out


@dataclass(frozen=True)
class DegreeEstimate:
    loglog_slope: float
    doubling_degree: float | None
    verdict: str  # "polynomial" | "exponential" | "inconclusive"
    degree: int | None
    window: tuple[int, int]

    def verdict_label(self) -> str:
        if self.verdict == "polynomial":
            return f"polynomial({self.degree})"
        return self.verdict


def poly_degree(table: GrowthTable, window) -> DegreeEstimate:
    """Least-squares degree of gamma over a window, with a growth verdict.

    The verdict is exponential when the trailing sphere ratios all clear 1.2,
    polynomial when they all stay under 1.1 (degree = rounded log-log slope),
    and inconclusive in between.
    """
    lo, hi = _check_window(table, window)
    ks = np.arange(lo, hi + 1)
    logs = np.log([float(table.gamma[k]) for k in ks])
    slope = float(np.polyfit(np.log(ks), logs, 1)[0])

    doubling = None
    for k in range(hi, 0, -1):
        if 2 * k <= table.kmax:
            doubling = math.log2(table.gamma[2 * k] / table.gamma[k])
            break

    ratios = _trailing_ratios(table, lo, hi)
    if ratios is None:
        # spheres died inside the window: growth stopped entirely
        if table.gamma[hi] == table.gamma[lo]:
            return DegreeEstimate(slope, doubling, "polynomial", 0, (lo, hi))
        return DegreeEstimate(slope, doubling, "inconclusive", None, (lo, hi))
    if all(r >= EXPONENTIAL_RATIO_THRESHOLD for r in ratios):
        return DegreeEstimate(slope, doubling, "exponential", None, (lo, hi))
    if all(r <= POLYNOMIAL_RATIO_THRESHOLD for r in ratios):
        return DegreeEstimate(slope, doubling, "polynomial", round(slope), (lo, hi))
    return DegreeEstimate(slope, doubling, "inconclusive", None, (lo, hi))


def extrapolate_rate(table: GrowthTable, window) -> float:
    """exp(slope) of the least-squares line through log gamma(k) on the window.

    Only meaningful for exponential data; a polynomial verdict on the same
    window rejects the fit.
    """
    lo, hi = _check_window(table, window)
    estimate = poly_degree(table, window)
    if estimate.verdict == "polynomial":
        raise FitRejected(
            f"window [{lo},{hi}] looks polynomial of degree {estimate.degree}; "
            "an exponential fit would be meaningless"
        )
    ks = np.arange(lo, hi + 1)
    logs = np.log([float(table.gamma[k]) for k in ks])
    slope = float(np.polyfit(ks, logs, 1)[0])
    return math.exp(slope)


def entropy_of(omega: float) -> float:
    """Natural log of a growth rate; rates below 1 are outside the domain."""
    if omega < 1:
        raise DomainError(f"growth rate must be >= 1, got {omega}")
    return math.log(omega)


@dataclass(frozen=True)
class RateEstimates:
    root_bounds: tuple[float, ...]
    ratios: tuple[float, ...]
    inf_root: float
    entropy: float
    window: tuple[int, int] | None
    verdict: str
    degree: int | None
    extrapolated_rate: float | None

    def to_dict(self) -> dict:
        label = self.verdict if self.degree is None else f"polynomial({self.degree})"
        return {
            "root_bounds": [_round12(u) for u in self.root_bounds],
            "ratios": [_round12(r) for r in self.ratios],
            "inf_root": _round12(self.inf_root),
            "entropy": _round12(self.entropy),
            "window": None if self.window is None else list(self.window),
            "verdict": label,
            "extrapolated_rate": None
            if self.extrapolated_rate is None
            else _round12(self.extrapolated_rate),
        }


def _round12(x: float) -> float:
    return float("%.12g" % x)


def _ratio_prefix(table: GrowthTable) -> list[float]:
    out = []
    for k in range(1, table.kmax):
        if table.sigma[k] == 0:
            break
        out.append(table.sigma[k + 1] / table.sigma[k])
        if table.sigma[k + 1] == 0:
            break
    return out


def estimate_rates(table: GrowthTable, window=None) -> RateEstimates:
    """Bundle every estimator the table supports.

    The window defaults to the top half of the table; when too few points
    exist for a fit the verdict is inconclusive and only the exact parts
    (root bounds, ratios, entropy of the infimum) are reported.
    """
    roots = root_bounds(table)
    ratios = _ratio_prefix(table)
    inf_root = min(roots) if roots else 1.0
    if window is None and table.kmax >= 5:
        window = (max(2, table.kmax // 2), table.kmax)
    verdict = "inconclusive"
    degree = None
    extrapolated = None
    win = None
    if window is not None:
        estimate = poly_degree(table, window)
        win = estimate.window
        verdict = estimate.verdict
        degree = estimate.degree
        if verdict != "polynomial":
            ks = np.arange(win[0], win[1] + 1)
            logs = np.log([float(table.gamma[k]) for k in ks])
            extrapolated = math.exp(float(np.polyfit(ks, logs, 1)[0]))
    return RateEstimates(
        root_bounds=tuple(roots),
        ratios=tuple(ratios),
        inf_root=inf_root,
        entropy=entropy_of(inf_root),
        window=win,
        verdict=verdict,
        degree=degree,
        extrapolated_rate=extrapolated,
    )
