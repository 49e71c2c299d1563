"""Exact maximum empty box by exhaustive search, and the slicing lower bound.

Every maximal empty box has each face supported by an input point or by the
cube boundary, so it suffices to try, per axis, ``lo`` in ``{0} U coords`` and
``hi`` in ``{1} U coords``. The search fixes one axis interval at a time and
keeps only the points still strictly inside the partial box; on the last axis
the best interval is the widest gap among the surviving coordinates.
"""
from __future__ import annotations

import numpy as np

from .exceptions import BudgetExceededError
from .geometry import AxisBox, as_point_set, is_empty_box

DEFAULT_BUDGET = 10 ** 8


def candidate_count(n: int, d: int) -> int:
    return (n + 2) ** (2 * d)


def _widest_gap(values: np.ndarray):
    """Lowest widest open interval of [0, 1] avoiding ``values``."""
    cuts = np.unique(np.concatenate(([0.0, 1.0], values)))
    widths = np.diff(cuts)
    g = int(np.argmax(widths))
    return float(cuts[g]), float(cuts[g + 1]), float(widths[g])


def max_empty_box_exact(S, budget: int | None = DEFAULT_BUDGET) -> AxisBox:
    """Maximum-volume empty open box; ties go to the lexicographically least ``(lo, hi)``."""
    S = as_point_set(S)
    n, d = S.n, S.dim
    if budget is not None and candidate_count(n, d) > budget:
        raise BudgetExceededError(
            f"(n+2)^(2d) = {candidate_count(n, d)} candidates exceeds budget {budget}"
            f" (n={n}, d={d})")
    if n == 0:
        return AxisBox.unit(d)
    X = S.points
    axis_vals = [np.unique(X[:, i]) for i in range(d)]
    best = [-1.0, None]

    def consider(lo, hi, vol):
        key = (tuple(lo), tuple(hi))
        if vol > best[0] or (vol == best[0] and key < best[1]):
            best[0], best[1] = vol, key

    def recurse(axis, live, lo, hi, partial):
        if axis == d - 1:
            # the lowest widest gap is also the lexicographic winner here
            a, b, w = _widest_gap(X[live, axis])
            consider(lo + [a], hi + [b], partial * w)
            return
        col = X[live, axis]
        los = np.concatenate(([0.0], axis_vals[axis]))
        his = np.concatenate((axis_vals[axis], [1.0]))
        for a in los:
            for b in his:
                if b <= a:
                    continue
                width = b - a
                if partial * width < best[0]:
                    continue
                keep = (col > a) & (col < b)
                recurse(axis + 1, live[keep], lo + [float(a)], hi + [float(b)], partial * width)

    recurse(0, np.arange(n), [], [], 1.0)
    box = AxisBox(*best[1])
    assert is_empty_box(box, S)
    return box


def slicing_bound_box(S) -> AxisBox:
    """Widest slab between consecutive distinct first coordinates; volume >= 1/(n+1)."""
    S = as_point_set(S)
    a, b, _ = _widest_gap(S.points[:, 0])
    return AxisBox((a,) + (0.0,) * (S.dim - 1), (b,) + (1.0,) * (S.dim - 1))
