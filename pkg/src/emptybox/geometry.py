"""Points in the unit hypercube and open axis-parallel boxes.

All comparisons are exact on float64 values. A box is open, so a point lying
on one of its faces does not make it non-empty.
"""
from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ._validation import check_points
from .exceptions import EmptyBoxError


@dataclass(frozen=True)
class PointSet:
    """``n`` points in ``[0, 1]^dim``; duplicates are allowed.

    Points are stored column-major, so a scan along one axis (the finder's
    slab assignment) reads contiguous memory however large ``dim`` is.
    """

    points: np.ndarray = field(repr=False)
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise EmptyBoxError("dimension must be at least 1")
        arr = check_points(self.points, dim=self.dim, order="F")
        if isinstance(self.points, np.ndarray) and np.may_share_memory(arr, self.points):
            arr = arr.copy(order="F")  # never alias the caller's buffer
        arr.setflags(write=False)
        object.__setattr__(self, "points", arr)

    @classmethod
    def from_array(cls, X) -> "PointSet":
        if isinstance(X, PointSet):
            return X
        arr = np.asarray(X, dtype=np.float64)
        if arr.ndim != 2:
            raise EmptyBoxError("points must be a 2-D array of shape (n, d)")
        return cls(arr, arr.shape[1])

    @classmethod
    def empty(cls, dim: int) -> "PointSet":
        return cls(np.zeros((0, dim)), dim)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    def __len__(self):
        return self.n


def as_point_set(S, dim=None) -> PointSet:
    if isinstance(S, PointSet):
        if dim is not None and S.dim != dim:
            raise EmptyBoxError(f"expected dimension {dim}, got {S.dim}")
        return S
    if dim is not None:
        return PointSet(check_points(S, dim=dim), dim)
    return PointSet.from_array(S)


@dataclass(frozen=True)
class AxisBox:
    """Open box ``(lo_1, hi_1) x ... x (lo_d, hi_d)`` inside the unit cube."""

    lo: tuple
    hi: tuple

    def __post_init__(self):
        lo = tuple(float(v) for v in self.lo)
        hi = tuple(float(v) for v in self.hi)
        if len(lo) != len(hi) or not lo:
            raise EmptyBoxError("lo and hi must be non-empty and of equal length")
        for i, (a, b) in enumerate(zip(lo, hi)):
            if not a < b:
                raise EmptyBoxError(f"degenerate box on axis {i}: lo={a!r} >= hi={b!r}")
            if a < 0.0 or b > 1.0:
                raise EmptyBoxError(f"box leaves the unit cube on axis {i}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def unit(cls, dim: int) -> "AxisBox":
        return cls((0.0,) * dim, (1.0,) * dim)

    @property
    def dim(self) -> int:
        return len(self.lo)

    @property
    def volume(self) -> float:
        return volume(self)

    def to_dict(self) -> dict:
        return {"lo": list(self.lo), "hi": list(self.hi), "volume": self.volume}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "AxisBox":
        return cls(tuple(data["lo"]), tuple(data["hi"]))


def volume(box: AxisBox) -> float:
    """Product of the side lengths, taken in axis order."""
    return math.prod(b - a for a, b in zip(box.lo, box.hi))


def strictly_inside(box: AxisBox, p: Sequence[float]) -> bool:
    if len(p) != box.dim:
        raise EmptyBoxError(f"point has {len(p)} coordinates, box has {box.dim}")
    return all(a < x < b for a, x, b in zip(box.lo, p, box.hi))


def inside_mask(box: AxisBox, X: np.ndarray) -> np.ndarray:
    """Vectorised :func:`strictly_inside` over the rows of ``X``."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != box.dim:
        raise EmptyBoxError(f"expected an (n, {box.dim}) array")
    lo = np.asarray(box.lo)
    hi = np.asarray(box.hi)
    return np.all((X > lo) & (X < hi), axis=1)


def is_empty_box(box: AxisBox, S) -> bool:
    S = as_point_set(S, dim=box.dim)
    # containment in the cube is an AxisBox invariant, re-checked for clarity
    if any(a < 0.0 for a in box.lo) or any(b > 1.0 for b in box.hi):
        return False
    return not inside_mask(box, S.points).any()


def read_points_csv(source) -> PointSet:
    """Parse the point CSV format: one point per row, optional ``#`` header lines.

    ``source`` is a path or an open text stream. The dimension of an empty
    file can be given by a ``# dim=<d>`` header line.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source) as fh:
            text = fh.read()
    rows = []
    dim = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            for token in line[1:].split():
                if token.startswith("dim="):
                    dim = int(token[4:])
            continue
        try:
            rows.append([float(tok) for tok in line.split(",")])
        except ValueError as exc:
            raise EmptyBoxError(f"line {lineno}: {exc}") from None
    if not rows:
        if dim is None:
            raise EmptyBoxError("empty point file without a '# dim=<d>' header")
        return PointSet.empty(dim)
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise EmptyBoxError(f"rows have inconsistent widths {sorted(widths)}")
    arr = np.array(rows, dtype=np.float64)
    return PointSet(arr, arr.shape[1])


def write_points_csv(S: PointSet, dest=None, metadata: dict | None = None) -> str:
    """Serialise ``S`` in the point CSV format; returns the text and writes it to ``dest`` if given."""
    buf = io.StringIO()
    meta = {"dim": S.dim, "n": S.n}
    if metadata:
        meta.update(metadata)
    buf.write("# " + " ".join(f"{k}={v}" for k, v in meta.items()) + "\n")
    for row in S.points:
        buf.write(",".join(repr(float(x)) for x in row) + "\n")
    text = buf.getvalue()
    if dest is not None:
        if hasattr(dest, "write"):
            dest.write(text)
        else:
            with open(dest, "w") as fh:
                fh.write(text)
    return text


def points_from_iterable(rows: Iterable[Sequence[float]], dim: int) -> PointSet:
    rows = list(rows)
    if not rows:
        return PointSet.empty(dim)
    return PointSet(np.array(rows, dtype=np.float64), dim)
