"""Fast large-empty-box search amidst ``n`` points in ``[0, 1]^d``.

The cube is cut into ``k + 1`` equal slabs along the first axis, with
``ell = floor(log2 d)`` and ``k = floor(n / (ell + 1))``. By pigeonhole the
least populated slab holds at most ``ell`` points. Those ``m <= ell`` points
are encoded as ``d`` bit vectors of length ``m`` (one per axis, bit set when
the coordinate is above the slab midpoint on that axis). Since ``2^m - 2 < d``,
either some axis vector is constant, which frees half of the slab, or two axis
vectors coincide, which frees a quarter. The result has volume at least
``log2(d) / (4 (n + log2 d))`` and is found in ``O(n + d log d)`` time.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._validation import check_dim_at_least
from .exceptions import EmptyBoxError
from .geometry import AxisBox, PointSet

__all__ = [
    "CaseTag",
    "CollisionCertificate",
    "FinderResult",
    "SlabSelection",
    "encode_points",
    "find_collision",
    "find_large_empty_box",
    "floor_log2",
    "select_min_slab",
]


def floor_log2(d: int) -> int:
    if d < 1:
        raise EmptyBoxError("floor_log2 needs d >= 1")
    return int(d).bit_length() - 1


class CaseTag(str, enum.Enum):
    WHOLE_SLAB = "WHOLE_SLAB"
    ZERO_VECTOR = "ZERO_VECTOR"
    ONES_VECTOR = "ONES_VECTOR"
    DUPLICATE_PAIR = "DUPLICATE_PAIR"


@dataclass(frozen=True)
class SlabSelection:
    k: int
    ell: int
    slab_index: int
    lo: float
    hi: float
    inside_points: np.ndarray  # row indices assigned to the slab

    @property
    def m(self) -> int:
        return len(self.inside_points)

    def slab_box(self, dim: int) -> AxisBox:
        return AxisBox((self.lo,) + (0.0,) * (dim - 1), (self.hi,) + (1.0,) * (dim - 1))

    def extents(self, dim: int) -> tuple[np.ndarray, np.ndarray]:
        a = np.zeros(dim)
        b = np.ones(dim)
        a[0], b[0] = self.lo, self.hi
        return a, b


@dataclass(frozen=True)
class CollisionCertificate:
    """Why the returned box is empty.

    ``axes`` holds one axis for ZERO/ONES and ``(i, j)`` with ``i < j`` for a
    duplicate pair. ``uncovered`` is the bit pair never seen on ``(i, j)``.
    """

    case: CaseTag
    axes: tuple
    uncovered: str | None = None

    def to_dict(self) -> dict:
        return {"case": self.case.value, "axes": list(self.axes), "uncovered": self.uncovered}


@dataclass(frozen=True)
class FinderResult:
    box: AxisBox
    certificate: CollisionCertificate
    selection: SlabSelection

    @property
    def volume(self) -> float:
        return self.box.volume


def _finder_array(S) -> np.ndarray:
    """2-D float64 view of the input without a full range scan.

    The finder reads only the first column of every point and all columns of
    the few points in the chosen slab; those are validated where they are
    read, which keeps the whole search at O(n + d log d).
    """
    if isinstance(S, PointSet):
        return S.points
    X = np.asarray(S, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] < 1:
        raise EmptyBoxError("points must be a 2-D array of shape (n, d)")
    return X


def _check_unit(values: np.ndarray, what: str):
    if values.size and not (values.min() >= 0.0 and values.max() <= 1.0):
        raise EmptyBoxError(f"{what} must lie in [0, 1]")


_CHUNK = 1 << 13  # rows per pass step; scratch plus counters stay in L2-sized memory


def select_min_slab(S) -> SlabSelection:
    """Pick the slab with the fewest points (lowest index on ties).

    Slab ``i`` owns first coordinates in ``[b_i, b_{i+1})`` where
    ``b_i = i / (k + 1)`` as a float; the last slab also owns ``x = 1``.
    Assignment starts from ``floor(x (k + 1))`` and is corrected by one step
    against ``b_i``, so ownership agrees exactly with the float interval used
    for the output box. The first column is read in fixed-size chunks, once
    to count and once to collect the chosen slab's points.
    """
    X = _finder_array(S)
    n, d = X.shape
    check_dim_at_least(d, 2)
    ell = floor_log2(d)
    k = n // (ell + 1)
    scale = float(k + 1)
    counts = np.zeros(k + 1, dtype=np.int64)
    t = np.empty(min(n, _CHUNK))
    ix = np.empty(min(n, _CHUNK), dtype=np.int64)
    for start in range(0, n, _CHUNK):
        x = X[start:start + _CHUNK, 0]
        _check_unit(x, "first coordinates")
        tc, ic = t[:len(x)], ix[:len(x)]
        np.multiply(x, scale, out=tc)
        np.copyto(ic, tc, casting="unsafe")  # floor, as x >= 0
        np.minimum(ic, k, out=ic)
        np.divide(ic, scale, out=tc)  # same float as b_i
        ic -= x < tc
        np.divide(ic + 1, scale, out=tc)
        ic += (x >= tc) & (ic < k)
        np.add.at(counts, ic, 1)
    i = int(np.argmin(counts))
    lo, hi = i / scale, (i + 1) / scale
    hits = []
    for start in range(0, n, _CHUNK):
        x = X[start:start + _CHUNK, 0]
        mask = x >= lo
        if i < k:
            mask &= x < hi
        hits.append(np.flatnonzero(mask) + start)
    inside = np.concatenate(hits) if hits else np.empty(0, dtype=np.intp)
    if len(inside) != counts[i]:
        raise AssertionError("slab assignment disagrees with the slab interval")
    if len(inside) > ell:
        raise AssertionError(f"pigeonhole violated: slab holds {len(inside)} > {ell} points")
    return SlabSelection(k=k, ell=ell, slab_index=i, lo=lo, hi=hi, inside_points=inside)


def encode_points(sel: SlabSelection, S) -> np.ndarray:
    """Bit matrix of shape ``(d, m)``: entry ``[i, j]`` is 1 iff point ``j``'s
    coordinate on axis ``i`` is strictly above that axis' slab midpoint."""
    X = _finder_array(S)
    a, b = sel.extents(X.shape[1])
    mid = (a + b) / 2
    P = X[sel.inside_points]
    _check_unit(P, "coordinates of points in the slab")
    return (P > mid).T.astype(np.uint8)


def _pack(bits: np.ndarray) -> np.ndarray:
    d, m = bits.shape
    if m > 63:
        raise EmptyBoxError(f"cannot pack {m}-bit vectors into int64 keys")
    weights = np.left_shift(np.int64(1), np.arange(m - 1, -1, -1, dtype=np.int64))
    return bits.astype(np.int64) @ weights if m else np.zeros(d, dtype=np.int64)


def find_collision(bits: np.ndarray) -> CollisionCertificate:
    """Certificate for a non-empty ``(d, m)`` bit matrix with ``1 <= m <= floor(log2 d)``.

    Zero vectors are preferred over all-ones vectors, lower axes over higher
    ones; otherwise the lexicographically first equal pair of axis vectors is
    returned with uncovered combination ``"01"``.
    """
    bits = np.asarray(bits)
    d, m = bits.shape
    if not 1 <= m <= floor_log2(d):
        raise EmptyBoxError(f"need 1 <= m <= floor(log2 d); got m={m}, d={d}")
    keys = _pack(bits)
    zero = np.flatnonzero(keys == 0)
    if zero.size:
        return CollisionCertificate(CaseTag.ZERO_VECTOR, (int(zero[0]),))
    ones = np.flatnonzero(keys == (1 << m) - 1)
    if ones.size:
        return CollisionCertificate(CaseTag.ONES_VECTOR, (int(ones[0]),))
    order = np.argsort(keys, kind="stable")
    sk = keys[order]
    same = np.flatnonzero(sk[1:] == sk[:-1])
    if not same.size:
        raise AssertionError("pigeonhole violated: no duplicate axis vectors")
    # within a run of equal keys the stable order lists axes ascending, so the
    # run start is the smallest axis and its successor the next smallest
    run_start = same[np.r_[True, same[1:] != same[:-1] + 1]]
    best = min(run_start, key=lambda s: order[s])
    i, j = int(order[best]), int(order[best + 1])
    return CollisionCertificate(CaseTag.DUPLICATE_PAIR, (i, j), "01")


def _box_from_certificate(sel: SlabSelection, dim: int, cert: CollisionCertificate) -> AxisBox:
    a, b = sel.extents(dim)
    mid = (a + b) / 2
    lo, hi = a.copy(), b.copy()
    if cert.case is CaseTag.ZERO_VECTOR:
        (i,) = cert.axes
        lo[i] = mid[i]
    elif cert.case is CaseTag.ONES_VECTOR:
        (i,) = cert.axes
        hi[i] = mid[i]
    elif cert.case is CaseTag.DUPLICATE_PAIR:
        i, j = cert.axes
        hi[i] = mid[i]
        lo[j] = mid[j]
    return AxisBox(tuple(lo.tolist()), tuple(hi.tolist()))


def find_large_empty_box(S) -> FinderResult:
    """Empty box of volume at least ``log2(d) / (4 (n + log2 d))``, for ``d >= 2``.

    ``S`` may be a PointSet or an ``(n, d)`` array. A raw array is validated
    only where it is read: every first coordinate, and the full rows of the
    points in the chosen slab.

    >>> res = find_large_empty_box([[0.5, 0.5]])
    >>> res.box.lo, res.box.hi, res.certificate.case.value
    ((0.5, 0.0), (1.0, 1.0), 'ZERO_VECTOR')
    """
    X = _finder_array(S)
    sel = select_min_slab(X)
    if sel.m == 0:
        cert = CollisionCertificate(CaseTag.WHOLE_SLAB, ())
    else:
        cert = find_collision(encode_points(sel, X))
    return FinderResult(_box_from_certificate(sel, X.shape[1], cert), cert, sel)
