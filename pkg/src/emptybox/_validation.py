"""Input validation helpers shared by the functional API and the estimators."""
import numpy as np
from sklearn.utils.validation import check_array

from .exceptions import EmptyBoxError


def check_points(X, dim=None, order=None):
    """Return ``X`` as a float64 array of shape (n, d) in [0, 1]^d.

    Accepts any array-like, including an empty ``(0, d)`` array. ``dim`` is
    only needed to interpret an empty input given as a flat list. ``order``
    is passed to sklearn (``None`` keeps the input layout).
    """
    if isinstance(X, np.ndarray) and X.ndim == 2 and X.shape[0] == 0:
        arr = np.zeros((0, X.shape[1]), dtype=np.float64)
    elif not isinstance(X, np.ndarray) and len(X) == 0:
        if dim is None:
            raise EmptyBoxError("cannot infer dimension of an empty point list")
        arr = np.zeros((0, dim), dtype=np.float64)
    else:
        # NaN fails the range test below, so sklearn's finiteness pass is redundant
        arr = check_array(X, dtype=np.float64, order=order, ensure_min_samples=1,
                          ensure_all_finite=False)
    if dim is not None and arr.shape[1] != dim:
        raise EmptyBoxError(f"expected points of dimension {dim}, got {arr.shape[1]}")
    if arr.size and not (arr.min() >= 0.0 and arr.max() <= 1.0):
        raise EmptyBoxError("point coordinates must lie in [0, 1]")
    return arr


def check_dim_at_least(d, minimum, what="algorithm"):
    if d < minimum:
        raise EmptyBoxError(f"{what} requires d >= {minimum}, got d = {d}")
