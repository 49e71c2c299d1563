"""scikit-learn style wrappers around the finder and the exact oracle.

``fit(X)`` searches for an empty box amidst the rows of ``X``; ``predict``
then flags which rows of new data fall strictly inside that box, so the
estimators act as gap detectors inside a pipeline.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_points
from .bounds import volume_lower_bound
from .finder import find_large_empty_box
from .geometry import PointSet, inside_mask
from .oracle import DEFAULT_BUDGET, max_empty_box_exact


class _EmptyBoxMixin:
    def predict(self, X):
        """1 for rows strictly inside the fitted empty box, else 0."""
        check_is_fitted(self, "box_")
        X = check_points(X, dim=self.n_features_in_)
        return inside_mask(self.box_, X).astype(np.int64)

    def fit_predict(self, X, y=None):
        return self.fit(X).predict(X)

    def score(self, X, y=None):
        """Volume of the fitted box; ``X`` is only checked for emptiness."""
        check_is_fitted(self, "box_")
        X = check_points(X, dim=self.n_features_in_)
        if inside_mask(self.box_, X).any():
            return 0.0
        return self.volume_


class LargeEmptyBoxFinder(_EmptyBoxMixin, BaseEstimator):
    """Finds an empty box of volume at least ``log2(d) / (4 (n + log2 d))``.

    Attributes set by ``fit``: ``box_``, ``volume_``, ``certificate_``,
    ``selection_``, ``guarantee_``, ``n_features_in_``.
    """

    def fit(self, X, y=None):
        X = check_points(X)
        res = find_large_empty_box(PointSet(X, X.shape[1]))
        self.n_features_in_ = X.shape[1]
        self.box_ = res.box
        self.volume_ = res.volume
        self.certificate_ = res.certificate
        self.selection_ = res.selection
        self.guarantee_ = volume_lower_bound(X.shape[0], X.shape[1])
        return self


class MaxEmptyBoxOracle(_EmptyBoxMixin, BaseEstimator):
    """Exact maximum empty box, for small inputs only."""

    def __init__(self, budget=DEFAULT_BUDGET):
        self.budget = budget

    def fit(self, X, y=None):
        X = check_points(X)
        self.n_features_in_ = X.shape[1]
        self.box_ = max_empty_box_exact(PointSet(X, X.shape[1]), budget=self.budget)
        self.volume_ = self.box_.volume
        return self
