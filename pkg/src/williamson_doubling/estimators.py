"""scikit-learn style wrappers so the construction drops into a ``Pipeline``."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .hadamard import is_hadamard, williamson_array
from .validation import array_to_quads, check_quad_array, quads_to_array
from .williamson import NotWilliamsonError, double, verify_quad


class WilliamsonVerifier(BaseEstimator):
    """``predict`` returns one boolean per quad: does it verify?"""

    def __init__(self, full_range=False):
        self.full_range = full_range

    def fit(self, X, y=None):
        X = check_quad_array(X)
        self.order_ = X.shape[2]
        return self

    def predict(self, X):
        X = check_quad_array(X)
        return np.array(
            [verify_quad(q, full_range=self.full_range).is_williamson for q in array_to_quads(X)],
            dtype=bool,
        )


class QuadDoubler(TransformerMixin, BaseEstimator):
    """Map Williamson quads of odd order ``n`` to quads of order ``2n``.

    ``fit`` records the input order.  ``transform`` raises if a quad fails
    verification, since the construction is only valid for genuine
    Williamson input.
    """

    def fit(self, X, y=None):
        X = check_quad_array(X, require_odd=True)
        self.order_ = X.shape[2]
        self.n_features_in_ = 4 * self.order_
        return self

    def transform(self, X):
        check_is_fitted(self, "order_")
        X = check_quad_array(X, require_odd=True)
        if X.shape[2] != self.order_:
            raise ValueError(f"fitted on order {self.order_}, got order {X.shape[2]}")
        return quads_to_array([double(q) for q in array_to_quads(X)])


class HadamardExpander(TransformerMixin, BaseEstimator):
    """Expand each quad to its ``4n x 4n`` Williamson array.

    With ``check=True`` every output matrix is confirmed Hadamard.
    """

    def __init__(self, check=True):
        self.check = check

    def fit(self, X, y=None):
        X = check_quad_array(X)
        self.order_ = X.shape[2]
        return self

    def transform(self, X):
        check_is_fitted(self, "order_")
        X = check_quad_array(X)
        out = []
        for q in array_to_quads(X):
            m = williamson_array(q)
            if self.check and not is_hadamard(m):
                raise NotWilliamsonError(f"array of order {len(m)} is not Hadamard")
            out.append(m)
        return np.stack(out)
