"""scikit-learn compatible wrappers around the embedding solver.

``X`` is a sequence of pitch sets: swara strings such as ``"S r G m P d N"``,
iterables of pitch-class integers, or 12-column binary chroma rows. Both
estimators are stateless, so ``fit`` only validates its input, but they
compose with :class:`sklearn.pipeline.Pipeline` and model selection tools.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .classify import Heaviness, heaviness_counts
from .embed import SearchWindow, solve_embedding
from .swara import PitchSet, parse_pitch_set

FEATURE_NAMES = ("edge_count", "above", "below", "on_axis", "ambiguous")
CLASSES = np.array([h.value for h in Heaviness])


def check_pitch_sets(X) -> list[PitchSet]:
    """Coerce ``X`` to a list of non-empty :class:`PitchSet` values."""
    if isinstance(X, (str, bytes)):
        raise ValueError("X must be a sequence of pitch sets, not a single string")
    if isinstance(X, np.ndarray) and X.ndim == 2:
        if X.shape[1] != 12:
            raise ValueError(f"chroma input needs 12 columns, got {X.shape[1]}")
        sets = [PitchSet(np.flatnonzero(row)) for row in X]
    else:
        sets = []
        for item in X:
            if isinstance(item, PitchSet):
                sets.append(item)
            elif isinstance(item, str):
                sets.append(parse_pitch_set(item))
            else:
                sets.append(PitchSet(int(pc) for pc in item))
    if not sets:
        raise ValueError("X contains no pitch sets")
    for i, s in enumerate(sets):
        if len(s) == 0:
            raise ValueError(f"pitch set at index {i} is empty")
    return sets


class TonnetzEmbedder(TransformerMixin, BaseEstimator):
    """Maps pitch sets to features of their most compact embedding.

    Parameters
    ----------
    window : int, default=3
        Search bound on lattice coordinates, ``|u|, |v| <= window``.

    The output columns are :data:`FEATURE_NAMES`.
    """

    def __init__(self, window: int = 3):
        self.window = window

    def fit(self, X, y=None):
        check_pitch_sets(X)
        self.window_ = SearchWindow.square(self.window)
        self.n_features_out_ = len(FEATURE_NAMES)
        return self

    def solve(self, X):
        check_is_fitted(self, "window_")
        return [solve_embedding(s, self.window_) for s in check_pitch_sets(X)]

    def transform(self, X):
        rows = []
        for result in self.solve(X):
            c = heaviness_counts(result.canonical)
            rows.append((result.edge_count, *c, int(result.ambiguous_heaviness)))
        return np.asarray(rows, dtype=int).reshape(-1, len(FEATURE_NAMES))

    def get_feature_names_out(self, input_features=None):
        return np.asarray(FEATURE_NAMES, dtype=object)


class HeavinessClassifier(ClassifierMixin, BaseEstimator):
    """Predicts ``"TopHeavy"``, ``"BottomHeavy"`` or ``"Neutral"`` per pitch set.

    ``y`` passed to :meth:`fit` is ignored; the labels follow from geometry,
    and :meth:`score` then measures agreement with reference labels.
    """

    def __init__(self, window: int = 3):
        self.window = window

    def fit(self, X, y=None):
        check_pitch_sets(X)
        self.window_ = SearchWindow.square(self.window)
        self.classes_ = CLASSES.copy()
        return self

    def predict(self, X):
        check_is_fitted(self, "window_")
        return np.array(
            [solve_embedding(s, self.window_).heaviness.value for s in check_pitch_sets(X)],
            dtype=object,
        )
