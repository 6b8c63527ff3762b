import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import Pipeline
from sklearn.preprocessing import StandardScaler

from raga_tonnetz.estimator import FEATURE_NAMES, HeavinessClassifier, TonnetzEmbedder, check_pitch_sets
from raga_tonnetz.swara import PitchSet


def test_input_forms_agree():
    chroma = np.zeros((1, 12), dtype=int)
    chroma[0, [0, 1, 4, 5, 7, 8, 11]] = 1
    forms = [["S r G m P d N"], [[0, 1, 4, 5, 7, 8, 11]], chroma, [PitchSet([0, 1, 4, 5, 7, 8, 11])]]
    assert len({tuple(check_pitch_sets(f)) for f in forms}) == 1


@pytest.mark.parametrize("bad", ["S R G", [], [[]], np.zeros((2, 11))])
def test_bad_input(bad):
    with pytest.raises(ValueError):
        check_pitch_sets(bad)


def test_transform_and_predict():
    X = ["S r G m P d N", "S r g M P d N", "S R G m P d n"]
    feats = TonnetzEmbedder().fit(X).transform(X)
    assert feats.shape == (3, len(FEATURE_NAMES))
    assert list(TonnetzEmbedder().fit(X).get_feature_names_out()) == list(FEATURE_NAMES)
    clf = HeavinessClassifier().fit(X)
    assert list(clf.predict(X)) == ["TopHeavy", "BottomHeavy", "Neutral"]
    assert clf.score(X, ["TopHeavy", "BottomHeavy", "Neutral"]) == 1.0


def test_unfitted():
    from sklearn.exceptions import NotFittedError

    with pytest.raises(NotFittedError):
        TonnetzEmbedder().transform(["S R G P D"])


def test_params_and_pipeline():
    est = TonnetzEmbedder(window=2)
    assert est.get_params() == {"window": 2}
    assert clone(est).set_params(window=4).window == 4
    pipe = Pipeline([("embed", TonnetzEmbedder()), ("scale", StandardScaler())])
    out = pipe.fit_transform(["S R G m P D N", "S R g m P D n", "S g m d n"])
    assert out.shape == (3, 5)
