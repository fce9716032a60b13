import json

import pytest

import superym


def test_dimension_table():
    assert superym.dims_ym(3, 1, 10) == [0, 3, 1, 3, 2, 6, 6, 12, 15, 33]


def test_hilbert_series_inverts_denominator():
    den = [1, 0, -3, -1, 0, 1, 3, 0, -1]
    a = [int(x) for x in superym.hilbert_series(3, 1, 16)]
    for w in range(17):
        assert sum(den[k] * a[w - k] for k in range(min(w, 8) + 1)) == (1 if w == 0 else 0)


def test_engine_agrees_with_series():
    p = superym.preset_json(3, 1)
    assert superym.lie_dims(p, 7) == superym.dims_ym(3, 1, 8)


def test_basis_report_shape():
    report = json.loads(superym.basis(superym.preset_json(3, 1), 1))
    assert report == [{"weight": 2, "dim": 3, "basis": ["x1", "x2", "x3"]}]


def test_hash_is_stable():
    p = superym.preset_json(2, 2)
    assert superym.presentation_hash(p) == superym.presentation_hash(json.dumps(json.loads(p)))
    assert len(superym.presentation_hash(p)) == 16


def test_superpotential():
    assert superym.superpotential_ok(superym.preset_json(3, 2))


def test_heisenberg_weight():
    assert superym.weight_of(superym.heis_json(2, 3), json.dumps({"z": "1"})) == (2, 3)
    assert superym.weight_of(superym.heis_json(1, 1), "{}") == (0, 0)


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        superym.weight_of(superym.heis_json(1, 1), json.dumps({"c": "1"}))
    with pytest.raises(ValueError):
        superym.presentation_hash(json.dumps({"n": 1, "s": 1, "gamma": [[["1/0"]]]}))
