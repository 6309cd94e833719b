import json

import pytest
from hypothesis import given, strategies as st

from hlab.errors import OutsideValidityError
from hlab.tables import DimTable, HilbertSeries, compare


def test_outside_window_raises():
    t = DimTable.from_sequence([1, 3, 0])
    assert t[1] == 3
    with pytest.raises(OutsideValidityError):
        t[3]
    with pytest.raises(OutsideValidityError):
        t[-1]
    g = DimTable(max_i=2, degrees=(0, 4))
    with pytest.raises(OutsideValidityError):
        g[(0, 5)]


def test_negative_entries_rejected():
    t = DimTable(max_i=1)
    with pytest.raises(ValueError):
        t[0] = -1


def test_compare_uses_window_intersection():
    a = DimTable.from_sequence([1, 3, 0, 0])
    b = DimTable.from_sequence([1, 3, 0])
    assert compare(a, b) == (True, [])
    c = DimTable.from_sequence([1, 2])
    assert compare(a, c) == (True, [(1,)])
    far = DimTable.from_sequence([0], min_i=10)
    assert compare(a, far) == (False, [])


def test_hilbert_series_truncation():
    h = HilbertSeries((1, 1), 4, finite=True)
    assert h[7] == 0 and h.total() == 2
    inf = HilbertSeries((2, 4, 6), 2)
    with pytest.raises(OutsideValidityError):
        inf[3]
    with pytest.raises(OutsideValidityError):
        inf.total()


entries = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                          st.integers(0, 50), max_size=12)


@given(entries)
def test_json_round_trip(es):
    t = DimTable(max_i=3, degrees=(0, 3))
    for k, v in es.items():
        t[k] = v
    text = json.dumps(t.to_json(), sort_keys=True)
    back = DimTable.from_json(json.loads(text))
    assert back == t
    assert json.dumps(back.to_json(), sort_keys=True) == text
