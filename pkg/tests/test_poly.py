import pytest

from critmod import poly


def test_arithmetic():
    a, b = (1, 1), (1, -1)
    assert poly.mul(a, b) == (1, 0, -1)
    assert poly.add(a, b) == (2,)
    assert poly.sub(a, a) == ()
    assert poly.power((1, -1), 3) == (1, -3, 3, -1)
    assert poly.shift((2, 1), 2) == (0, 0, 2, 1)
    assert poly.evaluate((2, 1), 3) == 5
    assert poly.degree(()) == -1


def test_reciprocal_and_counts():
    assert poly.reciprocal((1, 2), 3) == (0, 0, 2, 1)
    with pytest.raises(ValueError):
        poly.reciprocal((1, 2, 3), 1)
    assert poly.from_counts([0, 2, 2]) == (1, 0, 2)
    assert poly.to_str((2, 1)) == "2 + t"
