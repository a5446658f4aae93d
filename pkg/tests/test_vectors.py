import pytest

from facehull.vectors import IntVector, as_vector


def test_indexing_is_one_based():
    v = IntVector([5, 6, 0])
    assert v[1] == 5 and v[2] == 6 and v[3] == 0
    with pytest.raises(IndexError):
        v[0]
    with pytest.raises(IndexError):
        v[-1]


def test_zero_tail_reads_and_equality():
    v = IntVector([5, 6])
    assert v[7] == 0
    assert v == IntVector([5, 6, 0, 0])
    assert v == [5, 6]
    assert v == (5, 6, 0)
    assert hash(v) == hash(IntVector([5, 6, 0]))
    assert IntVector([]) == IntVector([0, 0])


def test_rejects_negative_and_non_integer():
    with pytest.raises(ValueError):
        IntVector([1, -1])
    with pytest.raises(ValueError):
        IntVector([1.5])
    with pytest.raises(ValueError):
        IntVector([True])


def test_parse_literal():
    assert IntVector.parse("5, 6,0") == (5, 6)
    assert IntVector.parse("") == ()
    with pytest.raises(ValueError):
        IntVector.parse("3.5,1")
    with pytest.raises(ValueError):
        IntVector.parse("a,b")


def test_support_trim_pad_text():
    v = IntVector([6, 12, 8, 0, 0])
    assert v.support() == 3
    assert v.trimmed() == (6, 12, 8)
    assert v.padded(6) == (6, 12, 8, 0, 0, 0)
    with pytest.raises(ValueError):
        v.padded(2)
    assert v.to_text() == "6 12 8"
    assert IntVector([0, 0]).to_text() == "0"


def test_as_vector_coercion():
    v = IntVector([1, 2])
    assert as_vector(v) is v
    assert as_vector([1, 2]) == v
