import pytest

from opstat.core import OrderedSetPartition
from opstat.families import set_partitions
from opstat.motzkin import (
    MotzkinDiagram,
    lambda_map,
    motzkin_decode,
    motzkin_encode,
    motzkin_g,
)
from opstat.statistics import stat

# the worked 15-element pair: applying the involution to FIG6 yields FIG7
FIG6 = OrderedSetPartition.parse("1 4 15/2 3/5 6/7 10 13/8/9 11/12 14")
FIG7 = OrderedSetPartition.parse("1 12 15/2 4/3 6 9/5 7/8/10 11/13 14")


def test_encode_worked_example():
    d = motzkin_encode(FIG6)
    assert "".join(d.steps) == "UUDFUDUFUFDUDDD"
    # the printed source's label row has a slip at position 10; the defining
    # rule (one plus the open blocks left of the element's block) gives 2
    # there, which is also the only value the involution tolerates
    assert d.labels == (1, 1, 2, 1, 1, 2, 1, 3, 1, 2, 3, 1, 2, 2, 1)


def test_encode_all_singletons():
    d = motzkin_encode(OrderedSetPartition.parse("1/2/3"))
    assert "".join(d.steps) == "FFF"
    assert d.labels == (1, 1, 1)


def test_encode_requires_standard_form():
    with pytest.raises(ValueError):
        motzkin_encode(OrderedSetPartition.parse("2/1"))


def test_decode_roundtrip_exhaustive():
    for n in range(1, 8):
        for pi in set_partitions(n):
            assert motzkin_decode(motzkin_encode(pi)) == pi


def test_diagram_validation():
    with pytest.raises(ValueError, match="label 0"):
        MotzkinDiagram(("U", "D"), (1, 0))
    with pytest.raises(ValueError, match="rising"):
        MotzkinDiagram(("U", "D"), (2, 1))
    with pytest.raises(ValueError, match="flat"):
        MotzkinDiagram(("F",), (3,))
    with pytest.raises(ValueError, match="return"):
        MotzkinDiagram(("U",), (1,))


def test_g_worked_example():
    image = motzkin_g(motzkin_encode(FIG6))
    assert "".join(image.steps) == "UUUDUFDFDUDFUDD"
    assert image.labels == (1, 1, 1, 2, 1, 2, 3, 3, 2, 1, 2, 1, 1, 2, 1)


def test_g_fixes_flat_diagrams():
    d = motzkin_encode(OrderedSetPartition.parse("1/2/3"))
    assert motzkin_g(d) == d


def test_g_involution_exhaustive():
    for n in range(1, 8):
        for pi in set_partitions(n):
            d = motzkin_encode(pi)
            assert motzkin_g(motzkin_g(d)) == d


def test_lambda_worked_example():
    image = lambda_map(FIG6)
    assert image == FIG7
    assert stat(FIG6, "mak") == 37 == stat(image, "rcb")
    assert stat(FIG6, "lcb") == 16 == stat(image, "lcb")


def test_lambda_fixes_singleton_partitions():
    pi = OrderedSetPartition.parse("1/2")
    assert lambda_map(pi) == pi


def test_lambda_involution_and_statistics():
    for n in range(1, 8):
        for pi in set_partitions(n):
            image = lambda_map(pi)
            assert image.k == pi.k
            assert image.is_standard()
            assert lambda_map(image) == pi
            assert stat(pi, "mak") == stat(image, "rcb")
            assert stat(image, "lcb") == stat(pi, "lcb")
