from decimal import Decimal
from fractions import Fraction

import pytest

from classical_mt.errors import InvalidScalarError
from classical_mt.scalar import as_scalar, format_scalar, parse_scalar_list, scalar_to_json


@pytest.mark.parametrize(
    "value, expected",
    [
        (1, Fraction(1)),
        (Fraction(2, 6), Fraction(1, 3)),
        ([1, 3], Fraction(1, 3)),
        ([2, -4], Fraction(-1, 2)),
        ("1/3", Fraction(1, 3)),
        (" 0.25 ", Fraction(1, 4)),
        ("[1,3]", Fraction(1, 3)),
        (0.1, Fraction(1, 10)),
        (Decimal("0.3"), Fraction(3, 10)),
    ],
)
def test_as_scalar_forms(value, expected):
    assert as_scalar(value) == expected


@pytest.mark.parametrize("bad", [True, [1, 0], [1, 2, 3], "x/2", float("nan"), None, [1.5, 2]])
def test_as_scalar_rejects(bad):
    with pytest.raises(InvalidScalarError):
        as_scalar(bad)


def test_json_pairs_are_lowest_terms():
    assert scalar_to_json(Fraction(4, 6)) == [2, 3]
    assert scalar_to_json(Fraction(0)) == [0, 1]


def test_format_scalar():
    assert format_scalar(Fraction(2, 3)) == "2/3 (≈0.6667)"
    assert format_scalar(Fraction(1)) == "1"


def test_slash_and_pair_lists_agree():
    assert parse_scalar_list("1/2,1/4,1/4") == parse_scalar_list("[[1,2],[1,4],[1,4]]")
    assert parse_scalar_list("[0.5, 0.25, 0.25]") == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)]
