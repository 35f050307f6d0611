import pytest

from algebra.Errors import ParseError, StructuralError
from algebra.GroupSpec import GroupSpec
from algebra.GSequence import GSequence
from algebra.TextSyntax import (
    format_element,
    format_group,
    format_sequence,
    format_weights,
    parse_element,
    parse_family,
    parse_group,
    parse_n_range,
    parse_sequence,
    parse_weights,
)


def test_parse_groups():
    assert parse_group("8") == GroupSpec.cyclic(8)
    assert parse_group("2x4") == GroupSpec((2, 4))
    assert parse_group(" 3X3 ") == GroupSpec((3, 3))
    assert format_group(GroupSpec((2, 2, 2))) == "2x2x2"


@pytest.mark.parametrize("text", ["", "x4", "2x", "2,4", "a"])
def test_bad_group_text(text):
    with pytest.raises(ParseError):
        parse_group(text)


def test_parse_elements_and_sequences():
    z2z4 = GroupSpec((2, 4))
    assert parse_element("1:3", z2z4) == z2z4.element(1, 3)
    assert parse_element("1:-1", z2z4) == z2z4.element(1, 3)
    S = parse_sequence("1:0,0:1,1:0", z2z4)
    assert S == GSequence.from_residues(z2z4, [(0, 1), (1, 0), (1, 0)])
    assert format_sequence(S) == "0:1,1:0,1:0"
    assert format_element(z2z4.element(1, 2)) == "1:2"


def test_empty_sequence_text():
    G = GroupSpec.cyclic(5)
    assert parse_sequence("", G) == GSequence(G)
    assert format_sequence(GSequence(G)) == ""


def test_element_arity_mismatch_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_element("1:2", GroupSpec.cyclic(5))
    with pytest.raises(StructuralError):
        parse_sequence("1,2:", GroupSpec.cyclic(5))


def test_weights_reduce_modulo_exponent():
    z8 = GroupSpec.cyclic(8)
    A = parse_weights("1,-1", z8)
    assert A.weights == (1, 7)
    assert format_weights(A) == "1,7"
    assert parse_weights(format_weights(A), z8) == A


def test_parse_n_range():
    assert parse_n_range("8") == (8, 8)
    assert parse_n_range("2-8") == (2, 8)
    assert parse_n_range("2..6") == (2, 6)
    with pytest.raises(ParseError):
        parse_n_range("8-2")
    with pytest.raises(ParseError):
        parse_n_range("two")


def test_parse_family():
    assert parse_family("singleton") == ("singleton", ())
    assert parse_family("all-subsets") == ("all-subsets", ())
    assert parse_family("gcd-diff") == ("gcd-diff", ())
    assert parse_family("random:2:5") == ("random", (2, 5))
    assert parse_family("explicit:1,-1") == ("explicit", (1, -1))
    assert parse_family("explicit:3") == ("explicit", (3,))
    with pytest.raises(ParseError):
        parse_family("everything")
    with pytest.raises(ParseError):
        parse_family("random:2")
