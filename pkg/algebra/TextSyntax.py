"""
Textual syntax for groups, elements, sequences, weight sets and families.

Grammar
-------
- group:     ``8`` or ``2x4`` (factors joined by ``x``)
- element:   ``3`` in a cyclic group, ``1:2`` in a product group
- sequence:  ``0,0,1,3`` (empty text is the empty sequence)
- weights:   ``1,-1`` (reduced modulo the group exponent on parse)
- range:     ``8`` or ``2-8`` (inclusive)
- family:    ``singleton``, ``pm1``, ``units``, ``all-subsets``, ``gcd-diff``,
             ``random:k:count``, ``explicit:1,3``

Every ``format_*`` function is the inverse of the matching ``parse_*``.
"""

from __future__ import annotations

from typing import Tuple

import pyparsing as pp

from algebra.Errors import ParseError, StructuralError
from algebra.GroupSpec import GroupElement, GroupSpec
from algebra.GSequence import GSequence
from algebra.WeightSet import WeightSet

_int = pp.pyparsing_common.signed_integer
_nat = pp.pyparsing_common.integer

GROUP = pp.DelimitedList(_nat, delim=pp.CaselessLiteral("x"))
ELEMENT = pp.Group(pp.DelimitedList(_int, delim=":"))
SEQUENCE = pp.Optional(pp.DelimitedList(ELEMENT, delim=","))
WEIGHTS = pp.DelimitedList(_int, delim=",")
N_RANGE = _nat + pp.Optional(pp.Suppress(pp.Literal("-") | pp.Literal("..")) + _nat)

_family_name = pp.one_of("singleton pm1 units all-subsets gcd-diff")("name")
_random_family = pp.Keyword("random")("name") + pp.Suppress(":") + _nat("k") + pp.Suppress(":") + _nat("count")
_explicit_family = pp.Keyword("explicit")("name") + pp.Suppress(":") + pp.Group(WEIGHTS)("weights")
FAMILY = _random_family | _explicit_family | _family_name


def _parse(grammar: pp.ParserElement, text: str, what: str) -> pp.ParseResults:
    try:
        return grammar.parse_string(text.strip(), parse_all=True)
    except pp.ParseException as exc:
        raise ParseError(f"Could not parse {what} from {text!r}: {exc.msg} (column {exc.col}).") from exc


# -----------------------------
# Parsers
# -----------------------------
def parse_group(text: str) -> GroupSpec:
    result = _parse(GROUP, text, "group")
    return GroupSpec(tuple(result.as_list()))


def parse_element(text: str, G: GroupSpec) -> GroupElement:
    result = _parse(ELEMENT, text, "element")
    return _element_from_tokens(result[0], G, text)


def parse_sequence(text: str, G: GroupSpec) -> GSequence:
    result = _parse(SEQUENCE, text, "sequence")
    entries = tuple(_element_from_tokens(tokens, G, text) for tokens in result)
    return GSequence(G, entries)


def parse_weights(text: str, G: GroupSpec) -> WeightSet:
    result = _parse(WEIGHTS, text, "weight set")
    return WeightSet.for_group(result.as_list(), G)


def parse_n_range(text: str) -> Tuple[int, int]:
    """``8`` gives ``(8, 8)``; ``2-8`` (or ``2..8``) gives ``(2, 8)``."""
    values = _parse(N_RANGE, text, "order range").as_list()
    low, high = (values[0], values[-1])
    if low > high:
        raise ParseError(f"Empty order range {text!r}: {low} > {high}.")
    return low, high


def parse_family(text: str) -> Tuple[str, Tuple[int, ...]]:
    """
    Split a weight family descriptor into ``(name, parameters)``.

    ``random:2:5`` gives ``("random", (2, 5))``; ``explicit:1,-1`` gives
    ``("explicit", (1, -1))``; named families have no parameters.
    """
    result = _parse(FAMILY, text, "weight family")
    name = result["name"]
    if name == "random":
        return name, (int(result["k"]), int(result["count"]))
    if name == "explicit":
        return name, tuple(int(a) for a in result["weights"].as_list())
    return name, ()


def _element_from_tokens(tokens, G: GroupSpec, text: str) -> GroupElement:
    try:
        return G.element(*[int(t) for t in tokens])
    except StructuralError as exc:
        raise ParseError(f"Element in {text!r} does not fit group {G.label()}: {exc}") from exc


# -----------------------------
# Formatters
# -----------------------------
def format_element(g: GroupElement) -> str:
    return ":".join(str(r) for r in g.residues)


def format_sequence(S: GSequence) -> str:
    return ",".join(format_element(g) for g in S.entries)


def format_weights(A: WeightSet) -> str:
    return A.text()


def format_group(G: GroupSpec) -> str:
    return G.label()
