
import pytest
from hypothesis import given
from hypothesis import strategies as st

from abtaxon.dsl import DSLValidationError, ParseError, parse_group_expr, render, tokenize
from abtaxon.model import (
    ALEPH0,
    Cyclic,
    FreeZ,
    GroupExpr,
    Prufer,
    Rational,
    TorsionFreeFR,
    UnboundedDSC,
    ValidationError,
    aleph,
    finite,
    normalize,
)

from gen import exprs, raw_terms


def test_transcription():
    g = parse_group_expr("Z^3 + Q + Z(2^3)^w")
    assert dict(g.terms) == {FreeZ(): finite(3), Rational(): finite(1), Cyclic(2, 3): ALEPH0}


def test_all_atom_kinds():
    g = parse_group_expr("Z(5^inf) + B(7) + TF(2;3,5)")
    assert dict(g.terms) == {Prufer(5): finite(1), UnboundedDSC(7): finite(1), TorsionFreeFR(2, (3, 5)): finite(1)}


def test_non_prime_hint():
    with pytest.raises(DSLValidationError) as exc:
        parse_group_expr("Z(4^2)")
    assert exc.value.position == (1, 3)
    assert "4 = 2^2" in str(exc.value)
    assert isinstance(exc.value, ValidationError)


@pytest.mark.parametrize("text", ["TF(0)", "Z^0", "Z(2^0)"])
def test_zero_values_rejected(text):
    with pytest.raises(DSLValidationError):
        parse_group_expr(text)


def test_render_examples():
    assert render(GroupExpr.of((Cyclic(2, 3), 5))) == "Z(2^3)^5"
    assert render(GroupExpr.zero()) == "0"
    assert render(GroupExpr.of((FreeZ(), aleph(1)))) == "Z^w1"


def test_aliases_and_whitespace():
    assert render(parse_group_expr("Q ⊕ Z(2^∞)")) == "Q + Z(2^inf)"
    assert parse_group_expr("  Z (3 ^ 2)\n+Z") == parse_group_expr("Z(3^2)+Z")


def test_merging():
    assert render(parse_group_expr("Z + Z")) == "Z^2"
    assert render(parse_group_expr("Z(2) + Z(2^1)")) == "Z(2)^2"


@pytest.mark.parametrize(
    "text, pos",
    [("Z +", (1, 4)), ("Z(2", (1, 4)), ("X", (1, 1)), ("Z\n+ %", (2, 3)), ("0 + Z", (1, 1)), ("Z Q", (1, 3))],
)
def test_errors_are_positioned(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_group_expr(text)
    assert exc.value.position == pos


def test_error_messages_stable():
    msgs = set()
    for _ in range(3):
        with pytest.raises(ParseError) as exc:
            parse_group_expr("Z(2^)")
        msgs.add(str(exc.value))
    assert len(msgs) == 1


def test_invalid_utf8():
    with pytest.raises(ParseError) as exc:
        parse_group_expr(b"Z + \xff")
    assert exc.value.position == (1, 5)


def test_bytes_input():
    assert parse_group_expr("Z ⊕ Q".encode()) == parse_group_expr("Z + Q")


def test_tokens():
    assert [t.text for t in tokenize("Z(2^w1)")] == ["Z", "(", "2", "^", "w", "1", ")", ""]


# properties -------------------------------------------------------------


@given(exprs)
def test_round_trip(g):
    assert parse_group_expr(render(g)) == g


@given(raw_terms)
def test_parser_normalization_matches(raw):
    text = " + ".join(f"{a}^{m}" for a, m in raw if not m.is_zero) or "0"
    assert parse_group_expr(text) == normalize(raw)


@given(st.binary(max_size=40))
def test_fuzz_bytes(data):
    try:
        parse_group_expr(data)
    except ParseError as exc:
        assert exc.line >= 1 and exc.column >= 1


@given(st.text(alphabet="ZQBTF()^+;,0123456789winf ⊕∞", max_size=30))
def test_fuzz_near_grammar(text):
    try:
        parse_group_expr(text)
    except ParseError as exc:
        lines = text.split("\n")
        assert 1 <= exc.line <= len(lines)
        assert 1 <= exc.column <= len(lines[exc.line - 1]) + 1
