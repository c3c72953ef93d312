"""Tests for the text formats: rule files, configuration files, dumps,
and the ASCII renderer."""

import pytest

from sandlab.automaton import validate_rule
from sandlab.config import Configuration, Tail, equals
from sandlab.errors import ParseError
from sandlab.formats import (
    emit_config_file,
    emit_dump,
    emit_rule_file,
    parse_config_file,
    parse_dump,
    parse_rule_file,
    render_ascii,
)
from sandlab.heights import MINUS_INF, PLUS_INF
from sandlab.rng import Lcg64, sample_configuration
from sandlab import zoo


def test_rule_round_trip_for_all_zoo_rules():
    for name in ("S", "Sr", "L", "X", "Y"):
        a = zoo.make(name)
        text = emit_rule_file(a)
        assert parse_rule_file(text) == a


def test_rule_file_ignores_comments_and_blanks():
    text = """# a comment
sand-rule v1

radius: 1   # trailing comment
default: 0
rule: (+inf, *) -> 1
"""
    a = parse_rule_file(text)
    assert a.radius == 1
    assert len(a.rules) == 1


def test_rule_file_missing_header():
    with pytest.raises(ParseError):
        parse_rule_file("radius: 1\n")


def test_rule_file_arity_error_carries_line_number():
    text = "sand-rule v1\nradius: 2\nrule: (+inf) -> -1\n"
    with pytest.raises(ParseError) as info:
        parse_rule_file(text)
    assert "4 atoms" in str(info.value) or "expected 4" in str(info.value)
    assert info.value.line == 3


def test_rule_file_bad_delta():
    with pytest.raises(ParseError):
        parse_rule_file("sand-rule v1\nradius: 1\nrule: (0, 0) -> 5\n")


def test_rule_file_unknown_line():
    with pytest.raises(ParseError) as info:
        parse_rule_file("sand-rule v1\nradius: 1\nwat: 3\n")
    assert info.value.line == 3


def test_config_round_trip_finite():
    c = Configuration.finite({0: 2, 3: -1, -2: PLUS_INF})
    assert equals(parse_config_file(emit_config_file(c)), c)
    assert "kind: finite" in emit_config_file(c)


def test_config_round_trip_periodic():
    c = Configuration.periodic((1, -1, 0, 0, 0))
    text = emit_config_file(c)
    assert "kind: periodic" in text
    assert equals(parse_config_file(text), c)


def test_config_round_trip_affine():
    c = Configuration.affine((0, 2), 1)
    text = emit_config_file(c)
    assert "kind: affine" in text
    assert "slope: 1" in text
    assert equals(parse_config_file(text), c)


def test_config_round_trip_general():
    c = Configuration.general(0, (), Tail((0,), 0), Tail((3, 1), 0))
    text = emit_config_file(c)
    assert "kind: general" in text
    assert equals(parse_config_file(text), c)


def test_config_round_trip_random():
    rng = Lcg64(123)
    for k in range(300):
        c = sample_configuration(rng, height=4, include_infinities=(k % 3 == 0))
        assert equals(parse_config_file(emit_config_file(c)), c)


def test_emit_is_canonical_and_deterministic():
    a = Configuration.periodic((0, 1))
    b = Configuration.general(4, (0, 1, 0, 1), Tail((1, 0), 0), Tail((0, 1), 0))
    assert equals(a, b)
    assert emit_config_file(a) == emit_config_file(b)


def test_config_file_errors():
    with pytest.raises(ParseError):
        parse_config_file("sand-config v1\n")  # missing kind
    with pytest.raises(ParseError):
        parse_config_file("sand-config v1\nkind: nope\n")
    with pytest.raises(ParseError) as info:
        parse_config_file("sand-config v1\nkind: finite\nat 0\n")
    assert info.value.line == 3
    with pytest.raises(ParseError):
        parse_config_file("sand-config v1\nkind: affine\nperiod: 0 2\n")


def test_parse_accepts_infinity_heights():
    c = parse_config_file("sand-config v1\nkind: finite\nat 0 +inf\nat 1 -inf\n")
    assert c.height(0) is PLUS_INF
    assert c.height(1) is MINUS_INF


def test_render_flat():
    z = Configuration.finite({})
    art = render_ascii(z, -2, 2)
    lines = art.splitlines()
    assert lines[1] == "-----"
    assert "0" in lines[-1]


def test_render_column_heights():
    c = Configuration.finite({0: 2, 1: -1})
    art = render_ascii(c, -1, 2)
    lines = art.splitlines()
    # two rows above ground: column 0 has two grains
    assert lines[0] == " #  "
    assert lines[1] == " #  "
    assert lines[2] == "----"
    assert lines[3] == "  # "
    assert lines[4].index("0") == 1


def test_render_infinities():
    c = Configuration.finite({0: PLUS_INF, 1: MINUS_INF})
    art = render_ascii(c, 0, 1)
    lines = art.splitlines()
    assert "^" in lines[0]
    assert any("v" in ln for ln in lines[2:])


def test_render_rejects_bad_window():
    with pytest.raises(Exception):
        render_ascii(Configuration.finite({}), 3, 1)


def test_dump_round_trip():
    c = Configuration.general(-1, (1, PLUS_INF, 2), Tail((0,), 0), Tail((-3,), 0))
    text = emit_dump(c, -4, 4)
    lo, hi, heights = parse_dump(text)
    assert (lo, hi) == (-4, 4)
    assert heights == c.heights(-4, 4)


def test_dump_length_validation():
    with pytest.raises(ParseError):
        parse_dump("dump v1\nwindow: 0 3\nheights: 1 2\n")
