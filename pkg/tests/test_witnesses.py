"""Tests for the bundled witness corpus: every file loads, and every
claimed relationship re-verifies through the public API."""

import pytest

from sandlab import witnesses, zoo
from sandlab.analysis import verify_witness_pair
from sandlab.automaton import apply
from sandlab.config import Configuration, equals
from sandlab.errors import DomainError


def test_catalogue_lists_rules_and_configs():
    have = witnesses.available()
    assert have["S.rule"] == "rule"
    assert have["sandpile-collision-a.cfg"] == "config"
    assert len([n for n in have if n.endswith(".rule")]) == 5
    assert len([n for n in have if n.endswith(".cfg")]) == 11


def test_every_bundled_file_loads():
    for name, kind in witnesses.available().items():
        if kind == "rule":
            witnesses.load_rule(name)
        else:
            witnesses.load_config(name)


def test_unknown_name_raises():
    with pytest.raises(DomainError):
        witnesses.load_config("missing")
    with pytest.raises(DomainError):
        witnesses.load_rule("missing")


def test_sandpile_collision_pair_verifies():
    S = witnesses.load_rule("S")
    a = witnesses.load_config("sandpile-collision-a")
    b = witnesses.load_config("sandpile-collision-b")
    assert verify_witness_pair(S, a, b)
    assert equals(apply(S, b), a)


def test_periodic_collider_flattens():
    S = witnesses.load_rule("S")
    c = witnesses.load_config("sandpile-periodic-collider")
    assert equals(apply(S, c), Configuration.finite({}))


def test_x_collision_pair_verifies():
    X = witnesses.load_rule("X")
    a = witnesses.load_config("x-collision-a")
    b = witnesses.load_config("x-collision-b")
    assert verify_witness_pair(X, a, b)
    assert equals(apply(X, a), a)


def test_sloped_collision_pair_verifies():
    Y = witnesses.load_rule("Y")
    a = witnesses.load_config("sloped-collision-a")
    b = witnesses.load_config("sloped-collision-b")
    assert verify_witness_pair(Y, a, b)
    assert equals(apply(Y, b), a)


def test_crown_pair_matches_constructed_lift():
    S = witnesses.load_rule("S")
    a = witnesses.load_config("sandpile-collision-a")
    b = witnesses.load_config("sandpile-collision-b")
    _, d2 = zoo.crown_lift(a, b, S)
    assert equals(d2, witnesses.load_config("crown-pair-b"))


def test_step_preimage_applies_back():
    L = witnesses.load_rule("L")
    step = witnesses.load_config("step-two-level")
    pre = witnesses.load_config("step-preimage")
    assert equals(apply(L, pre), step)
    assert equals(zoo.build_L_preimage(step), pre)


def test_two_grain_column_has_no_small_mirror_preimage():
    from sandlab.analysis import EXHAUSTED_NO_WITNESS, check_preimage_bounded

    Sr = witnesses.load_rule("Sr")
    target = witnesses.load_config("two-grain-column")
    r = check_preimage_bounded(Sr, target, "F", 3, 4)
    assert r.verdict == EXHAUSTED_NO_WITNESS
