"""Rule tables and the exact global update map.

A rule table has a radius r >= 1 and maps the 2r beta-readings around a
column (each in [-r, r] or infinite) to a grain delta in [-r, r]. Tables
are ordered: the first matching line wins, with a table-wide default when
nothing matches. Pattern atoms are exact values, the two infinities, a
wildcard, or the sign classes POS / NEG (which include the respective
infinity).

The global map adds the matched delta to every finite column; infinite
columns never change. `apply` realises one synchronous step exactly on the
core-plus-tails representation: tail windows shift rigidly under the map,
so the image keeps each period length and slope, and only a bounded
neighbourhood of the core needs explicit evaluation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .config import Configuration, Tail
from .errors import CoreBoundExceeded, DomainError, RuleError
from .heights import Height, Infinity, MINUS_INF, PLUS_INF, is_finite
from .metric import DifferenceVector, beta


class _Marker:
    __slots__ = ("label",)

    def __init__(self, label):
        self.label = label

    def __repr__(self):
        return self.label


WILDCARD = _Marker("*")
POS = _Marker("pos")  # matches every height > 0, including +infinity
NEG = _Marker("neg")  # matches every height < 0, including -infinity

Atom = int | Infinity | _Marker


def atom_matches(atom: Atom, value: Height) -> bool:
    if atom is WILDCARD:
        return True
    if atom is POS:
        return value is PLUS_INF or (is_finite(value) and value > 0)
    if atom is NEG:
        return value is MINUS_INF or (is_finite(value) and value < 0)
    return atom == value


@dataclass(frozen=True)
class Rule:
    pattern: tuple
    delta: int


@dataclass(frozen=True)
class SandAutomaton:
    radius: int
    rules: tuple = ()
    default_delta: int = 0


def validate_rule(radius: int, lines, default_delta: int = 0) -> SandAutomaton:
    """Check a raw rule description and build the automaton.

    `lines` is a sequence of (pattern, delta) pairs; patterns bind the
    beta-readings of columns (i-r, ..., i-1, i+1, ..., i+r) in that order.
    """
    if isinstance(radius, bool) or not isinstance(radius, int) or radius < 1:
        raise RuleError(f"radius must be an integer >= 1, got {radius!r}")
    if not isinstance(default_delta, int) or abs(default_delta) > radius:
        raise RuleError(
            f"default delta must lie in [-{radius}, {radius}], got {default_delta!r}"
        )
    checked = []
    for idx, (pattern, delta) in enumerate(lines):
        pattern = tuple(pattern)
        if len(pattern) != 2 * radius:
            raise RuleError(
                f"rule {idx}: pattern has {len(pattern)} atoms, expected {2 * radius}"
            )
        for atom in pattern:
            if isinstance(atom, (_Marker, Infinity)):
                continue
            if isinstance(atom, bool) or not isinstance(atom, int):
                raise RuleError(f"rule {idx}: bad atom {atom!r}")
            if abs(atom) > radius:
                raise RuleError(
                    f"rule {idx}: atom {atom} outside the readable window "
                    f"[-{radius}, {radius}]"
                )
        if isinstance(delta, bool) or not isinstance(delta, int) or abs(delta) > radius:
            raise RuleError(
                f"rule {idx}: delta must lie in [-{radius}, {radius}], got {delta!r}"
            )
        checked.append(Rule(pattern, delta))
    return SandAutomaton(radius, tuple(checked), default_delta)


def local_delta(automaton: SandAutomaton, dvec: DifferenceVector) -> int:
    """Delta for one column given its difference vector (first match wins)."""
    if dvec.size != automaton.radius:
        raise ValueError(
            f"difference vector of gauge {dvec.size} fed to a radius-"
            f"{automaton.radius} rule table"
        )
    return _delta_from_entries(automaton, dvec.entries)


def _delta_from_entries(automaton, entries):
    for rule in automaton.rules:
        for atom, value in zip(rule.pattern, entries):
            if not atom_matches(atom, value):
                break
        else:
            return rule.delta
    return automaton.default_delta


def _entries_around(automaton, window, centre):
    """Beta-readings of the 2r neighbour heights around a centre height."""
    r = automaton.radius
    m = 0 if isinstance(centre, Infinity) else centre
    return tuple(beta(r, m, v) for v in window)


def image_height(automaton: SandAutomaton, c: Configuration, i: int) -> Height:
    """Height of column i after one step. Infinite columns are fixed."""
    centre = c.height(i)
    if isinstance(centre, Infinity):
        return centre
    r = automaton.radius
    window = tuple(
        c.height(i + off) for off in (*range(-r, 0), *range(1, r + 1))
    )
    return centre + _delta_from_entries(
        automaton, _entries_around(automaton, window, centre)
    )


def apply_window(automaton: SandAutomaton, c: Configuration, lo: int, hi: int):
    """Image heights of columns lo..hi, each evaluated directly."""
    return tuple(image_height(automaton, c, i) for i in range(lo, hi + 1))


def apply(automaton: SandAutomaton, c: Configuration) -> Configuration:
    """One synchronous step of the global map, exactly.

    Tail columns further than r from the core see a window that is a rigid
    copy of the one a full period earlier (shifted by the slope, which the
    readings cancel), so their deltas repeat with the tail period and the
    image tail keeps the same length and slope. Everything nearer the core
    is evaluated column by column.
    """
    r = automaton.radius
    a = c.core_start
    b = c.core_end
    core = tuple(image_height(automaton, c, i) for i in range(a - r, b + r + 1))
    pr = len(c.right.values)
    pl = len(c.left.values)
    right = Tail(
        tuple(image_height(automaton, c, b + r + 1 + j) for j in range(pr)),
        c.right.slope,
    )
    left = Tail(
        tuple(image_height(automaton, c, a - r - 1 - j) for j in range(pl)),
        c.left.slope,
    )
    return Configuration(a - r, core, left, right).canonicalize()


DEFAULT_MAX_CORE = 65536


def _core_cap(max_core):
    if max_core is not None:
        return max_core
    env = os.environ.get("SANDLAB_MAX_CORE")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"SANDLAB_MAX_CORE is not an integer: {env!r}")
    return DEFAULT_MAX_CORE


def iterate(
    automaton: SandAutomaton,
    c: Configuration,
    steps: int,
    max_core: int | None = None,
) -> Configuration:
    """steps-fold application of the global map.

    Raises CoreBoundExceeded if an intermediate canonical core outgrows
    `max_core` columns (default from SANDLAB_MAX_CORE, else 65536).
    """
    if steps < 0:
        raise DomainError("step count must be >= 0")
    cap = _core_cap(max_core)
    for n in range(steps):
        c = apply(automaton, c)
        if len(c.core) > cap:
            raise CoreBoundExceeded(
                f"core grew to {len(c.core)} columns (cap {cap}) at step {n + 1}"
            )
    return c
