"""A small zoo of named rule tables plus constructive witness builders.

The five automata:

  S   radius 1, the sandpile rule: a grain falls off any column that reads
      +infinity on its left and not -infinity on its right, and lands on
      any column reading the mirror situation; a column between two
      saturated readings is in free fall and keeps its height.
  Sr  radius 1, the arrow-reversed sandpile: grains climb instead of fall.
      S after Sr restores every configuration; the other order does not.
  L   radius 1, left-matching: each column moves one grain toward its left
      neighbour's height (sign classes, so any visible difference counts).
  X   radius 2, a table reading only the two left neighbours, built so
      that exactly the periodic words 0101... and 0202... collide.
  Y   radius 2, a sloped variant of X whose collisions live on affine
      configurations and nowhere in the periodic classes.

The builders at the bottom construct witness configurations: an explicit
one-step pre-image for L, the crown padding that turns a finite-class
collision into a periodic one, and the periodic splice that extracts a
periodic pre-image from an arbitrary one.
"""

from __future__ import annotations

import bisect

from .automaton import (
    NEG,
    POS,
    SandAutomaton,
    WILDCARD,
    apply,
    validate_rule,
)
from .config import (
    Configuration,
    Tail,
    equals,
    has_infinite_column,
    is_finite_class,
    support_radius,
)
from .errors import DomainError, InternalConsistencyError
from .heights import MINUS_INF, PLUS_INF

_W = WILDCARD


def make_S() -> SandAutomaton:
    return validate_rule(
        1,
        [
            ((PLUS_INF, MINUS_INF), 0),
            ((PLUS_INF, _W), +1),
            ((_W, MINUS_INF), -1),
        ],
        0,
    )


def make_Sr() -> SandAutomaton:
    return validate_rule(
        1,
        [
            ((PLUS_INF, MINUS_INF), 0),
            ((PLUS_INF, _W), -1),
            ((_W, MINUS_INF), +1),
        ],
        0,
    )


def make_L() -> SandAutomaton:
    return validate_rule(
        1,
        [
            ((NEG, _W), -1),
            ((POS, _W), +1),
        ],
        0,
    )


def make_X() -> SandAutomaton:
    return validate_rule(
        2,
        [
            ((PLUS_INF, _W, _W, _W), -1),
            ((2, _W, _W, _W), -1),
            ((1, -1, _W, _W), -1),
            ((1, -2, _W, _W), -1),
            ((1, MINUS_INF, _W, _W), -1),
            ((0, -2, _W, _W), -1),
            ((0, MINUS_INF, _W, _W), -1),
        ],
        0,
    )


def make_Y() -> SandAutomaton:
    return validate_rule(
        2,
        [
            ((PLUS_INF, _W, _W, _W), -1),
            ((2, _W, _W, _W), -1),
            ((1, _W, _W, _W), -1),
            ((0, _W, _W, _W), -1),
            ((-1, MINUS_INF, _W, _W), -1),
        ],
        0,
    )


ZOO = {"S": make_S, "Sr": make_Sr, "L": make_L, "X": make_X, "Y": make_Y}


def make(name: str) -> SandAutomaton:
    try:
        return ZOO[name]()
    except KeyError:
        raise DomainError(f"unknown zoo automaton {name!r}; have {sorted(ZOO)}")


# -- explicit pre-image for L ------------------------------------------------
#
# Under L every column moves one grain toward its left neighbour, so a
# column of the pre-image can be recovered from the target by undoing a
# +/-1 whose sign alternates away from the nearest height variation at or
# below the column; columns with no variation anywhere below are fixed.


def build_L_preimage(c: Configuration) -> Configuration:
    """A configuration that L maps onto c, built column by column."""
    if has_infinite_column(c.canonicalize()):
        raise DomainError("pre-image construction needs finite heights")
    cc = c.canonicalize()
    a, b = cc.core_start, cc.core_end
    pl, pr = len(cc.left.values), len(cc.right.values)

    # widened core window; margins keep tail periodicity arguments valid
    A = a - 2 - 2 * pl
    B = b + 2 + 2 * pr
    lo_scan = A - 2 * pl - 2
    hi_scan = B + pr + 2
    variations = [
        i for i in range(lo_scan, hi_scan + 1) if cc.height(i) != cc.height(i - 1)
    ]
    if not variations:
        return cc  # constant configurations are their own pre-image

    def governing(i):
        pos = bisect.bisect_right(variations, i)
        return variations[pos - 1] if pos else None

    def pre(i):
        v = governing(i)
        if v is None:
            return cc.height(i)
        ascending = cc.height(v) > cc.height(v - 1)
        even = (i - v) % 2 == 0
        return cc.height(i) + (1 if ascending == even else -1)

    core = tuple(pre(i) for i in range(A, B + 1))

    left_has = any(
        cc.height(i) != cc.height(i - 1) for i in range(a - 2 * pl, a - pl)
    )
    right_has = any(
        cc.height(i) != cc.height(i - 1) for i in range(b + 2 + pr, b + 2 + 2 * pr)
    )
    if left_has:
        left = Tail(tuple(pre(A - 1 - j) for j in range(pl)), cc.left.slope)
    else:
        left = cc.left  # everything below the first variation is copied
    if right_has:
        right = Tail(tuple(pre(B + 1 + j) for j in range(pr)), cc.right.slope)
    else:
        # beyond the last variation the pre-image alternates forever
        right = Tail((pre(B + 1), pre(B + 2)), 0)
    return Configuration(A, core, left, right).canonicalize()


# -- crown padding ------------------------------------------------------------


def _periodic_at(values, start: int) -> Configuration:
    """The |values|-periodic configuration with c_{start+t} = values[t]."""
    p = len(values)
    rotated = tuple(values[(j - start) % p] for j in range(p))
    return Configuration.periodic(rotated)


def crown_lift(c1: Configuration, c2: Configuration, automaton: SandAutomaton):
    """Turn a finite-class collision into a periodic one.

    Given distinct finite-class c1, c2 with equal images, returns the pair
    of (2k + 2r + 1)-periodic configurations that repeat each input's
    central window [-k, k] padded with zero columns, k being the larger
    support radius. The copies are too far apart to see each other, so the
    images again agree and the pair is a periodic-class collision.
    """
    if not (is_finite_class(c1) and is_finite_class(c2)):
        raise DomainError("crown padding needs finite-class configurations")
    if equals(c1, c2):
        raise DomainError("crown padding needs distinct configurations")
    if not equals(apply(automaton, c1), apply(automaton, c2)):
        raise DomainError("crown padding needs a colliding pair")
    k = max(support_radius(c1), support_radius(c2))
    r = automaton.radius
    window = range(-(k + r), k + r + 1)

    def lift(c):
        values = tuple(c.height(i) if abs(i) <= k else 0 for i in window)
        return _periodic_at(values, -(k + r)).canonicalize()

    return lift(c1), lift(c2)


# -- periodic splice -----------------------------------------------------------


def splice_match_indices(
    automaton: SandAutomaton,
    c: Configuration,
    c0: Configuration,
    period: int,
) -> tuple:
    """The cut positions (k1, k2) used by `periodic_splice`: the first two
    multiples of the period at which c shows identical 2r-windows."""
    if period < 1:
        raise DomainError("period must be >= 1")
    if has_infinite_column(c.canonicalize()):
        raise DomainError("splice needs finite heights")
    if not equals(c0.shift(period), c0):
        raise DomainError(f"target is not {period}-periodic")
    if not equals(apply(automaton, c), c0):
        raise DomainError("c is not a pre-image of the target")
    r = automaton.radius
    scan_bound = (2 * r + 1) ** (2 * r) + 1
    seen = {}
    for alpha in range(scan_bound):
        k = alpha * period
        window = tuple(c.height(k + off) for off in range(-r, r))
        if window in seen:
            return seen[window], k
        seen[window] = k
    raise InternalConsistencyError(
        "no repeated window within the pigeonhole bound; "
        "pre-image deltas out of range"
    )


def periodic_splice(
    automaton: SandAutomaton,
    c: Configuration,
    c0: Configuration,
    period: int,
) -> Configuration:
    """From any pre-image c of a p-periodic c0, cut out a periodic pre-image.

    Scans the multiples of p for two positions whose 2r-windows of c agree;
    repeating the block of c between them yields a periodic configuration
    whose image is still c0. Each window entry deviates from the periodic
    target by at most r, so the windows take boundedly many values and a
    repeat must appear within (2r+1)^(2r) + 1 multiples.
    """
    k1, k2 = splice_match_indices(automaton, c, c0, period)
    block = tuple(c.height(i) for i in range(k1, k2))
    return _periodic_at(block, k1).canonicalize()
