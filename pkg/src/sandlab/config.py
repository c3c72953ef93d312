"""Exact representation of bi-infinite column configurations.

A configuration assigns a height (int or ±infinity) to every column i in Z.
The representation is a finite explicit core window plus one ultimately
affine-periodic tail per side:

    core covers columns [core_start, core_start + len(core) - 1]
    right tail, reading outward from the core:   column core_end + 1 + j has
        height values[j mod p] + slope * (j div p)      (finite entries)
        height values[j mod p]                          (infinite entries)
    left tail mirrors this, reading outward to the left from core_start - 1.

This class of sequences is closed under shifting, uniform raising, and
under every local rule application in this package, so all operations stay
exact. Instances are immutable; all operations return new objects.

Equality (`equals`, also wired to ==) is equality of the underlying
bi-infinite sequences, independent of which representation was used to
build them. `canonicalize` computes a unique minimal representative per
sequence; hashes are taken from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .errors import DomainError
from .heights import (
    Height,
    Infinity,
    MINUS_INF,
    PLUS_INF,
    ext_add,
    height_sort_key,
    is_finite,
)


def _check_height(v) -> Height:
    if isinstance(v, Infinity):
        return v
    if isinstance(v, bool) or not isinstance(v, int):
        raise DomainError(f"height must be an int or an infinity, got {v!r}")
    return v


@dataclass(frozen=True)
class Tail:
    """One side of a configuration: period values plus a per-period slope.

    values[j] is the height j columns past the core boundary within the
    first period copy; every later copy of a finite entry gains `slope`.
    Infinite entries repeat unchanged.
    """

    values: tuple
    slope: int = 0

    def __post_init__(self):
        if not self.values:
            raise DomainError("tail period must be non-empty")
        for v in self.values:
            _check_height(v)
        if isinstance(self.slope, bool) or not isinstance(self.slope, int):
            raise DomainError(f"tail slope must be an int, got {self.slope!r}")

    def at(self, j: int) -> Height:
        """Height j columns out from the boundary, j may be negative."""
        k, idx = divmod(j, len(self.values))
        v = self.values[idx]
        return v if isinstance(v, Infinity) else v + self.slope * k

    def effective_slope(self) -> int:
        """Slope, normalised to 0 when no period entry is finite."""
        if any(is_finite(v) for v in self.values):
            return self.slope
        return 0


ZERO_TAIL = Tail((0,), 0)


@dataclass(frozen=True, eq=False)
class Configuration:
    """An exact bi-infinite height sequence. See module docstring."""

    core_start: int
    core: tuple
    left: Tail = ZERO_TAIL
    right: Tail = ZERO_TAIL

    def __post_init__(self):
        for v in self.core:
            _check_height(v)

    # -- constructors ------------------------------------------------------

    @classmethod
    def finite(cls, deviations: dict) -> "Configuration":
        """Zero background with the given column -> height deviations."""
        devs = {i: _check_height(v) for i, v in deviations.items() if v != 0}
        if not devs:
            return cls(0, ())
        a, b = min(devs), max(devs)
        core = tuple(devs.get(i, 0) for i in range(a, b + 1))
        return cls(a, core)

    @classmethod
    def periodic(cls, values) -> "Configuration":
        """Fully periodic configuration with c_0.. anchored to `values`."""
        return cls.affine(values, 0)

    @classmethod
    def affine(cls, values, slope: int = 0) -> "Configuration":
        """Self-similar configuration: c_{i+p} = c_i + slope, anchored so
        that columns 0..p-1 carry `values`."""
        values = tuple(_check_height(v) for v in values)
        if not values:
            raise DomainError("period must be non-empty")
        p = len(values)

        def at(i):
            k, idx = divmod(i, p)
            v = values[idx]
            return v if isinstance(v, Infinity) else v + slope * k

        right = Tail(values, slope)
        left = Tail(tuple(at(-1 - j) for j in range(p)), -slope)
        return cls(0, (), left, right)

    @classmethod
    def general(cls, core_start: int, core, left, right) -> "Configuration":
        """Explicit core plus (values, slope) tails on each side."""
        left = left if isinstance(left, Tail) else Tail(tuple(left[0]), left[1])
        right = right if isinstance(right, Tail) else Tail(tuple(right[0]), right[1])
        return cls(core_start, tuple(core), left, right)

    # -- basic access ------------------------------------------------------

    @property
    def core_end(self) -> int:
        """Index of the last core column; core_start - 1 when core is empty."""
        return self.core_start + len(self.core) - 1

    def height(self, i: int) -> Height:
        a = self.core_start
        off = i - a
        if 0 <= off < len(self.core):
            return self.core[off]
        if i > self.core_end:
            return self.right.at(i - self.core_end - 1)
        return self.left.at(a - 1 - i)

    def heights(self, lo: int, hi: int) -> tuple:
        """Heights of columns lo..hi inclusive."""
        return tuple(self.height(i) for i in range(lo, hi + 1))

    # -- structural transforms --------------------------------------------

    def shift(self, k: int) -> "Configuration":
        """Translate the whole configuration k columns: r_i = c_{i-k}."""
        return Configuration(self.core_start + k, self.core, self.left, self.right)

    def raise_by(self, k: int) -> "Configuration":
        """Add k grains to every finite column."""
        if k == 0:
            return self
        lift = lambda vs: tuple(ext_add(v, k) for v in vs)
        return Configuration(
            self.core_start,
            lift(self.core),
            Tail(lift(self.left.values), self.left.slope),
            Tail(lift(self.right.values), self.right.slope),
        )

    # -- equality and hashing ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return equals(self, other)

    def __ne__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return not equals(self, other)

    def __hash__(self):
        return hash(self.canonical_key())

    def canonicalize(self) -> "Configuration":
        """The unique minimal representative of this sequence."""
        canon = getattr(self, "_canon", None)
        if canon is None:
            canon = _canonicalize(self)
            object.__setattr__(canon, "_canon", canon)
            object.__setattr__(self, "_canon", canon)
        return canon

    def canonical_key(self) -> tuple:
        c = self.canonicalize()
        return (
            c.core_start,
            c.core,
            c.left.values,
            c.left.slope,
            c.right.values,
            c.right.slope,
        )

    def __repr__(self):
        a, b = self.core_start, self.core_end
        return (
            f"<config core[{a}..{b}]={self.core!r} "
            f"left={self.left.values!r}{self.left.slope:+d} "
            f"right={self.right.values!r}{self.right.slope:+d}>"
        )


# -- sequence equality -----------------------------------------------------


def equals(x: Configuration, y: Configuration) -> bool:
    """True iff x and y denote the same bi-infinite sequence."""
    A = min(x.core_start, y.core_start)
    B = max(x.core_end, y.core_end)
    for i in range(A, B + 1):
        if x.height(i) != y.height(i):
            return False
    return _tails_agree(x, y, B, x.right, y.right, +1) and _tails_agree(
        x, y, A, x.left, y.left, -1
    )


def _tails_agree(x, y, edge, tx, ty, direction) -> bool:
    # Beyond `edge` both configurations are in pure tail territory. One
    # shared lcm window pins the values; matching per-window increments
    # then pin everything further out.
    L = lcm(len(tx.values), len(ty.values))
    saw_finite = False
    for j in range(1, L + 1):
        hx = x.height(edge + direction * j)
        if hx != y.height(edge + direction * j):
            return False
        saw_finite = saw_finite or is_finite(hx)
    if not saw_finite:
        return True
    return tx.effective_slope() * (L // len(tx.values)) == ty.effective_slope() * (
        L // len(ty.values)
    )


def first_difference(x: Configuration, y: Configuration):
    """Some column where x and y differ, or None. Deterministic."""
    A = min(x.core_start, y.core_start)
    B = max(x.core_end, y.core_end)
    DL = min(A, 0)
    DR = max(B, 0)
    Lr = lcm(len(x.right.values), len(y.right.values))
    Ll = lcm(len(x.left.values), len(y.left.values))
    for j in range(DL - Ll, DR + Lr + 1):
        if x.height(j) != y.height(j):
            return j
    # values agree on the lcm windows; only a slope mismatch can remain
    for direction, edge, L in ((+1, DR, Lr), (-1, DL, Ll)):
        for rho in range(1, L + 1):
            j0 = edge + direction * rho
            u, v = x.height(j0), y.height(j0)
            if not is_finite(u):
                continue
            su = _pattern_step(x, direction, Lr if direction > 0 else Ll)
            sv = _pattern_step(y, direction, Lr if direction > 0 else Ll)
            if su != sv:
                return j0 + direction * L
    return None


def _pattern_step(c, direction, L):
    t = c.right if direction > 0 else c.left
    return t.effective_slope() * (L // len(t.values))


# -- aggregate measures ----------------------------------------------------


def sum_grains(c: Configuration) -> int:
    """Total grain count of a configuration with zero background.

    Defined only for the finite class: both tails must be identically zero
    and no core column may be infinite.
    """
    cc = c.canonicalize()
    if cc.left != ZERO_TAIL or cc.right != ZERO_TAIL:
        raise DomainError("sum_grains needs a zero background on both sides")
    if any(isinstance(v, Infinity) for v in cc.core):
        raise DomainError("sum_grains is undefined with infinite columns")
    return sum(cc.core)


def is_finite_class(c: Configuration) -> bool:
    """True iff all but finitely many columns are zero."""
    cc = c.canonicalize()
    return cc.left == ZERO_TAIL and cc.right == ZERO_TAIL


def support_radius(c: Configuration) -> int:
    """max |i| over nonzero columns of a finite-class configuration
    (0 for the all-zero configuration)."""
    cc = c.canonicalize()
    if not is_finite_class(cc):
        raise DomainError("support_radius needs a finite-class configuration")
    k = 0
    for off, v in enumerate(cc.core):
        if v != 0:
            k = max(k, abs(cc.core_start + off))
    return k


def has_infinite_column(c: Configuration) -> bool:
    check = lambda vs: any(isinstance(v, Infinity) for v in vs)
    return check(c.core) or check(c.left.values) or check(c.right.values)


# -- canonicalization ------------------------------------------------------
#
# The canonical representative: both tail periods primitive (and slope 0
# whenever no period entry is finite), the core shrunk until neither edge
# column is predicted by its adjacent tail, and for empty-core
# configurations a canonical anchor: the minimal one when the sequence is
# not globally affine-periodic, otherwise anchor 0 (slope != 0) or the
# anchor in [0, p) whose period window is lexicographically least
# (slope 0; rotations of a primitive word are pairwise distinct, so this
# is unique).


def _back_extension(tail: Tail) -> Height:
    """The value the tail would predict one column before its first."""
    v = tail.values[-1]
    return v if isinstance(v, Infinity) else v - tail.slope


def _extend_back(tail: Tail) -> Tail:
    return Tail((_back_extension(tail),) + tail.values[:-1], tail.slope)


def _drop_front(tail: Tail) -> Tail:
    v = tail.values
    return Tail(v[1:] + (ext_add(v[0], tail.slope),), tail.slope)


def _reduce_tail(tail: Tail) -> Tail:
    values = tail.values
    slope = tail.effective_slope()
    p = len(values)
    for q in range(1, p):
        if p % q or (slope * q) % p:
            continue
        t = slope * q // p
        ok = True
        for j in range(p):
            expected = values[j] if isinstance(values[j], Infinity) else values[j] + t
            k, idx = divmod(j + q, p)
            v = values[idx]
            actual = v if isinstance(v, Infinity) else v + slope * k
            if actual != expected:
                ok = False
                break
        if ok:
            return Tail(values[:q], t)
    return Tail(values, slope)


def _fully_affine_rebased(anchor, left, right):
    """If the whole sequence satisfies x_{i+q} = x_i + s, return the
    canonically anchored representation, else None."""
    qR, sR = len(right.values), right.slope
    qL = len(left.values)
    if qR % qL or left.slope * (qR // qL) != -sR:
        return None
    probe = Configuration(anchor, (), left, right)
    for k in range(qR):
        lo = probe.height(anchor - qR + k)
        hi = probe.height(anchor + k)
        if hi != (lo if isinstance(lo, Infinity) else lo + sR):
            return None
    if sR != 0:
        base = 0
    else:
        window = lambda s: tuple(
            height_sort_key(probe.height(s + j)) for j in range(qR)
        )
        base = min(range(qR), key=window)
    vals = tuple(probe.height(base + j) for j in range(qR))
    back = tuple(probe.height(base - 1 - j) for j in range(qR))
    return Configuration(base, (), Tail(back, -sR), Tail(vals, sR))


def _canonicalize(c: Configuration) -> Configuration:
    left = _reduce_tail(c.left)
    right = _reduce_tail(c.right)
    core = list(c.core)
    start = c.core_start

    while core and core[-1] == _back_extension(right):
        right = _extend_back(right)
        core.pop()
    while core and core[0] == _back_extension(left):
        left = _extend_back(left)
        core.pop(0)
        start += 1
    if core:
        return Configuration(start, tuple(core), left, right)

    anchor = start
    rebased = _fully_affine_rebased(anchor, left, right)
    if rebased is not None:
        return rebased
    # not globally affine-periodic, so the set of valid anchors is bounded
    # below; slide to its minimum
    for _ in range(10**7):
        if left.values[0] != _back_extension(right):
            break
        right = _extend_back(right)
        left = _drop_front(left)
        anchor -= 1
    else:  # pragma: no cover
        raise AssertionError("canonical anchor slide failed to terminate")
    return Configuration(anchor, (), _reduce_tail(left), right)
