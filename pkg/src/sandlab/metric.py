"""Local difference vectors and the exact ultrametric distance.

The measuring device beta_l^m clips a height n to the window [-l, l]
around a reference height m: heights more than l above m read as +infinity,
more than l below as -infinity, and anything infinite stays infinite.
Difference vectors collect these readings for the 2l columns around a
position. Two configurations are at distance 2^-l where l is the least
gauge at which their difference vectors at position 0 disagree; equal
configurations are at distance 0.

Distances are kept exact: a Distance is a flag for zero plus the exponent
l, never a float. The exponent can be astronomically large (it grows with
the heights involved), which is why `distance` locates the optimal column
in closed form instead of scanning gauges one by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .config import Configuration, equals
from .errors import DomainError
from .heights import Height, Infinity, MINUS_INF, PLUS_INF, is_finite


def beta(l: int, m: int, n: Height) -> Height:
    """Reading of height n by a size-l device calibrated at height m."""
    if l < 0:
        raise DomainError("device size must be >= 0")
    if isinstance(n, Infinity):
        return n
    if n > m + l:
        return PLUS_INF
    if n < m - l:
        return MINUS_INF
    return n - m


@dataclass(frozen=True)
class DifferenceVector:
    """The 2l beta-readings around one position (just (c_i,) when l = 0).

    `reference` is the calibration height m: the centre column's height
    when finite, else 0.
    """

    entries: tuple
    size: int
    reference: int


def diff_vector(c: Configuration, i: int, l: int) -> DifferenceVector:
    """Difference vector of c at position i with gauge l."""
    if l < 0:
        raise DomainError("gauge must be >= 0")
    centre = c.height(i)
    m = 0 if isinstance(centre, Infinity) else centre
    if l == 0:
        return DifferenceVector((centre,), 0, m)
    entries = tuple(
        beta(l, m, c.height(i + off))
        for off in (*range(-l, 0), *range(1, l + 1))
    )
    return DifferenceVector(entries, l, m)


@dataclass(frozen=True, order=False)
class Distance:
    """Exact value of the configuration distance: 0 or 2^-exponent."""

    is_zero: bool
    exponent: int = 0

    @classmethod
    def zero(cls) -> "Distance":
        return cls(True, 0)

    @classmethod
    def dyadic(cls, exponent: int) -> "Distance":
        if exponent < 0:
            raise DomainError("distance exponent must be >= 0")
        return cls(False, exponent)

    def _key(self):
        # larger exponent = smaller value; zero smallest of all
        return float("-inf") if self.is_zero else -self.exponent

    def __lt__(self, other):
        return self._key() < other._key()

    def __le__(self, other):
        return self._key() <= other._key()

    def __gt__(self, other):
        return self._key() > other._key()

    def __ge__(self, other):
        return self._key() >= other._key()

    def as_float(self) -> float:
        """Approximate float value (0.0 on underflow)."""
        if self.is_zero or self.exponent > 1074:
            return 0.0
        return 2.0 ** -self.exponent

    def __str__(self):
        return "0" if self.is_zero else f"2^-{self.exponent}"


def _separating_gauge(u: Height, v: Height, m: int):
    """Least l >= 1 at which beta_l^m tells u and v apart (None if u == v)."""
    if u == v:
        return None
    u_inf = isinstance(u, Infinity)
    v_inf = isinstance(v, Infinity)
    if u_inf and v_inf:
        return 1
    if u_inf or v_inf:
        inf, w = (u, v) if u_inf else (v, u)
        if inf is PLUS_INF:
            return max(1, w - m)
        return max(1, m - w)
    lo, hi = (u, v) if u < v else (v, u)
    if lo > m:
        return max(1, lo - m)
    if hi < m:
        return max(1, m - hi)
    return 1


def distance(x: Configuration, y: Configuration) -> Distance:
    """Exact distance 2^-l, where l is the least gauge whose difference
    vectors at position 0 disagree."""
    x0, y0 = x.height(0), y.height(0)
    if x0 != y0:
        return Distance.dyadic(0)
    if equals(x, y):
        return Distance.zero()
    m = 0 if isinstance(x0, Infinity) else x0

    best = None
    # Window wide enough that everything beyond it is pure tail on either
    # side of zero, aligned for both configurations.
    A = min(x.core_start, y.core_start)
    B = max(x.core_end, y.core_end)
    Lr = lcm(len(x.right.values), len(y.right.values))
    Ll = lcm(len(x.left.values), len(y.left.values))
    DR = max(B, 0) + Lr
    DL = min(A, 0) - Ll
    for j in range(DL, DR + 1):
        if j == 0:
            continue
        g = _separating_gauge(x.height(j), y.height(j), m)
        if g is not None:
            cand = max(abs(j), g)
            if best is None or cand < best:
                best = cand

    # Beyond the window each residue class is an affine progression per
    # configuration; minimise per class in closed form.
    sx = x.right.effective_slope() * (Lr // len(x.right.values))
    sy = y.right.effective_slope() * (Lr // len(y.right.values))
    for rho in range(Lr):
        j0 = DR + 1 + rho
        cand = _class_minimum(j0, Lr, x.height(j0), sx, y.height(j0), sy, m)
        if cand is not None and (best is None or cand < best):
            best = cand
    tx = x.left.effective_slope() * (Ll // len(x.left.values))
    ty = y.left.effective_slope() * (Ll // len(y.left.values))
    for rho in range(Ll):
        j0 = DL - 1 - rho
        cand = _class_minimum(-j0, Ll, x.height(j0), tx, y.height(j0), ty, m)
        if cand is not None and (best is None or cand < best):
            best = cand

    if best is None:  # pragma: no cover - unequal configurations always differ
        raise AssertionError("no differing column found for unequal configurations")
    return Distance.dyadic(best)


def _class_minimum(a0, L, u0, su, v0, sv, m):
    """Minimum of max(a0 + k*L, separating gauge at column k) over k >= 0
    for one residue class of tail columns.

    The column at step k sits at absolute position a0 + k*L (a0 >= 1) and
    carries heights u(k) / v(k): constant when infinite, otherwise affine
    with the given per-step increments. Returns None when the class never
    separates the configurations.
    """
    u_inf = isinstance(u0, Infinity)
    v_inf = isinstance(v0, Infinity)
    if u_inf and v_inf:
        return None if u0 is v0 else max(a0, 1)
    if not u_inf and not v_inf and u0 == v0 and su == sv:
        return None

    # Candidate steps: small k, plus integer neighbourhoods of every
    # breakpoint of the piecewise-affine gauge term and of its crossings
    # with the |column| term. Evaluating the true function at all of them
    # and taking the least value is exact.
    cands = {0, 1, 2}

    def add_root(num, den):
        if den == 0:
            return
        q = num // den
        for k in (q - 1, q, q + 1, q + 2):
            if k >= 0:
                cands.add(k)

    forms = []  # affine expressions c + d*k whose sign/clamp changes matter
    if not u_inf:
        forms.append((u0 - m, su))
        forms.append((m - u0, -su))
    if not v_inf:
        forms.append((v0 - m, sv))
        forms.append((m - v0, -sv))
    if not u_inf and not v_inf:
        add_root(v0 - u0, su - sv)  # where u and v coincide
    for c0, d in forms:
        add_root(-c0, d)  # sign change of the form
        add_root(1 - c0, d)  # clamp boundary max(1, form)
        add_root(c0 - a0, L - d)  # crossing with the |column| arm

    best = None
    for k in sorted(cands):
        u = u0 if u_inf else u0 + su * k
        v = v0 if v_inf else v0 + sv * k
        g = _separating_gauge(u, v, m)
        if g is None:
            continue
        val = max(a0 + k * L, g)
        if best is None or val < best:
            best = val
    return best


def naive_distance_exponent(x: Configuration, y: Configuration, max_gauge: int):
    """Scan gauges 0..max_gauge for the least separating one (None if all
    agree). Exponential-value-blind reference used to cross-check
    `distance`; only viable for small separations."""
    for l in range(max_gauge + 1):
        if diff_vector(x, 0, l) != diff_vector(y, 0, l):
            return l
    return None
