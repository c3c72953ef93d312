"""Versioned text formats for rules and configurations, plus rendering.

Both formats are line-oriented, diff-friendly, and round-trip exactly:
emitting a parsed file and re-parsing it reproduces the same structure.

Rule files:

    sand-rule v1
    radius: 1
    default: 0
    rule: (+inf, -inf) -> 0
    rule: (+inf, *) -> 1

Atoms are integers, `+inf`, `-inf`, the wildcard `*`, and the sign
classes `pos` / `neg`. Patterns bind the readings of columns
(i-r, ..., i-1, i+1, ..., i+r) in order; the first matching rule wins.

Configuration files:

    sand-config v1
    kind: finite          | periodic | affine | general
    at 0 2                # finite: nonzero columns
    period: 0 2           # periodic/affine: values at columns 0..p-1
    slope: 1              # affine only
    core-start: -1        # general: explicit core plus two tails
    core: 0 5 0
    left-period: 0
    left-slope: 0
    right-period: 3 1
    right-slope: 0

`#` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

from .automaton import NEG, POS, SandAutomaton, WILDCARD, validate_rule
from .config import Configuration, Tail, equals
from .errors import ParseError
from .heights import Infinity, MINUS_INF, PLUS_INF

RULE_HEADER = "sand-rule v1"
CONFIG_HEADER = "sand-config v1"
DUMP_HEADER = "dump v1"


def _strip_lines(text):
    """(line_number, content) for every meaningful line."""
    out = []
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((num, line))
    return out


def _parse_height(token, line):
    if token == "+inf":
        return PLUS_INF
    if token == "-inf":
        return MINUS_INF
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"bad height {token!r}", line)


def format_height(value) -> str:
    if value is PLUS_INF:
        return "+inf"
    if value is MINUS_INF:
        return "-inf"
    return str(value)


# -- rule files ---------------------------------------------------------------

_ATOM_MARKERS = {"*": WILDCARD, "pos": POS, "neg": NEG}


def _parse_atom(token, line):
    if token in _ATOM_MARKERS:
        return _ATOM_MARKERS[token]
    return _parse_height(token, line)


def _format_atom(atom) -> str:
    if atom is WILDCARD:
        return "*"
    if atom is POS:
        return "pos"
    if atom is NEG:
        return "neg"
    return format_height(atom)


def parse_rule_file(text: str) -> SandAutomaton:
    lines = _strip_lines(text)
    if not lines or lines[0][1] != RULE_HEADER:
        raise ParseError(f"missing header {RULE_HEADER!r}", lines[0][0] if lines else 1)
    radius = None
    default = 0
    raw_rules = []
    for num, line in lines[1:]:
        if line.startswith("radius:"):
            radius = _parse_int(line.split(":", 1)[1], num)
        elif line.startswith("default:"):
            default = _parse_int(line.split(":", 1)[1], num)
        elif line.startswith("rule:"):
            raw_rules.append((num, line[len("rule:"):].strip()))
        else:
            raise ParseError(f"unrecognised line {line!r}", num)
    if radius is None:
        raise ParseError("missing 'radius:' line")
    rules = []
    for num, body in raw_rules:
        if "->" not in body:
            raise ParseError("rule needs '(pattern) -> delta'", num)
        pat_text, delta_text = body.rsplit("->", 1)
        pat_text = pat_text.strip()
        if not (pat_text.startswith("(") and pat_text.endswith(")")):
            raise ParseError("pattern must be parenthesised", num)
        tokens = [t.strip() for t in pat_text[1:-1].split(",") if t.strip()]
        if len(tokens) != 2 * radius:
            raise ParseError(
                f"pattern has {len(tokens)} atoms, expected {2 * radius}", num
            )
        pattern = tuple(_parse_atom(t, num) for t in tokens)
        rules.append((pattern, _parse_int(delta_text, num)))
    try:
        return validate_rule(radius, rules, default)
    except Exception as exc:
        raise ParseError(str(exc))


def _parse_int(token, line):
    token = token.strip()
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"bad integer {token!r}", line)


def emit_rule_file(automaton: SandAutomaton) -> str:
    out = [RULE_HEADER, f"radius: {automaton.radius}", f"default: {automaton.default_delta}"]
    for rule in automaton.rules:
        atoms = ", ".join(_format_atom(a) for a in rule.pattern)
        out.append(f"rule: ({atoms}) -> {rule.delta}")
    return "\n".join(out) + "\n"


# -- configuration files -------------------------------------------------------


def parse_config_file(text: str) -> Configuration:
    lines = _strip_lines(text)
    if not lines or lines[0][1] != CONFIG_HEADER:
        raise ParseError(
            f"missing header {CONFIG_HEADER!r}", lines[0][0] if lines else 1
        )
    fields = {}
    ats = []
    kind = None
    for num, line in lines[1:]:
        if line.startswith("at "):
            parts = line.split()
            if len(parts) != 3:
                raise ParseError("'at' needs a column and a height", num)
            ats.append(
                (_parse_int(parts[1], num), _parse_height(parts[2], num))
            )
        elif ":" in line:
            key, value = line.split(":", 1)
            key = key.strip()
            if key == "kind":
                kind = value.strip()
            else:
                fields[key] = (num, value.strip())
        else:
            raise ParseError(f"unrecognised line {line!r}", num)
    if kind is None:
        raise ParseError("missing 'kind:' line")

    def heights(key, required=True):
        if key not in fields:
            if required:
                raise ParseError(f"missing '{key}:' line")
            return None
        num, value = fields[key]
        return tuple(_parse_height(t, num) for t in value.split())

    def integer(key, default=None):
        if key not in fields:
            if default is None:
                raise ParseError(f"missing '{key}:' line")
            return default
        num, value = fields[key]
        return _parse_int(value, num)

    if kind == "finite":
        devs = {}
        for col, value in ats:
            devs[col] = value
        return Configuration.finite(devs)
    if kind == "periodic":
        return Configuration.periodic(heights("period"))
    if kind == "affine":
        return Configuration.affine(heights("period"), integer("slope"))
    if kind == "general":
        core = heights("core", required=False)
        return Configuration.general(
            integer("core-start"),
            core if core is not None else (),
            (heights("left-period"), integer("left-slope", 0)),
            (heights("right-period"), integer("right-slope", 0)),
        )
    raise ParseError(f"unknown kind {kind!r}")


def emit_config_file(c: Configuration) -> str:
    """Canonical text form: the simplest kind that reproduces the sequence."""
    cc = c.canonicalize()
    out = [CONFIG_HEADER]
    zero = Tail((0,), 0)
    if cc.left == zero and cc.right == zero:
        out.append("kind: finite")
        for off, v in enumerate(cc.core):
            if v != 0:
                out.append(f"at {cc.core_start + off} {format_height(v)}")
        return "\n".join(out) + "\n"
    if not cc.core:
        # globally affine-periodic sequences can be anchored anywhere, so
        # read one period off columns 0..q-1 and emit the friendly kind
        q = len(cc.right.values)
        anchored = cc.heights(0, q - 1)
        probe = Configuration.affine(anchored, cc.right.slope)
        if equals(probe, cc):
            vals = " ".join(format_height(v) for v in anchored)
            if cc.right.slope == 0:
                out.append("kind: periodic")
                out.append(f"period: {vals}")
            else:
                out.append("kind: affine")
                out.append(f"period: {vals}")
                out.append(f"slope: {cc.right.slope}")
            return "\n".join(out) + "\n"
    out.append("kind: general")
    out.append(f"core-start: {cc.core_start}")
    out.append(("core: " + " ".join(format_height(v) for v in cc.core)).rstrip())
    out.append("left-period: " + " ".join(format_height(v) for v in cc.left.values))
    out.append(f"left-slope: {cc.left.slope}")
    out.append(
        "right-period: " + " ".join(format_height(v) for v in cc.right.values)
    )
    out.append(f"right-slope: {cc.right.slope}")
    return "\n".join(out) + "\n"


# -- rendering -----------------------------------------------------------------


def render_ascii(c: Configuration, lo: int, hi: int) -> str:
    """Draw columns lo..hi as grain stacks.

    Positive heights pile `#` above the ground line, negative ones hang
    below it, `^` and `v` mark infinite columns, and a marker row flags
    column 0 when it is inside the window.
    """
    if lo > hi:
        raise ParseError("empty render window")
    heights = [c.height(i) for i in range(lo, hi + 1)]
    finite = [h for h in heights if not isinstance(h, Infinity)]
    top = max([1] + [h for h in finite if h > 0])
    bottom = min([-1] + [h for h in finite if h < 0])

    def cell(h, level):
        if isinstance(h, Infinity):
            if h is PLUS_INF:
                return "^" if level > 0 else " "
            return "v" if level < 0 else " "
        if level > 0:
            return "#" if h >= level else " "
        return "#" if h <= level else " "

    rows = []
    for level in range(top, 0, -1):
        rows.append("".join(cell(h, level) for h in heights))
    rows.append("-" * len(heights))
    for level in range(-1, bottom - 1, -1):
        rows.append("".join(cell(h, level) for h in heights))
    if lo <= 0 <= hi:
        rows.append(" " * (0 - lo) + "0")
    return "\n".join(rows) + "\n"


def emit_dump(c: Configuration, lo: int, hi: int) -> str:
    """Lossless companion block for a rendered window."""
    values = " ".join(format_height(c.height(i)) for i in range(lo, hi + 1))
    return f"{DUMP_HEADER}\nwindow: {lo} {hi}\nheights: {values}\n"


def parse_dump(text: str):
    """(lo, hi, heights) from an emit_dump block."""
    lines = _strip_lines(text)
    if not lines or lines[0][1] != DUMP_HEADER:
        raise ParseError(f"missing header {DUMP_HEADER!r}", lines[0][0] if lines else 1)
    window = None
    heights = None
    for num, line in lines[1:]:
        if line.startswith("window:"):
            parts = line.split(":", 1)[1].split()
            if len(parts) != 2:
                raise ParseError("window needs two bounds", num)
            window = (_parse_int(parts[0], num), _parse_int(parts[1], num))
        elif line.startswith("heights:"):
            heights = tuple(
                _parse_height(t, num) for t in line.split(":", 1)[1].split()
            )
        else:
            raise ParseError(f"unrecognised line {line!r}", num)
    if window is None or heights is None:
        raise ParseError("dump needs 'window:' and 'heights:' lines")
    lo, hi = window
    if len(heights) != hi - lo + 1:
        raise ParseError(
            f"expected {hi - lo + 1} heights for window {lo}..{hi}, "
            f"got {len(heights)}"
        )
    return lo, hi, heights
