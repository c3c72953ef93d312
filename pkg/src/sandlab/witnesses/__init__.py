"""Bundled corpus of known rule files and witness configurations.

Each entry is a plain text file in the package formats, so the corpus
doubles as golden input for the parser round-trip tests. Load them with
load_config/load_rule by base name.
"""

from importlib import resources

from ..automaton import SandAutomaton
from ..config import Configuration
from ..errors import DomainError
from ..formats import parse_config_file, parse_rule_file


def _read(name: str) -> str:
    ref = resources.files(__package__).joinpath(name)
    if not ref.is_file():
        raise DomainError(f"no bundled file {name!r}; see available()")
    return ref.read_text()


def available() -> dict:
    """Map of bundled file names to their kind ('rule' or 'config')."""
    out = {}
    for entry in resources.files(__package__).iterdir():
        if entry.name.endswith(".rule"):
            out[entry.name] = "rule"
        elif entry.name.endswith(".cfg"):
            out[entry.name] = "config"
    return dict(sorted(out.items()))


def load_rule(name: str) -> SandAutomaton:
    if not name.endswith(".rule"):
        name += ".rule"
    return parse_rule_file(_read(name))


def load_config(name: str) -> Configuration:
    if not name.endswith(".cfg"):
        name += ".cfg"
    return parse_config_file(_read(name))


def path_of(name: str) -> str:
    """Filesystem path of a bundled file, for handing to the CLI."""
    ref = resources.files(__package__).joinpath(name)
    if not ref.is_file():
        raise DomainError(f"no bundled file {name!r}; see available()")
    return str(ref)
