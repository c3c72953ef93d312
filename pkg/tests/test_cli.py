"""End-to-end tests for the command-line interface.

The CLI is exercised through main() with argv lists; outputs are checked
against golden strings where the format is load-bearing, and reports must
be byte-identical across repeated runs.
"""

import json

import pytest

from sandlab import cli, witnesses
from sandlab.config import Configuration, equals
from sandlab.formats import parse_config_file


def run_cli(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def cfg(name):
    return witnesses.path_of(name + ".cfg")


def test_zoo_emits_parseable_rule(capsys):
    code, out, err = run_cli(["zoo", "S"], capsys)
    assert code == 0
    assert out.startswith("sand-rule v1\n")
    assert "rule: (+inf, -inf) -> 0" in out


def test_simulate_collision_to_flat(capsys):
    code, out, err = run_cli(
        ["simulate", "--rule", "S", "--config", cfg("sandpile-collision-b"),
         "--steps", "1"],
        capsys,
    )
    assert code == 0
    c = parse_config_file(out)
    assert equals(c, Configuration.finite({}))


def test_simulate_render_ascii_flat_row(capsys):
    code, out, err = run_cli(
        ["simulate", "--rule", "S", "--config", cfg("sandpile-collision-b"),
         "--steps", "1", "--render", "ascii"],
        capsys,
    )
    assert code == 0
    lines = out.splitlines()
    ground = [ln for ln in lines if set(ln) == {"-"}]
    assert len(ground) == 1
    assert all("#" not in ln and "^" not in ln and "v" not in ln for ln in lines)


def test_simulate_accepts_rule_file(tmp_path, capsys):
    rule_path = tmp_path / "mine.rule"
    rule_path.write_text(witnesses._read("S.rule"))
    code, out, err = run_cli(
        ["simulate", "--rule", str(rule_path), "--config",
         cfg("two-grain-column"), "--steps", "1"],
        capsys,
    )
    assert code == 0
    assert equals(parse_config_file(out), Configuration.finite({0: 1, 1: 1}))


def test_render_window_and_dump(capsys):
    code, out, err = run_cli(
        ["render", "--config", cfg("step-two-level"), "--window", "-2", "3",
         "--dump"],
        capsys,
    )
    assert code == 0
    assert "dump v1" in out
    assert "window: -2 3" in out
    assert "heights: 0 0 2 2 2 2" in out


def test_distance_output(capsys):
    code, out, err = run_cli(
        ["distance", cfg("sandpile-collision-a"), cfg("sandpile-collision-b")],
        capsys,
    )
    assert code == 0
    assert out.strip() == "2^-0"
    code, out, err = run_cli(
        ["distance", cfg("sandpile-collision-a"), cfg("sandpile-collision-a")],
        capsys,
    )
    assert out.strip() == "0"


def test_preimage_subcommand(capsys):
    code, out, err = run_cli(
        ["preimage", "--config", cfg("step-two-level")], capsys
    )
    assert code == 0
    got = parse_config_file(out)
    want = witnesses.load_config("step-preimage")
    assert equals(got, want)


def test_preimage_rejects_other_rules(capsys):
    code, out, err = run_cli(
        ["preimage", "--automaton", "S", "--config", cfg("step-two-level")],
        capsys,
    )
    assert code == 1
    assert "left" in err


def test_crown_outputs_two_configs(capsys):
    code, out, err = run_cli(
        ["crown", "--rule", "S", "--config-a", cfg("sandpile-collision-a"),
         "--config-b", cfg("sandpile-collision-b")],
        capsys,
    )
    assert code == 0
    blocks = out.split("# crown b\n")
    assert len(blocks) == 2
    d2 = parse_config_file(blocks[1])
    assert equals(d2, witnesses.load_config("crown-pair-b"))


def test_splice_subcommand(capsys):
    code, out, err = run_cli(
        ["splice", "--rule", "S", "--config", cfg("sandpile-collision-b"),
         "--target", cfg("sandpile-collision-a"), "--period", "1"],
        capsys,
    )
    assert code == 0
    assert equals(parse_config_file(out), Configuration.finite({}))


def test_check_injective_witness_exit_code(capsys):
    code, out, err = run_cli(
        ["check-injective", "--rule", "S", "--class", "F", "--window", "1",
         "--height", "1"],
        capsys,
    )
    assert code == 3
    assert "verdict: WITNESS_FOUND" in out
    assert "witness a:" in out and "witness b:" in out


def test_check_injective_exhausted_exit_code(capsys):
    code, out, err = run_cli(
        ["check-injective", "--rule", "Sr", "--class", "F", "--window", "2",
         "--height", "2"],
        capsys,
    )
    assert code == 0
    assert "verdict: EXHAUSTED_NO_WITNESS" in out


def test_check_injective_periodic_needs_period(capsys):
    code, out, err = run_cli(
        ["check-injective", "--rule", "S", "--class", "P", "--height", "1"],
        capsys,
    )
    assert code == 1


def test_check_surjective_exit_codes(capsys):
    code, out, err = run_cli(
        ["check-surjective", "--rule", "Sr", "--target",
         cfg("two-grain-column"), "--class", "F", "--window", "3",
         "--height", "4"],
        capsys,
    )
    assert code == 3  # no pre-image found is the bad outcome here
    code, out, err = run_cli(
        ["check-surjective", "--rule", "S", "--target",
         cfg("two-grain-column"), "--class", "F", "--window", "2",
         "--height", "3"],
        capsys,
    )
    assert code == 0
    assert "verdict: WITNESS_FOUND" in out


def test_check_nilpotent_exit_codes(capsys):
    code, out, err = run_cli(
        ["check-nilpotent", "--rule", "S", "--config",
         cfg("sandpile-collision-b"), "--steps", "5"],
        capsys,
    )
    assert code == 0
    assert "verdict: WITNESS_FOUND" in out
    code, out, err = run_cli(
        ["check-nilpotent", "--rule", "S", "--config",
         cfg("two-grain-column"), "--steps", "5"],
        capsys,
    )
    assert code == 4
    assert "verdict: BOUND_EXCEEDED" in out


def test_verify_witness_exit_codes(capsys):
    code, out, err = run_cli(
        ["verify-witness", "--rule", "S", "--config-a",
         cfg("sandpile-collision-a"), "--config-b",
         cfg("sandpile-collision-b")],
        capsys,
    )
    assert code == 0
    assert "valid pair: True" in out
    code, out, err = run_cli(
        ["verify-witness", "--rule", "Sr", "--config-a",
         cfg("sandpile-collision-a"), "--config-b",
         cfg("sandpile-collision-b")],
        capsys,
    )
    assert code == 3


def test_verify_inverse_exit_codes(capsys):
    code, out, err = run_cli(
        ["verify-inverse", "--rule-outer", "S", "--rule-inner", "Sr",
         "--samples", "100", "--seed", "1"],
        capsys,
    )
    assert code == 0
    code, out, err = run_cli(
        ["verify-inverse", "--rule-outer", "Sr", "--rule-inner", "S",
         "--samples", "100", "--seed", "1"],
        capsys,
    )
    assert code == 3
    assert "verdict: WITNESS_FOUND" in out


def test_json_report_is_machine_readable(capsys):
    code, out, err = run_cli(
        ["check-injective", "--rule", "S", "--class", "F", "--window", "1",
         "--height", "1", "--json"],
        capsys,
    )
    assert code == 3
    payload = json.loads(out)
    assert payload["report"]["verdict"] == "WITNESS_FOUND"
    assert payload["manifest"]["subcommand"] == "check-injective"
    assert len(payload["witnesses"]) == 2
    for block in payload["witnesses"]:
        parse_config_file(block)


def test_reports_are_byte_identical(capsys):
    argv = ["check-injective", "--rule", "S", "--class", "F", "--window", "1",
            "--height", "1", "--json"]
    _, out1, _ = run_cli(argv, capsys)
    _, out2, _ = run_cli(argv, capsys)
    assert out1 == out2


def test_manifest_echoed_in_report(capsys):
    code, out, err = run_cli(
        ["check-nilpotent", "--rule", "S", "--config",
         cfg("two-grain-column"), "--steps", "3"],
        capsys,
    )
    assert "subcommand: check-nilpotent" in out
    assert "steps: 3" in out
    assert "rule: S" in out


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text("not a config\n")
    code, out, err = run_cli(["render", "--config", str(bad)], capsys)
    assert code == 2
    assert err.startswith("error:")


def test_missing_file_exit_code(capsys):
    code, out, err = run_cli(["render", "--config", "no-such-file.cfg"], capsys)
    assert code == 2


def test_unknown_rule_name_exit_code(capsys):
    code, out, err = run_cli(
        ["simulate", "--rule", "nope", "--config",
         cfg("sandpile-collision-a"), "--steps", "1"],
        capsys,
    )
    assert code == 2
    assert "no rule file" in err


def test_core_bound_exit_code(capsys):
    code, out, err = run_cli(
        ["simulate", "--rule", "S", "--config", cfg("two-grain-column"),
         "--steps", "60", "--max-core", "1"],
        capsys,
    )
    assert code == 4
    assert "error:" in err
