"""
This file contains the tests for the app.py file.
"""

# pylint: disable=redefined-outer-name unused-argument unused-import

import json

import pytest

from app import (
    EXIT_ACCEPT,
    EXIT_INPUT_ERROR,
    EXIT_REJECT,
    CommandConfig,
    main,
    parse_label_argument,
)

from .fixtures import claw_file, p4_file


def test_search_text(p4_file: str, capsys) -> None:
    """The ordering is printed space-separated."""
    assert main(["search", "--graph", p4_file, "--order", "dfs"]) == EXIT_ACCEPT
    assert capsys.readouterr().out == "1 2 4 3\n"


def test_search_inline_tau(p4_file: str, capsys) -> None:
    """The null order returns its tie-break."""
    code = main(["search", "--graph", p4_file, "--order", "null", "--tau", "4 3 2 1"])
    assert code == EXIT_ACCEPT
    assert capsys.readouterr().out == "4 3 2 1\n"


def test_search_trace_text(p4_file: str, capsys) -> None:
    """Each step lists the eligible vertices and the labels."""
    main(["search", "--graph", p4_file, "--order", "dfs", "--trace"])
    out = capsys.readouterr().out
    assert "step 1: eligible 1 2 3 4 -> 1" in out
    assert "step 3: eligible 4 -> 4" in out
    assert "  4: {2}" in out
    assert out.endswith("1 2 4 3\n")


def test_search_json_trace(p4_file: str, capsys) -> None:
    """JSON output carries the engine and the trace."""
    main(
        ["search", "--graph", p4_file, "--order", "lbfs", "--trace", "--format", "json"]
    )
    data = json.loads(capsys.readouterr().out)
    assert data["ordering"] == [1, 2, 3, 4]
    assert data["engine"] == "ref"
    assert len(data["trace"]) == 4
    assert data["trace"][2]["labels"] == {"3": [1], "4": [2]}


def test_search_fallback(p4_file: str, capsys) -> None:
    """The fast engine on gen falls back and says why."""
    args = ["search", "--graph", p4_file, "--order", "gen", "--engine", "fast"]
    main(args + ["--format", "json"])
    data = json.loads(capsys.readouterr().out)
    assert data["engine"] == "ref"
    assert "incomparable" in data["fallback"]


def test_certify_reject_json(p4_file: str, capsys) -> None:
    """Rejections exit with 1 and print the witness."""
    args = ["certify", "--graph", p4_file, "--order", "bfs", "--ordering", "1 2 4 3"]
    assert main(args + ["--format", "json"]) == EXIT_REJECT
    data = json.loads(capsys.readouterr().out)
    assert data["accepted"] is False
    assert data["rule"] == "bfs.triple"
    assert data["witness"] == {"vertices": [1, 4, 3], "positions": [1, 3, 4]}


def test_certify_reject_text(p4_file: str, capsys) -> None:
    """The text form names the rule and the witness positions."""
    args = ["certify", "--graph", p4_file, "--order", "bfs", "--ordering", "1 2 4 3"]
    assert main(args) == EXIT_REJECT
    out = capsys.readouterr().out
    assert "rejected: bfs.triple" in out
    assert "witness: 1@1 4@3 3@4" in out


def test_certify_accept_from_file(p4_file: str, tmp_path, capsys) -> None:
    """Orderings can be read from a file."""
    ordering = tmp_path / "sigma.txt"
    ordering.write_text("1 2 4 3\n", encoding="ascii")
    args = ["certify", "--graph", p4_file, "--order", "ldfs"]
    args += ["--ordering", str(ordering)]
    assert main(args) == EXIT_ACCEPT
    assert capsys.readouterr().out.startswith("accepted")


def test_certify_full_table(p4_file: str, capsys) -> None:
    """The pattern table is attached on request."""
    args = ["certify", "--graph", p4_file, "--order", "lbfs", "--ordering", "identity"]
    assert main(args + ["--full-table", "--format", "json"]) == EXIT_ACCEPT
    data = json.loads(capsys.readouterr().out)
    assert len(data["detail"]["table"]) == 6


@pytest.mark.parametrize(
    "args, message",
    [
        (["certify", "--order", "bfs", "--ordering", "identity"], "requires --graph"),
        (["search", "--order", "bfs"], "requires --graph"),
        (["witness", "--A", "1"], "requires --order"),
        (["hierarchy", "--max-label", "7"], "max_label"),
        (["multisweep", "--order", "lbfs"], "exactly one of"),
    ],
)
def test_configuration_errors(args, message: str, capsys) -> None:
    """Invalid configurations exit with 2 before any work."""
    assert main(args) == EXIT_INPUT_ERROR
    err = capsys.readouterr().err
    assert err.startswith("error:")
    assert message in err


def test_unknown_order(p4_file: str, capsys) -> None:
    """The valid names are listed."""
    assert main(["search", "--graph", p4_file, "--order", "xyz"]) == EXIT_INPUT_ERROR
    assert "lbfs" in capsys.readouterr().err


def test_bad_inputs(p4_file: str, tmp_path, capsys) -> None:
    """Parse errors and missing files are input errors."""
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n1 4\n", encoding="ascii")
    assert main(["search", "--graph", str(bad), "--order", "bfs"]) == EXIT_INPUT_ERROR
    assert "line 2" in capsys.readouterr().err
    missing = str(tmp_path / "absent.txt")
    assert main(["search", "--graph", missing, "--order", "bfs"]) == EXIT_INPUT_ERROR
    args = ["certify", "--graph", p4_file, "--order", "bfs", "--ordering", "1 1 2 3"]
    assert main(args) == EXIT_INPUT_ERROR
    assert "duplicate 1" in capsys.readouterr().err


def test_multisweep_generated(capsys) -> None:
    """One JSON line per sweep, then the certificate."""
    args = ["multisweep", "--generate", "unit-interval", "--n", "20", "--seed", "1"]
    code = main(args + ["--check", "unit-interval", "--format", "json"])
    assert code == EXIT_ACCEPT
    lines = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [line["sweep"] for line in lines[:4]] == [0, 1, 2, 3]
    assert lines[0]["ordering"] == list(range(1, 21))
    assert lines[4]["accepted"] is True


def test_multisweep_claw(claw_file: str, capsys) -> None:
    """The claw is not unit interval."""
    args = ["multisweep", "--graph", claw_file, "--check", "unit-interval"]
    assert main(args) == EXIT_REJECT
    out = capsys.readouterr().out
    assert "sigma_0: 1 2 3 4" in out
    assert "rejected: unit-interval.triple" in out


def test_multisweep_seed_ordering(claw_file: str, capsys) -> None:
    """An explicit sigma_0 and no check."""
    args = ["multisweep", "--graph", claw_file, "--sweeps", "1"]
    assert main(args + ["--seed-ordering", "2 3 4 1"]) == EXIT_ACCEPT
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "sigma_0: 2 3 4 1"
    assert len(out) == 2


def test_hierarchy_json(capsys) -> None:
    """The report and the layered fixtures in one document."""
    args = ["hierarchy", "--max-label", "3", "--corpus-max-n", "3", "--format", "json"]
    assert main(args) == EXIT_ACCEPT
    data = json.loads(capsys.readouterr().out)
    assert data["hierarchy"]["hasse_matches"] is True
    assert data["hierarchy"]["corpus_size"] == 7
    assert data["layered"]["contradiction"] is True


def test_hierarchy_text(capsys) -> None:
    """The text report names the diagram and the layered verdict."""
    assert main(["hierarchy", "--max-label", "3", "--corpus-max-n", "0"]) == EXIT_ACCEPT
    out = capsys.readouterr().out
    assert "  gen -> bfs" in out
    assert "matches expected diagram: yes" in out
    assert "no label order reproduces layered search: yes" in out


def test_witness_stdout(capsys) -> None:
    """Graph then ordering, in the input formats."""
    assert main(["witness", "--order", "gen", "--A", "1", "--B", "2"]) == EXIT_ACCEPT
    assert capsys.readouterr().out == "4 3\n1 2\n1 3\n2 4\n1 2 3 4\n"


def test_witness_files(tmp_path, capsys) -> None:
    """--graph-out and --ordering-out write files instead."""
    graph_out = tmp_path / "w.txt"
    ordering_out = tmp_path / "w.ord"
    args = ["witness", "--order", "dfs", "--A", "2", "--B", "1", "--p", "4"]
    args += ["--graph-out", str(graph_out), "--ordering-out", str(ordering_out)]
    assert main(args) == EXIT_ACCEPT
    assert capsys.readouterr().out == ""
    assert graph_out.read_text(encoding="utf-8").startswith("4 3\n")
    assert ordering_out.read_text(encoding="utf-8") == "1 2 3 4\n"


def test_witness_construction_error(capsys) -> None:
    """A below B under the order cannot be witnessed."""
    args = ["witness", "--order", "bfs", "--A", "2", "--B", "1"]
    assert main(args) == EXIT_INPUT_ERROR
    assert "below" in capsys.readouterr().err


def test_version(capsys) -> None:
    """--version prints and exits."""
    with pytest.raises(SystemExit) as error:
        main(["--version"])
    assert error.value.code == 0
    assert "1.0.0" in capsys.readouterr().out


def test_parse_label_argument() -> None:
    """Spaces, commas and the empty string."""
    assert parse_label_argument("1 3") == [1, 3]
    assert parse_label_argument("1,3") == [1, 3]
    assert parse_label_argument("") == []


def test_command_config_defaults() -> None:
    """Defaults fill in everything but the command."""
    config = CommandConfig(command="hierarchy")
    assert config.max_label == 5
    assert config.engine == "auto"
    assert config.output_format == "text"
