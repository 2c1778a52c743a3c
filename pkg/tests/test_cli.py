import json
from pathlib import Path

import jsonschema
import pytest
from typer.testing import CliRunner

from src.cli import app, run
from src.farey import Slope

runner = CliRunner()
SCHEMA = json.loads(
    (Path(__file__).parents[1] / "schema" / "verdict.json").read_text()
)


def invoke(*args: str):
    return runner.invoke(app, list(args))


def invoke_json(*args: str):
    result = invoke(*args, "--json")
    assert result.exit_code == 0, result.output
    document = json.loads(result.stdout)
    jsonschema.validate(document, SCHEMA)
    return document


def test_schema_is_valid():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


@pytest.mark.parametrize(
    "args,expected",
    [
        (["farey", "sum", "1/2", "1/3"], "2/5"),
        (["farey", "sum", "-1", "0"], "-1/2"),
        (["farey", "mult", "0", "inf"], "-1"),
        (["farey", "edge", "1/3", "3/4"], "false"),
        (["farey", "arc", "inf", "1", "-1"], "true"),
        (["farey", "neighbors", "0", "1/2", "-1/2"], "1 inf -1"),
        (["mcg", "fdtc", "a b"], "1/6"),
        (["mcg", "fdtc", "a^-1 b^-1"], "-1/6"),
        (["mcg", "classify", "a b^-1"], "PseudoAnosov"),
        (["mcg", "rv", "b^3"], "Indeterminate"),
        (["mcg", "nk", "a b"], "4 (0, 1/4)"),
        (["mcg", "normalform", "a b"], "none"),
        (["surgery", "topo", "-1", "-6"], "-7"),
        (["surgery", "framing", "1", "admissible", "--times", "3"], "1/4"),
        (["surgery", "framing", "1", "inadmissible"], "inf"),
        (["surgery", "binding-slope", "a b", "1"], "1/2"),
        (["surgery", "menke", "-1", "0", "1"], "inf"),
        (["surgery", "lens", "-1"], "-1/2 (three-sphere)"),
        (["surgery", "lens", "-1/2"], "-2/3"),
        (["surgery", "seifert", "a b^-1", "-1/2"], "2/7"),
        (["fill", "rset", "-2", "inf"], "true"),
        (["brieskorn", "lr", "eta", "5", "1", "0"], "l = 1, r = 1, mixed = True"),
    ],
)
def test_text_output(args, expected):
    result = invoke(*args)
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == expected


def test_fdtc_with_run(capsys):
    assert run(["mcg", "fdtc", "a b"]) == 0
    assert capsys.readouterr().out.strip() == "1/6"


def test_fibered_general():
    result = invoke("fill", "fibered", "a b^-1", "1/4", "--ambient", "general")
    assert result.exit_code == 0, result.output
    assert "lower = Weak, upper = Strong" in result.stdout
    assert "fibered-weak" in result.stdout


def test_fibered_no_conclusion():
    document = invoke_json("fill", "fibered", "a b", "1/3")
    assert document["result"]["status"] == "NoConclusion"


def test_brieskorn_triangle():
    result = invoke("brieskorn", "triangle", "eta", "5")
    assert result.exit_code == 0, result.output
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "eta n=5"
    cells = [label for line in lines[1:-1] for label in line.split()]
    assert len(cells) == 10


def test_brieskorn_status_text():
    result = invoke("brieskorn", "status", "eta", "4", "1", "-1")
    assert result.exit_code == 0, result.output
    assert "SteinFillable" in result.stdout
    assert "[announced] eta-four-stein (Forthcoming Stein fillings)" in result.stdout
    assert "\"We disprove the conjecture by finding Stein fillings" in result.stdout


@pytest.mark.parametrize(
    "args,shape",
    [
        (["farey", "sum", "1/2", "1/3"], "2/5"),
        (["farey", "mult", "1/2", "1/3"], 1),
        (["farey", "edge", "0", "inf"], True),
        (["farey", "neighbors", "0", "1/2", "-1/2"], ["1", "inf", "-1"]),
        (["mcg", "eval", "a b^-1"], {"matrix": [[2, 1], [1, 1]], "trace": 3}),
        (["mcg", "nk", "a^-1 b^-1"], {"n_K": 3, "r_set": "(0, 1/3)"}),
        (
            ["mcg", "normalform", "a^-2 b^-1"],
            {"kind": 3, "n": 0, "r": [], "m": -2, "type": "Periodic"},
        ),
        (["surgery", "lens", "-3"], {"slope": "-1/4", "three_sphere": True}),
        (["brieskorn", "lr", "xi", "4", "1", "2"], {"l": 2, "r": 0, "mixed": False}),
    ],
)
def test_json_output(args, shape):
    document = invoke_json(*args)
    assert document["command"] == " ".join(args[:2])
    assert document["result"] == shape


def test_json_verdicts():
    mixed = invoke_json("fill", "mixed", "-1", "--lower", "weak", "--upper", "strong")
    assert mixed["result"]["lower"] == "Weak"
    assert mixed["result"]["upper"] == "Strong"

    assert invoke_json("fill", "mixed", "1/2")["result"]["status"] == "Overtwisted"
    assert invoke_json("fill", "torsion", "1", "-1")["result"]["upper"] == "Strong"
    assert invoke_json("fill", "rotative", "3")["result"]["lower"] == "Weak"

    fibered = invoke_json("fill", "fibered", "a b", "1/5")
    assert fibered["result"]["status"] == "Exists"
    assert [c["key"] for c in fibered["result"]["citations"]] == [
        "fibered-strong",
        "weak-to-strong",
    ]
    assert fibered["result"]["citations"][0]["anchor"] == "Theorem (non-Liouville)"


def test_fill_mixed_levels():
    default = invoke_json("fill", "mixed", "-2")["result"]
    assert (default["lower"], default["upper"]) == ("Tight", "Stein")

    result = invoke("fill", "mixed", "-1", "--lower", " Weak", "--upper", "WEAK")
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines()[0] == "Tight, lower = Weak, upper = Strong"

    result = invoke("fill", "mixed", "-1", "--upper", "amazing")
    assert result.exit_code == 2
    assert "ParseError: 'amazing' is not a filling level" in result.output


def test_json_brieskorn():
    cells = invoke_json("brieskorn", "list", "xi", "4")["result"]
    assert len(cells) == 10
    assert cells[0]["status"] == "StrongNotLiouville"

    cell = invoke_json("brieskorn", "status", "xi", "4", "2", "1")["result"]
    assert cell["status"] == "EdgeConjecturedStein"

    triangle = invoke_json("brieskorn", "triangle", "eta", "2")["result"]
    assert "(0,0)S" in triangle


def test_printed_slopes_reparse():
    for s in invoke_json("farey", "neighbors", "inf", "-7/3", "9/2")["result"]:
        assert str(Slope.parse(s)) == s


@pytest.mark.parametrize(
    "args",
    [
        ["farey", "sum", "1/x", "1"],
        ["mcg", "fdtc", "a c"],
        ["fill", "mixed", "-1", "--lower", "amazing"],
        ["brieskorn", "triangle", "zeta", "5"],
        ["surgery", "framing", "1", "sideways"],
        ["mcg", "nosuchcommand"],
    ],
)
def test_parse_errors_exit_2(args):
    assert invoke(*args).exit_code == 2
    assert run(args) == 2


@pytest.mark.parametrize(
    "args,name",
    [
        (["farey", "arc", "0", "1", "1"], "DegenerateArc"),
        (["farey", "neighbors", "0", "-1", "1"], "InfiniteFamily"),
        (["surgery", "lens", "0"], "InvalidCoefficient"),
        (["surgery", "menke", "1", "0", "-1"], "InvalidTorus"),
        (["fill", "rset", "0", "1"], "InvalidParameter"),
        (["fill", "mixed", "-1", "--overtwisted"], "InvalidParameter"),
        (["brieskorn", "status", "eta", "5", "1", "1"], "InvalidParameter"),
        (["brieskorn", "list", "eta", "1"], "InvalidParameter"),
    ],
)
def test_domain_errors_exit_3(args, name):
    result = invoke(*args)
    assert result.exit_code == 3
    assert f"{name}:" in result.output
    assert run(args) == 3
