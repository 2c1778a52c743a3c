import json

import pytest

from src.create_brieskorn_atlas import CreateBrieskornAtlas
from src.sweep_seifert_coefficients import SweepSeifertCoefficients
from src.tabulate_menke_candidates import TabulateMenkeCandidates
from src.tabulate_twist_coefficients import TabulateTwistCoefficients
from src.utils import Stage, Workflow


class WriteText(Stage):
    """Write a line of text, counting how often the stage ran."""

    runs = 0

    def _run(self) -> None:
        type(self).runs += 1
        with open(self.output, "w") as file:
            file.write(self.stage_vars.text)


@pytest.fixture
def workflow(tmp_path):
    WriteText.runs = 0
    wf = Workflow(root=tmp_path)
    wf.add_stage("first", WriteText, tmp_path / "out" / "first.txt", text="a")
    wf.add_stage(
        "second",
        WriteText,
        tmp_path / "out" / "second.txt",
        dependencies="first",
        text="b",
    )
    return wf


def test_run_then_skip(workflow, tmp_path):
    assert workflow.query_stages() == {
        "first": {"local": False, "newest": "stage"},
        "second": {"local": False, "newest": "stage"},
    }

    workflow.run()
    assert WriteText.runs == 2
    assert (tmp_path / "out" / "first.txt").read_text() == "a"
    assert (tmp_path / ".stage_history.json").exists()
    assert all(s.resolution == "run" for s in workflow.stages)

    workflow.run()
    assert WriteText.runs == 2
    assert all(s.resolution == "local" for s in workflow.stages)
    assert workflow.query_stages()["first"] == {"local": True, "newest": "local"}


def test_dependency_rerun(workflow):
    workflow.run()
    workflow.delete_stage_hash("first")
    assert workflow.query_stages()["first"]["newest"] == "stage"

    workflow.run()
    assert WriteText.runs == 4
    assert [s.resolution for s in workflow.stages] == ["run", "run"]


def test_changed_stage_vars(tmp_path):
    wf = Workflow(root=tmp_path)
    wf.add_stage("only", WriteText, tmp_path / "only.txt", text="a")
    wf.run()

    other = Workflow(root=tmp_path)
    other.add_stage("only", WriteText, tmp_path / "only.txt", text="changed")
    assert other.query_stages()["only"]["newest"] == "stage"
    other.update_stage_hash("only")
    assert other.query_stages()["only"]["newest"] == "local"


def test_add_stage_errors(tmp_path):
    wf = Workflow(root=tmp_path)
    wf.add_stage("one", WriteText, tmp_path / "one.txt", text="a")
    with pytest.raises(ValueError):
        wf.add_stage("one", WriteText, tmp_path / "two.txt", text="a")
    with pytest.raises(ValueError):
        wf.add_stage("two", WriteText, tmp_path / "two.txt", dependencies="three")
    with pytest.raises(TypeError):
        wf.add_stage("two", dict, tmp_path / "two.txt")
    with pytest.raises(ValueError):
        wf.delete_stage_hash("missing")


def test_missing_output(tmp_path):
    class Forgetful(Stage):
        def _run(self) -> None:
            pass

    wf = Workflow(root=tmp_path)
    wf.add_stage("forgetful", Forgetful, tmp_path / "never.txt")
    with pytest.raises(RuntimeError):
        wf.run()


def test_cli(workflow, tmp_path):
    with pytest.raises(SystemExit) as exc:
        workflow.cli(["run"])
    assert exc.value.code == 0
    assert (tmp_path / "out" / "second.txt").read_text() == "b"


def test_analysis_stages(tmp_path):
    data = tmp_path / "data"
    wf = Workflow(root=tmp_path)
    wf.add_stage(
        "twist coefficients",
        TabulateTwistCoefficients,
        data / "twist.json",
        words=["a b", "a b^-1"],
        oracle_iterations=500,
        tolerance=5e-3,
    )
    wf.add_stage(
        "menke candidates",
        TabulateMenkeCandidates,
        data / "menke.json",
        tori=[("-1", "0", "1"), ("-1/2", "0", "1/2")],
    )
    wf.add_stage(
        "brieskorn atlas",
        CreateBrieskornAtlas,
        [data / "eta.json", data / "xi.json", data / "triangles.txt"],
        max_n=5,
    )
    wf.add_stage(
        "seifert sweep",
        SweepSeifertCoefficients,
        data / "seifert.json",
        dependencies="twist coefficients",
        words=["a b", "a b^-1"],
        n_samples=10,
        max_term=9,
        seed=3,
    )
    wf.run()

    twist = json.loads((data / "twist.json").read_text())
    assert [(t["fdtc"], t["n_K"], t["r_set"]) for t in twist] == [
        ("1/6", 4, "(0, 1/4)"),
        ("0", 3, "(0, 1/3)"),
    ]

    menke = json.loads((data / "menke.json").read_text())
    assert [m["candidates"] for m in menke] == [["inf"], ["1", "inf", "-1"]]

    eta = json.loads((data / "eta.json").read_text())
    assert len(eta) == sum(n * (n - 1) // 2 for n in range(2, 6))
    assert "eta n=5" in (data / "triangles.txt").read_text()

    seifert = json.loads((data / "seifert.json").read_text())
    assert [len(s["samples"]) for s in seifert] == [10, 10]
