import json
import subprocess
import sys

import pytest

from spschur import cli
from spschur.suites import REGISTRY, ParamError, jsonable, run_suite

CATALOG = ["thm-7.1-caseA1", "prop-8.5", "prop-9.3", "prop-10.6", "prop-11.1-case2",
           "sec-17-x1x3", "k-recursion", "so-counts", "relations-scan"]

# suites whose default run takes a few seconds; the rest are checked against goldens too
FAST = [s for s in REGISTRY if s not in ("strong-gelfand", "subgroups-listed")]


def test_catalog_contents(capsys):
    assert cli.main(["list"]) == 0
    out = capsys.readouterr().out
    for sid in CATALOG:
        assert sid in out


def test_every_suite_has_a_function():
    for s in REGISTRY.values():
        assert callable(s.func) and s.summary


def test_three_factor_example(tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["run", "lemma-7.2", "--n", "6", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["checks"][0]["values"]["count"] == 16 and rep["status"] == "pass"


def test_class_sizes_example(tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["class-sizes", "--n", "4", "--out", str(out)]) == 0
    vals = {c["name"]: c["values"] for c in json.loads(out.read_text())["checks"]}
    assert [vals[k]["size"] for k in ("transvections", "orthogonal_pairs", "meeting_pairs",
                                      "zero_triangles", "group_order")] == [15, 45, 40, 20, 720]


def test_dye_example_csv(tmp_path):
    out = tmp_path / "d.csv"
    assert cli.main(["run", "dye-bound", "--range", "2:20", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("name,status")
    assert lines[1].startswith("m=2,recorded") and lines[2].startswith("m=3,recorded")
    assert all(",pass," in line for line in lines[3:])


def test_exit_codes(tmp_path, capsys):
    assert cli.main(["run", "no-such-suite"]) == 2
    assert cli.main(["run", "lemma-7.2", "--n", "5"]) == 2
    assert cli.main(["run", "dye-bound", "--range", "1:3"]) == 2
    assert cli.main(["run", "dye-bound", "--range", "oops"]) == 2
    assert cli.main(["run", "lemma-7.2", "--seed", "1"]) == 2
    assert cli.main(["run", "relations-scan", "--family", "nope"]) == 2
    assert cli.main(["run", "sec-17-x1x3", "--out", str(tmp_path / "s.json")]) == 1


def test_guard_exit(monkeypatch):
    from spschur.subgroups import CapExceeded

    def boom(p):
        raise CapExceeded("too big")

    monkeypatch.setattr(REGISTRY["lemma-7.2"], "func", boom)
    assert cli.run("lemma-7.2", {}) == 3


def test_timing_only_on_request(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    cli.main(["run", "lemma-2.3", "--out", str(a)])
    cli.main(["run", "lemma-2.3", "--out", str(b), "--timing"])
    assert "seconds" not in json.loads(a.read_text()) and "seconds" in json.loads(b.read_text())


def test_reports_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    cli.main(["run", "random-colorings", "--seed", "3", "--count", "10", "--out", str(a)])
    cli.main(["run", "random-colorings", "--seed", "3", "--count", "10", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("sid", FAST)
def test_goldens_match(sid):
    assert cli.golden_diff(sid) == []


def test_update_goldens_prints_diff(tmp_path, capsys):
    assert cli.update_goldens(["lemma-2.3"], tmp_path) == 0
    assert "+++ b/lemma-2.3.json" in capsys.readouterr().out
    assert cli.update_goldens(["lemma-2.3"], tmp_path) == 0
    assert "unchanged" in capsys.readouterr().out


def test_params_rejected():
    with pytest.raises(ParamError):
        run_suite("lemma-7.2", {"family": "SOplus"})


def test_jsonable_fractions():
    from fractions import Fraction
    assert jsonable({"a": Fraction(3, 2), "b": Fraction(4, 2), 1: {2, 1}}) == {"a": "3/2", "b": 2, "1": [1, 2]}


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "spschur.cli", "list"], capture_output=True, text=True)
    assert res.returncode == 0 and "prop-8.5" in res.stdout
