import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("DIRICHLET_CLI", "dirichlet")
DATA = Path(__file__).resolve().parent.parent / "data"


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, env=full_env)


def run_json(*args):
    result = run(*args, "--format", "json")
    assert result.returncode == 0, result.stderr
    return json.loads(result.stdout)


def test_charpoly_text():
    result = run("charpoly", DATA / "wheatstone.json")
    assert result.returncode == 0
    assert result.stdout.strip() == "t^2 - 5t + 6"


def test_count_chambers_json():
    assert run_json("count-chambers", DATA / "wheatstone.json") == {"total": 12, "bounded": 2}
    assert run_json("count-chambers", DATA / "path4.json") == {"total": 7, "bounded": 1}


def test_validate():
    doc = run_json("validate", DATA / "wheel7.json")
    assert doc["m"] == 2 and doc["n"] == 5
    assert doc["interior"] == ["hub", "o1", "o2", "o4", "o5"]


def test_orientations_modes():
    assert len(run_json("orientations", DATA / "wheatstone.json")) == 12
    assert len(run_json("orientations", DATA / "wheatstone.json", "--mode", "compatible")) == 2
    assert len(run_json("orientations", DATA / "wheel7.json", "--mode", "compatible")) == 9
    acyclic = run_json("orientations", DATA / "path4.json", "--mode", "acyclic")
    assert len(acyclic) == 8
    assert all(set(o) == {"i1-i2", "i1-j1", "i2-j2"} for o in acyclic)


def test_orientation_points():
    doc = run_json("orientations", DATA / "path4.json", "--mode", "compatible", "--points")
    assert doc == [
        {
            "orientation": {"i1-i2": "i2>i1", "i1-j1": "i1>j1", "i2-j2": "j2>i2"},
            "point": {"i1": "1/3", "i2": "2/3"},
        }
    ]


def test_adjacency():
    doc = run_json("orientations", DATA / "wheatstone.json", "--adjacency")
    assert len(doc["chambers"]) == 2
    assert [(e["from"], e["to"], e["edge"]) for e in doc["edges"]] == [(0, 1, "i1-i2")]
    assert doc["connected"] is True


def test_poset():
    doc = run_json("poset", DATA / "wheatstone.json")
    assert len(doc["elements"]) == 10
    assert doc["characteristic"] == "t^2 - 5t + 6"
    assert sum(e["mobius"] for e in doc["elements"] if e["rank"] == 2) == 6


def test_supersolvable():
    w = run_json("supersolvable", DATA / "wheatstone.json")
    assert w["supersolvable"] and w["free"]
    assert sorted(w["weighted_elimination_ordering"]) == ["i1", "i2"]
    p = run_json("supersolvable", DATA / "path4.json")
    assert not p["supersolvable"]
    assert len(p["chordless_cycle"]) == 4


def test_harmonic_and_energies():
    h = run_json("harmonic", DATA / "path4.json")
    assert h["harmonic"] == {"i1": "1/3", "i2": "2/3", "j1": "0", "j2": "1"}
    e = run_json("energies", DATA / "path4.json")
    assert set(e["energies"].values()) == {"1/9"}
    o = run_json("energies", DATA / "path4.json", "--gamma", "i1-i2=2")
    assert o["harmonic"]["i1"] == "2/5"
    f = run_json("harmonic", DATA / "join2_2.json")
    assert isinstance(f["harmonic"]["i1"], float)


def test_critical_points():
    sols = run_json("critical-points", DATA / "wheatstone.json")
    assert len(sols) == 2
    s = 5 ** -0.5
    points = sorted((p["point"]["i1"], p["point"]["i2"]) for p in sols)
    assert points[0] == pytest.approx((-s, s), abs=1e-9)
    assert points[1] == pytest.approx((s, -s), abs=1e-9)
    assert all(p["conductances"]["i1-i2"] == pytest.approx(1.25) for p in sols)
    wheel = run_json("critical-points", DATA / "wheel7.json")
    assert len(wheel) == 9
    p4 = run_json("critical-points", DATA / "path4.json")
    assert list(p4[0]["conductances"].values()) == pytest.approx([1, 1, 1])


def test_plot():
    result = run("plot", DATA / "path4.json")
    assert result.returncode == 0
    assert result.stdout.startswith("<svg")
    assert result.stdout.count('class="hyperplane"') == 3
    assert result.stdout.count('class="bounded-chamber"') == 1
    w = run("plot", DATA / "wheatstone.json").stdout
    assert w.count('class="hyperplane"') == 5
    assert w.count('class="bounded-chamber"') == 2
    bad = run("plot", DATA / "wheel7.json")
    assert bad.returncode == 1
    assert json.loads(bad.stderr)["error"] == "InvalidArgument"


def test_census():
    result = run("census", "--max-vertices", "4")
    assert result.returncode == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "id,m,n,pcp,total_chambers,bounded_chambers,compatible,chordal,supersolvable,checks"
    assert len(lines) > 1
    assert all(line.endswith(",pass") for line in lines[1:])
    single = run("census", DATA / "wheatstone.json").stdout.strip().splitlines()
    assert single[1].split(",")[1:] == ["2", "2", "t^2 - 5t + 6", "12", "2", "2", "true", "true", "pass"]


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    result = run("charpoly", DATA / "path4.json", "--format", "json", "-o", target)
    assert result.returncode == 0 and result.stdout == ""
    assert json.loads(target.read_text())["polynomial"] == "t^2 - 3t + 3"


@pytest.mark.parametrize(
    "args",
    [
        ("validate", DATA / "wheatstone.json"),
        ("orientations", DATA / "wheel7.json", "--mode", "compatible", "--points"),
        ("poset", DATA / "path4.json"),
        ("critical-points", DATA / "wheel7.json"),
        ("energies", DATA / "join2_2.json"),
    ],
)
def test_json_is_deterministic_and_roundtrips(args):
    first = run(*args, "--format", "json").stdout
    assert first == run(*args, "--format", "json").stdout
    assert json.dumps(json.loads(first), indent=2, ensure_ascii=False) + "\n" == first


def test_error_exit_codes():
    bad = run("validate", DATA / "invalid_injective.json")
    assert bad.returncode == 1
    assert json.loads(bad.stderr)["error"] == "BoundaryValuesNotInjective"
    malformed = run("charpoly", DATA / "malformed.json")
    assert malformed.returncode == 1
    assert json.loads(malformed.stderr)["error"] == "MalformedInput"
    missing = run("charpoly", DATA / "does-not-exist.json")
    assert missing.returncode == 1
    capped = run("orientations", DATA / "wheel7.json", env={"DIRICHLET_MAX_STATES": "10"})
    assert capped.returncode == 2
    assert json.loads(capped.stderr)["error"] == "InstanceTooLarge"
    stuck = run("critical-points", DATA / "wheatstone.json", "--max-iter", "0")
    assert stuck.returncode == 3
    assert json.loads(stuck.stderr)["error"] == "DidNotConverge"
    usage = run("frobnicate")
    assert usage.returncode == 1
