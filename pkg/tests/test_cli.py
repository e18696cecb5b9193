import json
import subprocess
import sys

import pytest

from b3epg.cli import main
from helpers import FIXTURES


def run(capsys, *args):
    code = main([str(a) for a in args])
    return code, capsys.readouterr().out


def test_build_octahedron_with_audit(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, out = run(capsys, "build", FIXTURES / "octahedron.g", "--audit", "--report", report)
    assert code == 0
    rep = json.loads(out)
    assert len(rep["vertices"]) == 6
    r = json.loads(report.read_text())
    assert r["pass"] and r["max_bends"] == 3 and r["audit"]


def test_build_then_verify(capsys, tmp_path):
    rep = tmp_path / "rep.json"
    assert run(capsys, "build", "@icosahedron", "-o", rep)[0] == 0
    code, out = run(capsys, "verify", rep, "@icosahedron")
    assert code == 0 and json.loads(out)["pass"]


def test_verify_corrupted_rep(capsys, tmp_path):
    rep = tmp_path / "rep.json"
    run(capsys, "build", FIXTURES / "octahedron.g", "-o", rep)
    data = json.loads(rep.read_text())
    # slide the first path's first segment two units sideways
    seg = data["vertices"][2]["segments"][0]
    if seg[0] == seg[2]:
        seg[0] += 2
        seg[2] += 2
    else:
        seg[1] += 2
        seg[3] += 2
    rep.write_text(json.dumps(data))
    code, out = run(capsys, "verify", rep, FIXTURES / "octahedron.g")
    report = json.loads(out)
    assert code == 1 and not report["pass"]
    assert report["path_errors"] or report["missing_edges"] or report["extra_edges"]


def test_outer_flag_and_no_a1b1(capsys, tmp_path):
    rep = tmp_path / "rep.json"
    code, _ = run(capsys, "build", FIXTURES / "octahedron.g", "--outer", "0,3,2", "--no-a1b1", "-o", rep)
    assert code == 0
    code, out = run(capsys, "verify", rep, FIXTURES / "octahedron.g")
    assert code == 1 and json.loads(out)["missing_edges"] == [["0", "3"]]
    code, out = run(capsys, "verify", rep, FIXTURES / "octahedron.g", "--outer", "0,3,2", "--no-a1b1")
    assert code == 0


def test_bad_outer_is_json_error(capsys):
    code, out = run(capsys, "build", FIXTURES / "octahedron.g", "--outer", "0,1")
    assert code == 1 and json.loads(out)["error"] == "BadOuter"


def test_outer_not_a_face_edge(capsys):
    # 0 and 2 are opposite vertices of the octahedron
    code, out = run(capsys, "build", FIXTURES / "octahedron.g", "--outer", "0,2,2")
    assert code == 1 and "error" in json.loads(out)


def test_build_rejects_non_triangulation(capsys):
    code, out = run(capsys, "build", FIXTURES / "cube.g")
    assert code == 1 and "error" in json.loads(out)


def test_missing_file_is_json_error(capsys, tmp_path):
    code, out = run(capsys, "build", tmp_path / "nope.g")
    assert code == 1 and json.loads(out)["error"] == "FileNotFoundError"


@pytest.mark.parametrize("text", ['{"x": 1}', '[]', '{"vertices": [{"id": 0}]}', '{"vertices": [3]}'])
def test_malformed_rep_is_format_error(capsys, tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    for cmd in (["render", path], ["verify", path, "@k4"]):
        code, out = run(capsys, *cmd)
        assert code == 1 and json.loads(out)["error"] == "FormatError"


@pytest.mark.parametrize("graph", ["cube.g", "wheel4.g"])
def test_augment(capsys, graph):
    code, out = run(capsys, "augment", FIXTURES / graph, "--audit")
    assert code == 0
    assert {v["id"] for v in json.loads(out)["vertices"]} == (
        {str(i) for i in range(8)} if graph == "cube.g" else {"hub", "n", "e", "s", "w"}
    )


def test_augment_failure(capsys):
    code, out = run(capsys, "augment", "@cycle5")
    assert code == 1 and json.loads(out)["error"] == "AugmentationInvalid"


def test_render_formats(capsys, tmp_path):
    rep = tmp_path / "rep.json"
    run(capsys, "build", "@triangle", "-o", rep)
    code, out = run(capsys, "render", rep)
    assert code == 0 and out.startswith("<?xml")
    code, out = run(capsys, "render", rep, "--format", "ascii")
    assert code == 0 and "= 0" in out
    png = tmp_path / "rep.png"
    assert run(capsys, "render", rep, "--format", "png", "-o", png)[0] == 0
    assert png.read_bytes()[:4] == b"\x89PNG"


def test_build_with_figure(capsys, tmp_path):
    fig = tmp_path / "oct.png"
    code, _ = run(capsys, "build", "@octahedron", "--format", "svg", "-o", tmp_path / "o.svg", "--figure", fig)
    assert code == 0 and fig.exists() and (tmp_path / "o.svg").read_text().startswith("<?xml")


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "b3epg", "build", "@triangle", "--format", "ascii"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and "= 2" in proc.stdout
