from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from factorlab import constructions as C
from factorlab.cli import main, run_script
from factorlab.graph import write_edge_list, write_graph6

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_props_q3_json(capsys):
    code, out, _ = run(capsys, "--output", "json", "props", "--name", "Q3")
    assert code == 0
    data = json.loads(out)
    assert (data["pmh"], data["2fh"], data["malleable"], data["girth"]) == (True, False, [], 4)
    assert out == (GOLDEN / "props_q3.json").read_text()


def test_props_text_and_file_input(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text(write_edge_list(C.complete(4)) + "\n" + write_edge_list(C.theta2()))
    code, out, _ = run(capsys, "props", str(f))
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2 and "pmh=True" in lines[0] and "girth=2" in lines[1]


def test_props_graph6_input(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(write_graph6(C.heawood()) + "\n")
    code, out, _ = run(capsys, "--output", "json", "props", "--format", "g6", str(f))
    assert code == 0 and json.loads(out)[0]["2fh"] is True


def test_props_disconnected_errors(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("4 2\n0 1\n2 3\n")
    code, _, err = run(capsys, "props", str(f))
    assert code == 2 and "disconnected" in err


def test_props_parse_error_reports_line(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("3 2\n0 1\n")
    code, _, err = run(capsys, "props", str(f))
    assert code == 2 and "line 2" in err


def test_catalog_heawood_golden(capsys):
    code, out, _ = run(capsys, "catalog", "--name", "Heawood", "--format", "edgelist")
    assert code == 0
    assert out.splitlines()[0] == "14 21"
    assert out == (GOLDEN / "heawood.edgelist").read_text()


def test_catalog_listing_and_cubic(capsys):
    code, out, _ = run(capsys, "--output", "json", "catalog")
    assert code == 0 and json.loads(out)["Heawood"] == {"n": 14, "m": 21}
    code, out, _ = run(capsys, "catalog", "--cubic", "8", "--format", "g6")
    assert len(out.split()) == 5


def test_construct_script(capsys, tmp_path):
    script = {"base": "K3,3", "ops": [{"op": "star", "at": 0, "attach": "Q3", "attachAt": 0}]}
    f = tmp_path / "s.json"
    f.write_text(json.dumps(script))
    code, out, _ = run(capsys, "--output", "json", "construct", str(f), "--props")
    data = json.loads(out)
    assert code == 0 and data["n"] == 12 and data["props"]["pmh"] is True


def test_construct_script_two_cut_and_stale():
    g = run_script({"base": "Theta2", "ops": [{"op": "2cut", "edge": 0, "attach": "K4", "attachEdge": 0}]})
    assert g.n == 6
    with pytest.raises(Exception):
        run_script({"base": "K4", "ops": [{"op": "y", "at": 0}, {"op": "y", "at": 0}]})


def test_construct_bad_json(capsys, tmp_path):
    f = tmp_path / "s.json"
    f.write_text("{nope")
    code, _, err = run(capsys, "construct", str(f))
    assert code == 2 and "JSON" in err


def test_verify_paper_exit_codes(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "HAGG,FAM-MAL", "--max-n", "6")
    assert code == 0 and "2/2 checks passed" in out
    code, _, err = run(capsys, "verify-paper", "--only", "NOPE")
    assert code == 2 and "unknown theorem id" in err


def test_scan_bipartite_cubic_to_12(capsys, tmp_path):
    from factorlab.catalog import load_bipartite_cubic
    f = tmp_path / "b.g6"
    f.write_text("".join(write_graph6(g) + "\n" for n in (6, 8, 10, 12) for g in load_bipartite_cubic(n)))
    code, out, _ = run(capsys, "--output", "json", "scan", str(f), "--filter", "bipartite,cubic",
                       "--max-n", "12", "--jobs", "2")
    data = json.loads(out)
    assert code == 0 and data["scanned"] == 9 and data["counterexamples"] == 0
    fh = [r for r in data["survivors"] if r["2fh"]]
    # K3,3 and the 10-vertex star product of two copies of K3,3
    assert [(r["n"], r["k33_signature"]) for r in fh] == [(6, True), (10, False)]


def test_usage_errors():
    for argv in ([], ["props", "--bogus"], ["scan"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "factorlab", "catalog", "--name", "K4"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.startswith("4 6\n")


def test_workbound_flag(capsys):
    code, _, err = run(capsys, "--workbound", "5", "props", "--name", "Heawood")
    assert code == 2 and "exceeded" in err


def test_workbound_flag_does_not_leak(capsys):
    import os
    from factorlab.factors import WORKBOUND_ENV
    run(capsys, "--workbound", "5", "catalog", "--name", "K4")
    assert WORKBOUND_ENV not in os.environ
