"""CLI contract: commands, formats, exit codes, determinism."""

import json

import pytest
from click.testing import CliRunner

from sqfree import sqmod
from sqfree.cli import main
from sqfree.field import QQ

runner = CliRunner()


@pytest.fixture
def path_file(tmp_path):
    p = tmp_path / "path.txt"
    p.write_text("1 2\n2 3\n")
    return str(p)


@pytest.fixture
def edges_file(tmp_path):
    """Facets <{1,3},{2}>: ideal (x1x2, x2x3)."""
    p = tmp_path / "edges.txt"
    p.write_text("1 3\n2\n")
    return str(p)


def test_betti_facets(edges_file):
    r = runner.invoke(main, ["betti", "--facets", edges_file, "--format", "json"])
    assert r.exit_code == 0
    rows = json.loads(r.output)
    table = {(row["i"], tuple(row["subset"])): row["beta"] for row in rows}
    assert table == {(0, (1, 2)): 1, (0, (2, 3)): 1, (1, (1, 2, 3)): 1}


def test_betti_fields_agree(edges_file):
    out = {}
    for f in ("q", "fp:2", "fp:101"):
        r = runner.invoke(
            main, ["betti", "--facets", edges_file, "--field", f, "--format", "csv"]
        )
        assert r.exit_code == 0
        out[f] = r.output
    assert out["q"] == out["fp:2"] == out["fp:101"]


def test_ext_zero_module(tmp_path):
    p = tmp_path / "zero.json"
    p.write_text(json.dumps(sqmod.zero_module(2, QQ).to_json()))
    r = runner.invoke(main, ["ext", "--module", str(p), "--format", "json"])
    assert r.exit_code == 0
    assert json.loads(r.output) == []


def test_dual_two_points(tmp_path):
    p = tmp_path / "two_points.txt"
    p.write_text("1\n2\n")
    r = runner.invoke(main, ["dual", "--facets", str(p), "--format", "json"])
    assert r.exit_code == 0
    assert json.loads(r.output) == [{"facet": []}]  # dual is {empty face}


def test_dual_of_full_simplex_is_invalid(tmp_path):
    p = tmp_path / "full.txt"
    p.write_text("1 2 3\n")
    r = runner.invoke(main, ["dual", "--facets", str(p)])
    assert r.exit_code == 3


def test_link(path_file):
    r = runner.invoke(
        main, ["link", "--facets", path_file, "--subset", "2", "--format", "json"]
    )
    assert r.exit_code == 0
    assert json.loads(r.output) == [{"facet": [1]}, {"facet": [3]}]


def test_resolve_and_strand(edges_file):
    r = runner.invoke(main, ["resolve", "--facets", edges_file, "--format", "json"])
    assert r.exit_code == 0
    rows = json.loads(r.output)
    assert {(row["step"], tuple(row["subset"])) for row in rows} == {
        (0, (1, 2)),
        (0, (2, 3)),
        (1, (1, 2, 3)),
    }
    r = runner.invoke(
        main, ["strand", "--facets", edges_file, "--i", "2", "--format", "json"]
    )
    assert r.exit_code == 0
    assert json.loads(r.output)  # the 2-linear strand is nonempty


def test_hochster_command(tmp_path):
    p = tmp_path / "two_points.txt"
    p.write_text("1\n2\n")
    r = runner.invoke(
        main, ["hochster", "--facets", str(p), "--i", "1", "--format", "json"]
    )
    assert r.exit_code == 0
    assert json.loads(r.output)[0]["dim"] == 1


def test_lc_hilbert_command(tmp_path):
    p = tmp_path / "two_points.txt"
    p.write_text("1\n2\n")
    r = runner.invoke(
        main,
        ["lc-hilbert", "--facets", str(p), "--i", "1", "--a", "-3,-5",
         "--format", "json"],
    )
    assert r.exit_code == 0
    assert json.loads(r.output)[0]["dim"] == 1


def test_charcycle_command(tmp_path):
    p = tmp_path / "two_points.txt"
    p.write_text("1\n2\n")
    r = runner.invoke(
        main, ["charcycle", "--facets", str(p), "--i", "1", "--format", "json"]
    )
    assert r.exit_code == 0
    rows = json.loads(r.output)
    assert {tuple(row["subset"]): row["multiplicity"] for row in rows} == {
        (): 1,
        (1,): 1,
        (2,): 1,
    }


def test_parse_error_exit_code(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("1 oops\n")
    r = runner.invoke(main, ["betti", "--facets", str(p)])
    assert r.exit_code == 2
    r = runner.invoke(main, ["betti", "--facets", str(tmp_path / "missing.txt")])
    assert r.exit_code == 2


def test_field_mismatch_is_invalid_input(tmp_path):
    p = tmp_path / "m.json"
    p.write_text(json.dumps(sqmod.free_module(2, 0b01, QQ).to_json()))
    r = runner.invoke(main, ["ext", "--module", str(p), "--field", "fp:101"])
    assert r.exit_code == 3


def test_check_passes_and_is_deterministic(tmp_path):
    args = ["check", "--seed", "5", "--max-n", "3"]
    r1 = runner.invoke(main, args)
    r2 = runner.invoke(main, args)
    assert r1.exit_code == 0
    assert r1.output == r2.output


def test_output_deterministic(edges_file):
    outs = {
        runner.invoke(
            main, ["betti", "--facets", edges_file, "--format", "json"]
        ).output
        for _ in range(3)
    }
    assert len(outs) == 1
