import json
from pathlib import Path

import pytest

from minuscule.cli import main

GOLDEN = Path(__file__).parent / "golden"
ALT5 = "0,0,0;1,0,0;1,0,-1;2,0,-1;2,-1,-1;2,0,-1;2,-1,-1;2,0,-1;1,0,-1;1,0,0;0,0,0"
ALT5_PR = "0,0,0;1,0,0;1,0,-1;1,1,-1;1,0,-1;1,1,-1;1,0,-1;1,0,0;1,0,-1;1,0,0;0,0,0"
OSC9 = ";1;11;21;2;21;11;21;211;21"


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_promote_text(capsys, monkeypatch):
    code, out, _ = run(capsys, ["promote", "--kind", "alternating"], ALT5, monkeypatch)
    assert code == 0 and out.strip() == ALT5_PR


def test_promote_diagram_matches_golden(capsys, monkeypatch):
    code, out, _ = run(
        capsys, ["promote", "--kind", "alternating", "--diagram"], ALT5, monkeypatch
    )
    assert code == 0
    assert out == (GOLDEN / "promotion_diagram.txt").read_text()


def test_promote_variant(capsys, monkeypatch):
    code, out, _ = run(
        capsys, ["promote", "--kind", "alternating", "--variant"], ALT5, monkeypatch
    )
    assert code == 0 and out.strip() == ALT5_PR


def test_promote_json_round_trip(capsys, monkeypatch):
    code, out, _ = run(
        capsys,
        ["promote", "--kind", "alternating", "--format", "json"],
        ALT5,
        monkeypatch,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "alternating"
    code2, out2, _ = run(capsys, ["promote"], out, monkeypatch)
    assert code2 == 0  # JSON input needs no --kind


def test_evacuate_oscillating(capsys, monkeypatch):
    code, out, _ = run(
        capsys, ["evacuate", "--kind", "oscillating", "--n", "3"], OSC9, monkeypatch
    )
    assert code == 0 and out.strip() == ";1;11;111;211;221;321;311;31;21"


def test_evacuate_decorated_diagram(capsys, monkeypatch):
    alt7 = (
        "0,0,0;1,0,0;1,0,-1;2,0,-1;2,0,-2;2,0,-1;2,-1,-1;3,-1,-1;2,-1,-1;"
        "2,0,-1;2,0,-2;3,0,-2;3,0,-3;3,1,-3;2,1,-3"
    )
    code, out, _ = run(
        capsys,
        ["evacuate", "--kind", "alternating", "--diagram", "--decorate"],
        alt7,
        monkeypatch,
    )
    assert code == 0
    assert "marks: (1,9)- (3,5)- (7,8)x (12,14)+" in out


def test_cactus(capsys, monkeypatch):
    code, out, _ = run(
        capsys,
        ["cactus", "--kind", "oscillating", "--n", "3", "--p", "1", "--q", "9"],
        OSC9,
        monkeypatch,
    )
    assert code == 0 and out.strip() == ";1;11;111;211;221;321;311;31;21"
    code, _, err = run(
        capsys,
        ["cactus", "--kind", "oscillating", "--n", "3", "--p", "4", "--q", "99"],
        OSC9,
        monkeypatch,
    )
    assert code == 2 and "error" in err


def test_sundaram_text(capsys, monkeypatch):
    code, out, _ = run(capsys, ["sundaram", "--n", "3"], OSC9, monkeypatch)
    assert code == 0
    assert out == "matching: {{1,4},{2,9},{3,6}}\ntableau: 57,8\n"


def test_perm_text(capsys, monkeypatch):
    seq = {
        "kind": "alternating",
        "n": 13,
        "shapes": [
            [0] * 13,
            [1] + [0] * 12,
            [1] + [0] * 11 + [-1],
            [2] + [0] * 11 + [-1],
            [2] + [0] * 11 + [-2],
            [2] + [0] * 11 + [-1],
            [2] + [0] * 10 + [-1, -1],
            [3] + [0] * 10 + [-1, -1],
            [2] + [0] * 10 + [-1, -1],
            [2] + [0] * 11 + [-1],
            [2] + [0] * 11 + [-2],
            [3] + [0] * 11 + [-2],
            [3] + [0] * 11 + [-3],
            [3, 1] + [0] * 10 + [-3],
            [2, 1] + [0] * 10 + [-3],
        ],
    }
    code, out, _ = run(capsys, ["perm"], json.dumps(seq), monkeypatch)
    assert code == 0
    assert out == (
        "permutation: {(3,2),(4,4),(5,1),(6,7)}\nP: 356\nQ: 12,7\n"
    )


def test_embed_and_strip(capsys, monkeypatch):
    code, out, err = run(capsys, ["embed", "--kind", "oscillating", "--n", "1"], ";1;", monkeypatch)
    assert code == 0 and out.strip() == "0,0;1,0;1,-1;1,0;0,0"
    assert "minimal embedding rank: 2" in err
    code, out, _ = run(
        capsys, ["strip", "--pad", "4"], "0,0;1,0;1,-1;1,0;0,0", monkeypatch
    )
    assert code == 0 and out.strip() == "0,0,0,0;1,0,0,0;1,0,0,-1;1,0,0,0;0,0,0,0"
    code, out, _ = run(capsys, ["strip", "--m", "2"], out.strip(), monkeypatch)
    assert code == 0 and out.strip() == "0,0;1,0;1,-1;1,0;0,0"
    code, _, _ = run(capsys, ["strip"], "0,0;1,0;1,-1;1,0;0,0", monkeypatch)
    assert code == 2


def test_render_svg_golden(capsys, monkeypatch):
    payload = '{"r":8,"pairs":[[1,6],[2,4],[3,8],[5,7]]}'
    code, out, _ = run(capsys, ["render", "--format", "svg"], payload, monkeypatch)
    assert code == 0
    assert out == (GOLDEN / "chord_matching.svg").read_text()


def test_render_growth_text(capsys, monkeypatch):
    payload = json.dumps(
        {"kind": "oscillating", "n": 1, "shapes": [[], [1], []]}
    )
    code, out, _ = run(capsys, ["render"], payload, monkeypatch)
    assert code == 0 and "x" in out


def test_render_out_file(tmp_path, capsys, monkeypatch):
    payload = '{"r":5,"map":[[1,5],[2,4],[3,1],[4,2],[5,3]]}'
    target = tmp_path / "perm.svg"
    code, out, _ = run(
        capsys, ["render", "--format", "svg", "--out", str(target)], payload, monkeypatch
    )
    assert code == 0 and out == ""
    assert target.read_text().count("marker-end") == 5


def test_enumerate(capsys, monkeypatch):
    code, out, _ = run(
        capsys, ["enumerate", "--kind", "oscillating", "--r", "3", "--n", "1", "--count"]
    , None, monkeypatch)
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(
        capsys,
        ["enumerate", "--kind", "alternating", "--r", "2", "--n", "2", "--empty"],
        None,
        monkeypatch,
    )
    assert code == 0
    assert sorted(out.strip().splitlines()) == [
        "0,0;1,0;0,0;1,0;0,0",
        "0,0;1,0;1,-1;1,0;0,0",
    ]


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(
        capsys, ["verify", "--suite", "csp", "--r-max", "3"], None, monkeypatch
    )
    assert code == 0 and "pass" in out
    code, out, _ = run(
        capsys,
        ["verify", "--suite", "gl2", "--r-max", "3", "--format", "json"],
        None,
        monkeypatch,
    )
    assert code == 0 and json.loads(out)[0]["passed"]
    code, _, err = run(capsys, ["verify", "--suite", "nonsense"], None, monkeypatch)
    assert code == 2 and "unknown suite" in err


def test_verify_parallel(capsys, monkeypatch):
    code, out, _ = run(
        capsys,
        ["verify", "--suite", "all", "--r-max", "2", "--n-max", "2", "--jobs", "4"],
        None,
        monkeypatch,
    )
    assert code == 0
    assert out.count("pass") >= 9


def test_verify_matchings_suite(capsys, monkeypatch):
    code, out, _ = run(
        capsys,
        ["verify", "--suite", "matchings", "--r-max", "6", "--n-max", "2"],
        None,
        monkeypatch,
    )
    assert code == 0 and "pass" in out


def test_batch_mode(capsys, monkeypatch):
    batch = json.dumps(
        [
            {"kind": "oscillating", "n": 1, "shapes": [[], [1], []]},
            {"kind": "oscillating", "n": 1, "shapes": [[], [1], [2]]},
        ]
    )
    code, out, _ = run(capsys, ["promote", "--format", "json"], batch, monkeypatch)
    assert code == 0
    results = json.loads(out)
    assert len(results) == 2 and all(item["kind"] == "oscillating" for item in results)
    code, out, _ = run(capsys, ["evacuate"], batch, monkeypatch)
    assert code == 0 and len(out.strip().splitlines()) == 2
    code, out, _ = run(capsys, ["cactus", "--p", "1", "--q", "2"], batch, monkeypatch)
    assert code == 0 and len(out.strip().splitlines()) == 2


def test_csp_command(capsys, monkeypatch):
    code, out, _ = run(capsys, ["csp", "--r-max", "4"], None, monkeypatch)
    assert code == 0 and "cyclic sieving" in out


def test_bad_input_exit_code(capsys, monkeypatch):
    code, _, err = run(capsys, ["promote", "--kind", "alternating"], "0,0;9,9", monkeypatch)
    assert code == 2 and "error" in err
    code, _, err = run(capsys, ["promote"], "1;2;3", monkeypatch)
    assert code == 2
    code, _, err = run(capsys, ["sundaram"], ";1;", monkeypatch)
    assert code == 2  # oscillating text needs --n
