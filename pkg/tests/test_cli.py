import json
import subprocess
import sys

import pytest

from lenslab import cli, obstruct


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariant_commands(capsys):
    assert run(capsys, "d", 3, 1)[1] == "1/2 -1/6 -1/6\n"
    assert run(capsys, "d", 7, 2, "--index", 0)[1] == "9/14\n"
    assert run(capsys, "cw", "lens", 4, 1)[1] == "-1/16\n"
    assert run(capsys, "cw", "seifert", "1/4", "1/2", "-1/2")[1] == "-1/4\n"
    assert run(capsys, "dedekind", 3, 8)[1] == "1/16\n"
    assert run(capsys, "dedekind", 3, 8, "--direct")[1] == "1/16\n"
    assert run(capsys, "linkform", 8, -1, 3)[1] == "not isomorphic\n"
    assert run(capsys, "linkform", 10, -1, 1)[1] == "isomorphic (a=3)\n"
    assert run(capsys, "linkform", 8, 3)[1] == "3/8\n"


def test_invariant_formats(capsys):
    code, out, _ = run(capsys, "d", 3, 1, "--format", "json")
    assert json.loads(out) == {"values": {"0": "1/2", "1": "-1/6", "2": "-1/6"}}
    code, out, _ = run(capsys, "d", 3, 1, "--format", "tsv")
    assert out.splitlines() == ["0\t1\t2", "1/2\t-1/6\t-1/6"]


def test_no_decimals(capsys):
    for argv in [("d", 12, 5), ("cw", "lens", 17, 4), ("cw", "seifert", "2/5", "1/3", "-3/7")]:
        out = run(capsys, *argv)[1]
        assert "." not in out and "e-" not in out


@pytest.mark.parametrize("argv", [("d", 4, 2), ("d", 0, 1), ("cw", "lens", 6, 3), ("dedekind", 2, 4),
                                  ("linkform", 8, 2, 1), ("linkform", 8), ("cw", "seifert", "1/2", "-1/2"),
                                  ("cw", "seifert", "x"), ("classify", 0, 1), ("classify", 5, 0),
                                  ("table", "--n-max", 0)])
def test_domain_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "classify")[0] == 2
    assert run(capsys, "nope")[0] == 2
    assert run(capsys, "classify", 5, 1, "--format", "xml")[0] == 2
    assert run(capsys, "cone", "a", "--rank", "--N", "0")[0] == 2


def test_classify_examples(capsys):
    code, out, _ = run(capsys, "classify", 9, -5)
    assert code == 0
    assert out.startswith("(9, -5)  Unresolved")
    assert '"N0":"1"' in out
    code, out, _ = run(capsys, "classify", 7, -7, "--format", "json")
    d = json.loads(out)
    assert d["verdict"] == "Obstructed"
    assert all(c["certificates"] for c in d["candidates"])


def _three(capsys, *argv):
    outs = {f: run(capsys, *argv, "--format", f)[1] for f in cli.FORMATS}
    js = json.loads(outs["json"])
    js = js if isinstance(js, list) else [js]
    pretty = [cli.parse_verdict_pretty(block) for block in outs["pretty"].strip().split("\n\n")]
    tsv = cli.parse_verdicts_tsv(outs["tsv"])
    return js, pretty, tsv


@pytest.mark.parametrize("argv", [(9, -5), (7, -7), (10, -10), (12, -20), (13, -9), (8, 4), (6, -3),
                                  (10,), (9,), (14,)])
def test_formats_encode_identical_data(capsys, argv):
    js, pretty, tsv = _three(capsys, "classify", *argv)
    assert js == pretty == tsv


def test_formats_identical_strict(capsys):
    js, pretty, tsv = _three(capsys, "classify", 16, "--mode", "strict")
    assert js == pretty == tsv


def test_json_matches_library(capsys):
    out = run(capsys, "classify", 14, -10, "--format", "json")[1]
    assert json.loads(out) == json.loads(json.dumps(obstruct.classify(14, -10).to_dict()))


def test_mode_env(capsys, monkeypatch):
    monkeypatch.setenv("LENSLAB_MODE", "strict")
    assert json.loads(run(capsys, "classify", 9, -5, "--format", "json")[1])["mode"] == "strict"
    assert json.loads(run(capsys, "classify", 9, -5, "--format", "json",
                          "--mode", "paper-faithful")[1])["mode"] == "paper-faithful"
    monkeypatch.setenv("LENSLAB_MODE", "weird")
    assert run(capsys, "classify", 9, -5)[0] == 2


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--n-max", 1)
    assert code == 0
    rows = [ln for ln in out.splitlines() if ln[:1].isdigit()]
    assert len(rows) == 2 and all("Realized" in r for r in rows)
    assert "Realized 2" in out
    code, out, _ = run(capsys, "table", "--n-max", 14, "--format", "tsv")
    body = [ln.split("\t") for ln in out.splitlines()[1:] if not ln.startswith("#")]
    assert [(int(r[0]), int(r[1])) for r in body] == [p for p in obstruct.pairs_up_to(14)]
    alive = {(int(r[0]), int(r[1])) for r in body if r[2] != "Obstructed"}
    assert (14, -10) in alive and (13, -9) not in alive
    assert "# unresolved (9,-5) (9,-9) (10,-10) (14,-10)" in out


def test_table_formats_agree(capsys):
    outs = {f: run(capsys, "table", "--n-max", 12, "--format", f)[1] for f in cli.FORMATS}
    js = json.loads(outs["json"])
    from_json = [(r["n"], r["s"], r["verdict"]) for r in js["rows"]]
    from_tsv = [(int(a), int(b), c) for a, b, c, *_ in
                (ln.split("\t") for ln in outs["tsv"].splitlines()[1:] if not ln.startswith("#"))]
    from_pretty = [(int(p[0]), int(p[1]), p[2]) for p in
                   (ln.split() for ln in outs["pretty"].splitlines() if ln[:1].isdigit())]
    assert from_json == from_tsv == from_pretty


def test_determinism(capsys):
    for argv in [("table", "--n-max", 20, "--format", "json"), ("classify", 30), ("d", 31, 7)]:
        assert run(capsys, *argv)[1] == run(capsys, *argv)[1]
    a = run(capsys, "table", "--n-max", 25, "--format", "tsv")[1]
    b = run(capsys, "table", "--n-max", 25, "--format", "tsv", "--jobs", 2)[1]
    assert a == b


def test_cone_command(capsys, fixture_path):
    assert run(capsys, "cone", fixture_path("figure4.cone"))[1] == "not L-space: violates (1),(3)\n"
    assert run(capsys, "cone", "--check", fixture_path("figure5.cone"))[1] == "L-space\n"
    assert run(capsys, "cone", "--rank", fixture_path("figure4.cone"))[1] == "5\n"
    assert run(capsys, "cone", "--N", 0, fixture_path("simple.cone"))[1] == "0\n"
    assert run(capsys, "cone", "--N", 4, fixture_path("star.cone"))[1] == "2\n"
    out = run(capsys, "cone", fixture_path("simple.cone"))[1]
    assert out.splitlines() == ["coset 0: L-space", "coset 1: L-space", "coset 2: L-space"]


def test_cone_errors(capsys, tmp_path, fixture_path):
    bad = tmp_path / "bad.cone"
    bad.write_text("g=2\n0 1 0\n1 0 0\n3 0 1\n")
    code, _, err = run(capsys, "cone", bad)
    assert code == 2 and "line 4" in err
    code, _, err = run(capsys, "cone", tmp_path / "missing.cone")
    assert code == 2
    code, _, err = run(capsys, "cone", "--N", 0, fixture_path("figure4.cone"))
    assert code == 2


def test_internal_breach_exit_1(capsys, monkeypatch):
    def boom(*a, **k):
        raise obstruct.InvariantBreach("forced")
    monkeypatch.setattr(obstruct, "classify", boom)
    code, _, err = run(capsys, "classify", 5, 1)
    assert code == 1 and "forced" in err


def test_entry_points():
    out = subprocess.run([sys.executable, "-m", "lenslab", "d", "3", "1"],
                         capture_output=True, text=True, check=True)
    assert out.stdout == "1/2 -1/6 -1/6\n"
    proc = subprocess.run([sys.executable, "-m", "lenslab", "classify", "0", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
