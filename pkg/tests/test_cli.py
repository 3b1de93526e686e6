import json

import pytest

from equivariant_sw import fixtures
from equivariant_sw.cli import main, render
from equivariant_sw.modelfile import dumps, model_to_dict


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_model(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


K3_DOC = {"label": "k3", "p": 3, "a": [3, 1, 1], "b": [1, 1, 1], "h0": 3, "h": [0, 0, 0], "r0": 0, "r": [0, 0, 0]}


# ----------------------------------------------------------- dims


def test_dims_k3(capsys):
    code, out, _ = run(capsys, "dims", "fixtures/k3-fermat-z3", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["d"] == 0
    assert [row["d_lift"] for row in doc["lifts"]] == [0, -4, -4]


def test_dims_zhang_warns_about_chambers(capsys):
    code, out, _ = run(capsys, "dims", "fixtures/zhang-z3")
    assert code == 0
    assert "[WARN] b_plus_fixed" in out
    code, out, _ = run(capsys, "dims", "fixtures/zhang-z3", "--json")
    assert [row["d_lift"] for row in json.loads(out)["lifts"]] == [-2, 0, 0]


def test_dims_malformed_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"p": 3,\n "a": [1, 2]\n')
    code, _, err = run(capsys, "dims", str(path))
    assert code == 2
    assert "line" in err


def test_dims_wrong_length_reports_field(capsys, tmp_path):
    doc = dict(K3_DOC, a=[3, 1])
    code, _, err = run(capsys, "dims", write_model(tmp_path, "short.json", doc))
    assert code == 2
    assert "a" in err


def test_unknown_model(capsys):
    code, _, err = run(capsys, "dims", "fixtures/no-such-thing")
    assert code == 2


# ----------------------------------------------------------- mult


def test_mult_examples(capsys):
    for name, expected in [("zhang-z3", [0, 1, 2]), ("k3-fermat-z3", [1, 0, 0]), ("z5-local", [4, 0, 0, 0, 0])]:
        code, out, _ = run(capsys, "mult", f"fixtures/{name}", "--json")
        assert code == 0
        assert [row["value"] for row in json.loads(out)["multiplicities"]] == expected


def test_mult_all_matchings_z5(capsys):
    code, out, _ = run(capsys, "mult", "fixtures/z5-local", "--all-matchings", "--json")
    assert code == 0
    doc = json.loads(out)
    lift0 = doc["multiplicities"][0]
    assert lift0["all_agree"]
    assert sorted(tuple(m["exponents"]) for m in lift0["matchings"]) == [(2, 2), (3, 3)]
    assert {m["value"] for m in lift0["matchings"]} == {4}


def test_mult_single_lift(capsys):
    code, out, _ = run(capsys, "mult", "fixtures/zhang-z3", "--lift", "2", "--json")
    assert code == 0
    rows = json.loads(out)["multiplicities"]
    assert [(r["j"], r["value"]) for r in rows] == [(2, 2)]


def test_mult_positive_dimension(capsys, tmp_path):
    doc = dict(K3_DOC, b=[0, 1, 1], h0=1)
    code, _, err = run(capsys, "mult", write_model(tmp_path, "pos.json", doc))
    assert code == 3
    assert "positive-dimension" in err


def test_mult_corrupted_fixture(capsys, tmp_path):
    doc = model_to_dict(fixtures.get("k3-fermat-z3").model())
    doc["h"] = [0, 1, 0]
    code, _, err = run(capsys, "mult", write_model(tmp_path, "corrupt.json", doc))
    assert code == 3
    assert "dim V_r" in err


# ----------------------------------------------------- congruence


def test_congruence_k3(capsys):
    code, out, _ = run(capsys, "congruence", "fixtures/k3-fermat-z3", "--json")
    rep = json.loads(out)["reports"][0]
    assert code == 0
    assert (rep["lhs"], rep["rhs"], rep["verdict"]) == (1, 1, "holds")


@pytest.mark.parametrize("chamber", ["plus", "minus"])
def test_congruence_zhang(capsys, chamber):
    code, out, _ = run(capsys, "congruence", "fixtures/zhang-z3", "--chamber", chamber, "--json")
    reps = json.loads(out)["reports"]
    assert code == 0
    assert len(reps) == 1 and reps[0]["chamber"] == chamber
    assert reps[0]["verdict"] == "holds"


def test_congruence_fails_exit_4(capsys, tmp_path):
    doc = dict(K3_DOC, sw={"total": 1, "lifts": [2, None, None]})
    code, out, _ = run(capsys, "congruence", write_model(tmp_path, "wrong.json", doc))
    assert code == 4
    assert "fails" in out


def test_congruence_underdetermined_exit_0(capsys, tmp_path):
    code, out, _ = run(capsys, "congruence", write_model(tmp_path, "nosw.json", K3_DOC))
    assert code == 0
    assert "underdetermined" in out


def test_congruence_solve(capsys, tmp_path):
    doc = dict(K3_DOC, sw={"total": 2, "lifts": [None, None, None]})
    code, out, _ = run(capsys, "congruence", write_model(tmp_path, "solve.json", doc), "--solve", "--json")
    assert code == 0
    solved = json.loads(out)["reports"][0]["solved"]
    assert solved["value"] == 2 and solved["target"] == "lift 0"


# ---------------------------------------------------------- oracle


def test_oracle_local_degree(capsys):
    code, out, _ = run(capsys, "oracle", "local-degree", "--model", "fixtures/z5-local", "--lift", "0", "--json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert {tuple(r["exponents"]) for r in rows} == {(2, 2), (3, 3)}
    for r in rows:
        assert r["residue"] == r["multiplicity"] == 4
        assert r["matches_multiplicity"] and r["newton_agrees"]


def test_oracle_newton(capsys):
    code, out, _ = run(capsys, "oracle", "newton", "--system", "systems/z2-minus-zbar", "--json")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["zeros"]) == 3
    assert doc["orbits"]["sizes"] == [3]


def test_oracle_free_check_small(capsys):
    code, out, _ = run(capsys, "oracle", "free-check", "--p", "3", "--trials", "5", "--seed", "7")
    assert code == 0
    assert "5/5" in out


def test_oracle_bad_system_file(capsys, tmp_path):
    path = tmp_path / "sys.json"
    path.write_text('{"p": 3}')
    code, _, _ = run(capsys, "oracle", "newton", "--system", str(path))
    assert code == 2


# -------------------------------------------------------- fixtures


def test_fixtures_list(capsys):
    code, out, _ = run(capsys, "fixtures", "list", "--json")
    assert code == 0
    assert [f["name"] for f in json.loads(out)["fixtures"]] == ["k3-fermat-z3", "zhang-z3", "z5-local"]


@pytest.mark.parametrize(
    "name,a,b,h0,h",
    [("zhang-z3", [1, 2, 2], [1, 1, 1], 1, [0, 1, 0]), ("k3-fermat-z3", [3, 1, 1], [1, 1, 1], 3, [0, 0, 0])],
)
def test_fixtures_show(capsys, name, a, b, h0, h):
    code, out, _ = run(capsys, "fixtures", "show", name, "--json")
    model = json.loads(out)["models"][0]
    assert code == 0
    assert (model["p"], model["a"], model["b"], model["h0"], model["h"]) == (3, a, b, h0, h)


def test_fixtures_show_text_is_model_file(capsys, tmp_path):
    code, out, _ = run(capsys, "fixtures", "show", "zhang-z3", "--chamber", "minus")
    path = tmp_path / "roundtrip.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "congruence", str(path), "--json")
    assert code == 0
    assert json.loads(out2)["reports"][0]["chamber"] == "minus"


def test_fixtures_unknown(capsys):
    code, _, _ = run(capsys, "fixtures", "show", "nope")
    assert code == 2


def test_shipped_fixture_files_match_builders():
    for path, name, chamber in [
        ("fixtures/k3-fermat-z3.json", "k3-fermat-z3", None),
        ("fixtures/z5-local.json", "z5-local", None),
        ("fixtures/zhang-z3-plus.json", "zhang-z3", "plus"),
        ("fixtures/zhang-z3-minus.json", "zhang-z3", "minus"),
    ]:
        with open(path) as fh:
            assert fh.read().strip() == dumps(fixtures.get(name).model(chamber=chamber)).strip()


def test_check_fixtures(capsys):
    code, out, _ = run(capsys, "check-fixtures", "--json")
    assert code == 0
    assert json.loads(out)["ok"]


# ------------------------------------------------------ round trip

ROUND_TRIP = [
    ("dims", "fixtures/k3-fermat-z3"),
    ("dims", "fixtures/zhang-z3", "--rank", "2"),
    ("mult", "fixtures/z5-local", "--all-matchings"),
    ("mult", "fixtures/zhang-z3"),
    ("congruence", "fixtures/zhang-z3"),
    ("congruence", "fixtures/k3-fermat-z3"),
    ("oracle", "local-degree", "--model", "fixtures/z5-local"),
    ("oracle", "newton", "--system", "systems/z2-minus-zbar"),
    ("oracle", "free-check", "--p", "5", "--trials", "3"),
    ("fixtures", "list"),
    ("fixtures", "show", "z5-local"),
    ("check-fixtures",),
]


@pytest.mark.parametrize("argv", ROUND_TRIP, ids=lambda a: " ".join(a))
def test_json_round_trip(capsys, argv):
    code_text, text, _ = run(capsys, *argv)
    code_json, raw, _ = run(capsys, *argv, "--json")
    assert code_text == code_json
    assert render(json.loads(raw)) == text.rstrip("\n")


def test_no_color_in_pipes(capsys, monkeypatch):
    monkeypatch.delenv("NO_COLOR", raising=False)
    _, out, _ = run(capsys, "congruence", "fixtures/k3-fermat-z3")
    assert "\x1b[" not in out
