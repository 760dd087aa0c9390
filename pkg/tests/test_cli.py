"""Command-line interface: golden outputs and exit codes."""

import json

import pytest

from jordanable.cli import main


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out.strip()


BIANCHI = [
    {"p": [-1, 1], "n": 1, "mult": 1},
    {"p": [1, 1], "n": 1, "mult": 1},
]


class TestLieVerbs:
    def test_casimir_golden(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", BIANCHI)
        code, out = run(capsys, ["lie", "casimir", "--aleph", a])
        assert code == 0
        assert out == '{"dim":1,"basis":[[[0,1],[1,0]]]}'

    def test_casimir_pretty(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", BIANCHI)
        code, out = run(capsys, ["lie", "casimir", "--aleph", a, "--pretty"])
        assert code == 0
        assert out == "Q = 2*x1*x2"

    def test_centre(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", [{"p": [0, 1], "n": 2, "mult": 1}])
        code, out = run(capsys, ["lie", "centre", "--aleph", a])
        assert code == 0
        data = json.loads(out)
        assert data["dim"] == 1
        assert data["basis"][0]["vector"] == [0, 1, 0]

    def test_nilpotent_and_decompose(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", BIANCHI)
        assert run(capsys, ["lie", "nilpotent", "--aleph", a]) == (
            0,
            '{"nilpotent":false}',
        )
        code, out = run(capsys, ["lie", "decompose", "--aleph", a])
        assert code == 0
        assert json.loads(out)["w_dim"] == 0

    def test_lcs(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", [{"p": [0, 1], "n": 3, "mult": 1}])
        code, out = run(capsys, ["lie", "lcs", "--aleph", a, "--k", "2"])
        assert code == 0
        assert json.loads(out)["dim"] == 1

    def test_aut_families(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", BIANCHI)
        code, out = run(capsys, ["lie", "aut", "--aleph", a])
        assert code == 0
        data = json.loads(out)
        assert data["dil"]["elements"] == ["-1", "1"]
        assert len(data["families"]) == 2

    def test_der_dim(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", BIANCHI)
        code, out = run(capsys, ["lie", "der", "--aleph", a])
        assert code == 0
        assert json.loads(out)["dim"] == 4

    def test_heisenberg_exit_2(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", [{"p": [0, 1], "n": 2, "mult": 1}])
        code, out = run(capsys, ["lie", "der", "--aleph", a])
        assert code == 2
        data = json.loads(out)
        assert data["code"]
        assert "message" in data and "context" in data

    def test_classify(self, tmp_path, capsys):
        m1 = write(tmp_path, "m1.json", [[1, 0], [0, -1]])
        m2 = write(tmp_path, "m2.json", [[2, 0], [0, -2]])
        code, out = run(capsys, ["lie", "classify", m1, m2])
        assert code == 0
        data = json.loads(out)
        assert data["isomorphic"] is True
        assert data["lambda"] == "2"


class TestMatrixVerbs:
    def test_jordanize(self, tmp_path, capsys):
        m = write(tmp_path, "m.json", [[0, 1], [1, 0]])
        code, out = run(capsys, ["jordanize", m])
        assert code == 0
        data = json.loads(out)
        assert data["J"] == [[1, 0], [0, -1]]
        assert data["display"] == "(1×(X - 1)^1, 1×(X + 1)^1)"

    def test_extract_mult(self, tmp_path, capsys):
        m = write(tmp_path, "m.json", [[0, 1], [0, 0]])
        code, out = run(capsys, ["extract-mult", m])
        assert code == 0
        assert json.loads(out)["aleph"] == [{"p": [0, 1], "n": 2, "mult": 1}]

    def test_extract_needs_hint_exit_2(self, tmp_path, capsys):
        m = write(
            tmp_path,
            "m.json",
            [[0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]],
        )
        code, out = run(capsys, ["extract-mult", m])
        assert code == 2
        assert json.loads(out)["code"]

    def test_extract_with_hint(self, tmp_path, capsys):
        m = write(
            tmp_path,
            "m.json",
            [[0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]],
        )
        h = write(tmp_path, "h.json", [[1, 0, 0, 0, 1]])
        code, out = run(capsys, ["extract-mult", m, "--hints", h])
        assert code == 0
        assert json.loads(out)["aleph"] == [{"p": [1, 0, 0, 0, 1], "n": 1, "mult": 1}]

    def test_classify_non_isomorphic(self, tmp_path, capsys):
        m1 = write(tmp_path, "m1.json", [[1, 0], [0, -1]])
        m2 = write(tmp_path, "m2.json", [[1, 0], [0, 2]])
        assert run(capsys, ["classify", m1, m2]) == (0, '{"isomorphic":false}')


class TestSolveVerbs:
    def test_xt_ltx(self, tmp_path, capsys):
        m = write(tmp_path, "m.json", [[1, 0], [0, -1]])
        code, out = run(capsys, ["solve", "xt-ltx", m, "--lambda", "-1"])
        assert code == 0
        assert json.loads(out)["dim"] == 2

    def test_yt_ty_t_unsolvable(self, tmp_path, capsys):
        m = write(tmp_path, "m.json", [[1, 0], [0, -1]])
        assert run(capsys, ["solve", "yt-ty-t", m]) == (0, '{"solvable":false}')

    def test_yt_ty_t_solvable(self, tmp_path, capsys):
        m = write(tmp_path, "m.json", [[0, 1], [0, 0]])
        code, out = run(capsys, ["solve", "yt-ty-t", m])
        assert code == 0
        data = json.loads(out)
        assert data["solvable"] is True
        assert data["offset"] == [[1, 0], [0, 0]]

    def test_zjt(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", BIANCHI)
        code, out = run(capsys, ["solve", "zjt", "--aleph", a])
        assert code == 0
        assert json.loads(out)["dim"] == 2

    def test_epsilon_misuse_exit_2(self, tmp_path, capsys):
        # X^2 - 2 has no rotation-scaling form
        a = write(tmp_path, "a.json", [{"p": [-2, 0, 1], "n": 1, "mult": 1}])
        code, out = run(capsys, ["solve", "zjt", "--aleph", a, "--epsilon", "0"])
        assert code == 2


class TestOracleVerbs:
    def test_solve_spec(self, tmp_path, capsys):
        spec = write(
            tmp_path,
            "spec.json",
            {"kind": "lambda-comm", "t": [[1, 0], [0, -1]], "lambda": -1},
        )
        code, out = run(capsys, ["oracle", "solve", spec])
        assert code == 0
        assert json.loads(out)["dim"] == 2

    def test_random(self, capsys):
        code, out = run(capsys, ["oracle", "random", "--seed", "3"])
        assert code == 0
        data = json.loads(out)
        assert {"aleph", "J", "S", "T"} <= set(data)


class TestInvsubVerbs:
    def test_check_line(self, tmp_path, capsys):
        m = write(tmp_path, "m.json", [[1, 0], [0, -1]])
        w = write(tmp_path, "w.json", {"basis": [[1, 0]]})
        code, out = run(capsys, ["invsub", "check", m, w])
        assert code == 0
        data = json.loads(out)
        assert data["invariant"] is True
        assert data["aleph"] == [{"p": [-1, 1], "n": 1, "mult": 1}]

    def test_check_not_invariant(self, tmp_path, capsys):
        m = write(tmp_path, "m.json", [[0, 1], [0, 0]])
        w = write(tmp_path, "w.json", [[0, 1]])
        assert run(capsys, ["invsub", "check", m, w]) == (0, '{"invariant":false}')

    def test_make(self, tmp_path, capsys):
        a = write(tmp_path, "a.json", BIANCHI)
        spec = write(
            tmp_path,
            "spec.json",
            {
                "beth": [{"p": [-1, 1], "n": 1, "mult": 1}],
                "mu": [
                    {
                        "p": [-1, 1],
                        "n": 1,
                        "beta": 0,
                        "k": 1,
                        "alpha": 0,
                        "shift": 0,
                        "value": 1,
                    }
                ],
            },
        )
        code, out = run(capsys, ["invsub", "make", spec, "--aleph", a])
        assert code == 0
        assert json.loads(out)["basis"] == [[1, 0]]


class TestErrorPaths:
    def test_missing_file_exit_1(self, capsys):
        code, out = run(capsys, ["extract-mult", "/nonexistent/m.json"])
        assert code == 1
        assert json.loads(out)["code"] == "input-error"

    def test_bad_json_exit_1(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, out = run(capsys, ["extract-mult", str(path)])
        assert code == 1

    def test_bad_matrix_exit_1(self, tmp_path, capsys):
        m = write(tmp_path, "m.json", [[1, 2], [3]])
        code, _out = run(capsys, ["extract-mult", m])
        assert code == 1
