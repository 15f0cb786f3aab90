import json

import pytest

from hesschrom.cli import run


def capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestXg:
    def test_text_output(self, capsys):
        code, out, _ = capture(capsys, ["xg", "--n", "3", "--m", "2,3", "--basis", "m"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines == [
            "m[2,1]  t",
            "m[1,1,1]  1 + 4*t + t^2",
        ]

    def test_json_output(self, capsys):
        code, out, _ = capture(capsys, ["xg", "--m", "2,3", "--json"])
        assert code == 0
        data = json.loads(out)
        assert data["degree"] == 3 and data["basis"] == "m"
        assert data["terms"][0] == {"partition": [2, 1], "poly": [[1, "1"]]}

    def test_m_basis_flag(self, capsys):
        code, out, _ = capture(capsys, ["xg", "--m", "2", "--basis", "M"])
        assert code == 0
        assert out.strip() == "M(1,1)  1 + t"

    def test_deterministic(self, capsys):
        argv = ["xg", "--m", "2,3,4", "--json"]
        _, first, _ = capture(capsys, argv)
        _, second, _ = capture(capsys, argv)
        assert first == second

    def test_json_round_trip(self, capsys):
        _, out, _ = capture(capsys, ["xg", "--m", "2,3", "--json"])
        assert json.dumps(json.loads(out)) == out.strip()


class TestOmegaXg:
    def test_matches_identity_shape(self, capsys):
        code, out, _ = capture(capsys, ["omega-xg", "--m", "2", "--json"])
        assert code == 0
        data = json.loads(out)
        assert data["terms"] == [
            {"partition": [2], "poly": [[0, "1"], [1, "1"]]},
            {"partition": [1, 1], "poly": [[0, "1"], [1, "1"]]},
        ]


class TestXi:
    def test_explicit_digraph(self, capsys):
        code, out, _ = capture(capsys, ["xi", "--edges", "1>2,2>1"])
        assert code == 0
        assert out.strip().splitlines() == ["M(1,1)  1 + t", "M(2)  1 + t"]

    def test_isolated_vertices(self, capsys):
        code, out, _ = capture(capsys, ["xi", "--vertices", "1,2"])
        assert code == 0
        assert out.strip() == "M(1,1)  1 + t"


class TestBetti:
    def test_valid(self, capsys):
        code, out, _ = capture(capsys, ["betti", "--m", "2,3", "--lambda", "2,1"])
        assert code == 0
        assert out.strip().splitlines() == [
            "beta[0] = 1",
            "beta[2] = 3",
            "beta[4] = 1",
        ]

    def test_invalid_hessenberg_exits_2(self, capsys):
        code, _, err = capture(capsys, ["betti", "--m", "3,2", "--lambda", "2,1"])
        assert code == 2
        assert "error" in err


class TestCharacter:
    def test_values(self, capsys):
        code, out, _ = capture(capsys, ["character", "--m", "2", "--d", "0"])
        assert code == 0
        assert out.strip().splitlines() == ["chi[2] = 1", "chi[1,1] = 1"]


class TestEnumerate:
    def test_text(self, capsys):
        code, out, _ = capture(capsys, ["enumerate", "--n", "3"])
        assert code == 0
        assert out.strip().splitlines() == ["(1,2)", "(1,3)", "(2,2)", "(2,3)", "(3,3)"]

    def test_guard_exit_2(self, capsys):
        code, _, err = capture(capsys, ["enumerate", "--n", "9"])
        assert code == 2
        assert "guard" in err

    def test_force(self, capsys):
        code, out, _ = capture(capsys, ["enumerate", "--n", "9", "--force", "--json"])
        assert code == 0
        assert json.loads(out)["count"] == 4862


class TestVerify:
    def test_pass(self, capsys):
        code, out, _ = capture(
            capsys, ["verify", "--suite", "sw", "--max-n", "3", "--json"]
        )
        assert code == 0
        report = json.loads(out)
        assert report["suite"] == "sw" and report["failures"] == []

    def test_reciprocity_with_seed(self, capsys):
        code, out, _ = capture(
            capsys, ["verify", "--suite", "reciprocity", "--max-n", "3", "--seed", "7"]
        )
        assert code == 0
        assert out.startswith("PASS")


class TestUsageErrors:
    def test_unknown_flag(self, capsys):
        assert run(["xg", "--bogus"]) == 2
        capsys.readouterr()

    def test_unknown_command(self, capsys):
        assert run(["frobnicate"]) == 2
        capsys.readouterr()
