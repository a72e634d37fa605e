import json

import pytest

from glpgalois.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestNp:
    def test_golden(self, capsys):
        code, out, _ = run(capsys, "np", "--poly", "6,18,9,1", "--prime", "3")
        assert code == 0
        assert out.splitlines() == [
            "slope=-1/3 length=3 from=(0,1) to=(3,0)",
            "vertices: (0,1) (3,0)",
        ]

    def test_json_mirror(self, capsys):
        _, out, _ = run(capsys, "np", "--poly", "6,18,9,1", "--prime", "3", "--json")
        data = json.loads(out)
        assert data["segments"] == [
            {"slope": "-1/3", "length": 3, "from": [0, 1], "to": [3, 0]}
        ]
        assert data["vertices"] == [[0, 1], [3, 0]]

    def test_domain_error_exit_1(self, capsys):
        code, _, err = run(capsys, "np", "--poly", "0,1", "--prime", "3")
        assert code == 1
        assert err.startswith("error:")

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["np", "--poly", "1,1", "--prime", "3", "--bogus"])
        assert exc.value.code == 2


class TestIndex:
    def test_golden(self, capsys):
        code, out, _ = run(capsys, "index", "--poly", "6,18,9,1", "--json")
        assert code == 0
        assert json.loads(out) == {
            "index": 6,
            "witnesses": {"2": ["-1/2"], "3": ["-1/3"]},
        }

    def test_human(self, capsys):
        _, out, _ = run(capsys, "index", "--poly", "6,18,9,1")
        assert out.splitlines() == ["index=6", "p=2 slopes=-1/2", "p=3 slopes=-1/3"]


class TestCertify:
    def test_golden(self, capsys):
        code, out, _ = run(
            capsys, "certify", "--poly", "6,18,9,1", "--assume-irreducible", "--json"
        )
        assert code == 0
        assert json.loads(out) == {
            "verdict": "index_divides_order_only",
            "n": 3,
            "shift": "0",
            "valuation_prime": None,
            "slope": None,
            "window_prime": None,
            "newton_index": 6,
            "irreducibility_basis": "assumed",
        }

    def test_shifts_flag(self, capsys):
        code, out, _ = run(
            capsys, "certify", "--poly=-1,0,1", "--shifts", "0,1/2", "--json"
        )
        assert code == 0
        assert json.loads(out)["verdict"] in ("inconclusive", "index_divides_order_only")


class TestFrobenius:
    def test_single_prime(self, capsys):
        code, out, _ = run(capsys, "frobenius", "--poly", "1,0,1", "--prime", "5")
        assert code == 0
        assert out.splitlines() == [
            "p=5 type=[1,1] parity=even",
            "verdict=all-even-so-far",
        ]

    def test_samples_json(self, capsys):
        _, out, _ = run(
            capsys, "frobenius", "--poly", "1,0,1", "--frobenius-samples", "3", "--json"
        )
        data = json.loads(out)
        assert [s["p"] for s in data["samples"]] == [3, 5, 7]
        assert data["verdict"] == "contains-odd-permutation"


class TestGlpClassify:
    def test_golden(self, capsys):
        code, out, _ = run(
            capsys,
            "glp-classify", "--n", "9", "--alpha", "0", "--assume-irreducible", "--json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["group"] == "S_n"
        assert data["criterion_prime"] == 5
        assert data["certificate"]["slope"] == "-1/5"

    def test_bad_alpha_exit_1(self, capsys):
        code, _, err = run(capsys, "glp-classify", "--n", "5", "--alpha", "-2")
        assert code == 1
        assert "error:" in err


class TestGlpDisc:
    def test_golden(self, capsys):
        code, out, _ = run(
            capsys, "glp-disc", "--n", "3", "--alpha", "1", "--verify-resultant"
        )
        assert code == 0
        assert out.strip() == "5184 square=true verified=true"

    def test_json(self, capsys):
        _, out, _ = run(capsys, "glp-disc", "--n", "3", "--alpha", "0", "--json")
        assert json.loads(out) == {
            "n": 3,
            "alpha": "0",
            "discriminant": "1944",
            "square": False,
        }


class TestGlpScan:
    def test_streams_in_order(self, capsys):
        code, out, _ = run(
            capsys,
            "glp-scan", "--n-from", "9", "--n-to", "12", "--alpha", "0",
            "--assume-irreducible", "--jobs", "1",
        )
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert [d["n"] for d in lines] == [9, 10, 11, 12]
        assert all(d["group"] == "S_n" for d in lines)

    def test_deterministic(self, capsys):
        args = ["glp-scan", "--n-from", "9", "--n-to", "10", "--alpha", "1",
                "--assume-irreducible", "--jobs", "1"]
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second
