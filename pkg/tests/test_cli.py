import json
from fractions import Fraction as F

from su3poly.cli import main, parse_number, parse_vector
from su3poly.polytope import ChamberPolytope, build_polytope_n3


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestParsing:
    def test_numbers(self):
        assert parse_number("4") == 4 and isinstance(parse_number("4"), int)
        assert parse_number("4/3") == F(4, 3)
        assert parse_number("-1.5") == -1.5 and isinstance(parse_number("-1.5"), float)

    def test_vector(self):
        assert parse_vector("4,2,-1") == (4, 2, -1)


class TestClassify:
    def test_region_c(self, capsys):
        code, out = run_cli(capsys, "classify", "--gamma", "4,2,-1")
        data = json.loads(out)
        assert code == 0
        assert data["label"] == "C" and data["starred"] is False

    def test_fraction_weights_stay_exact(self, capsys):
        _, out = run_cli(capsys, "classify", "--gamma", "4/3,2/3,-1/3")
        data = json.loads(out)
        assert data["sorted_gammas"] == ["4/3", "2/3", "-1/3"]

    def test_n2(self, capsys):
        _, out = run_cli(capsys, "classify", "--gamma", "1,-1")
        assert json.loads(out)["label"] == "TransF"


class TestPolytope:
    def test_json_roundtrip(self, capsys):
        _, out = run_cli(capsys, "polytope", "--gamma", "4,2,-1")
        parsed = ChamberPolytope.from_json_dict(json.loads(out))
        direct = build_polytope_n3((4, 2, -1))
        assert parsed.vertices == direct.vertices
        assert parsed.label == "C"

    def test_emit_cones(self, capsys):
        _, out = run_cli(capsys, "polytope", "--gamma", "1,1,1", "--emit-cones")
        data = json.loads(out)
        assert data["label"] == "AAA"
        assert data["cones"]["b"]["apex"] == ["0", "0", "0"]
        assert data["cones"]["a"]["generators"] == [{"kind": "line", "root": "alpha3"}]

    def test_svg(self, capsys):
        _, out = run_cli(capsys, "polytope", "--gamma", "1,1,1", "--format", "svg")
        assert out.startswith("<svg") and "polygon" in out and "</svg>" in out

    def test_byte_identical_reruns(self, capsys):
        _, out1 = run_cli(capsys, "polytope", "--gamma", "4,2,-1")
        _, out2 = run_cli(capsys, "polytope", "--gamma", "4,2,-1")
        assert out1 == out2


class TestSampleAndVerify:
    def test_sample_csv_deterministic(self, capsys):
        _, out1 = run_cli(capsys, "sample", "--gamma", "1,1,1", "--count", "50", "--seed", "3")
        _, out2 = run_cli(capsys, "sample", "--gamma", "1,1,1", "--count", "50", "--seed", "3")
        assert out1 == out2
        header, *rows = out1.strip().splitlines()
        assert header == "lambda1,lambda2,lambda3,p,q"
        assert len(rows) == 50

    def test_verify_exit_zero(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--gamma", "4,2,-1", "--count", "5000", "--seed", "7", "--tolerance", "1e-6"
        )
        assert code == 0
        assert json.loads(out)["n_violations"] == 0


class TestBounds:
    def test_two_matrices(self, capsys):
        _, out = run_cli(capsys, "bounds", "--lambdas", "1,1")
        data = json.loads(out)
        assert data["lambda1"] == 2 and data["lambda2_interval"] == [-1, 2]

    def test_three_matrices_with_target(self, capsys):
        _, out = run_cli(capsys, "bounds", "--lambdas", "1,1,1", "--target", "3,0,-3")
        data = json.loads(out)
        assert data["target_inside"] is True
        _, out = run_cli(capsys, "bounds", "--lambdas", "1,1,1", "--target", "4,0,-4")
        assert json.loads(out)["target_inside"] is False


class TestSweep:
    def test_b_to_a_transition(self, capsys):
        _, out = run_cli(capsys, "sweep", "--start", "7/2,2,1", "--end", "5/2,2,1", "--steps", "20")
        labels = [json.loads(line)["label"] for line in out.strip().splitlines()]
        assert labels[0] == "B" and labels[-1] == "A"
        assert labels.count("AB") == 1 and labels[10] == "AB"
        # monotone: no flicker back and forth
        assert labels == ["B"] * 10 + ["AB"] + ["A"] * 10
