import json
import subprocess
import sys

import pytest

from covrough import cov, covering_from_json, covering_to_dict, reduct
from covrough.cli import run


@pytest.fixture
def write_file(tmp_path):
    def _write(c, name="covering.json"):
        path = tmp_path / name
        path.write_text(json.dumps(covering_to_dict(c)))
        return str(path)

    return _write


def run_ok(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return captured.out


class TestCovCommand:
    def test_output_is_the_neighborhoods_file(self, capsys, write_file, overlapping_pair):
        out = run_ok(capsys, ["cov", write_file(overlapping_pair)])
        assert covering_from_json(out) == cov(overlapping_pair)

    def test_fixed_point_echoes_input(self, capsys, write_file, fixed_non_partition):
        out = run_ok(capsys, ["cov", write_file(fixed_non_partition)])
        assert covering_from_json(out) == fixed_non_partition


class TestReduceCommand:
    def test_removes_reducible_blocks(self, capsys, write_file, redundant_union, singletons3):
        out = run_ok(capsys, ["reduce", write_file(redundant_union)])
        assert covering_from_json(out) == singletons3
        assert covering_from_json(out) == reduct(redundant_union)


class TestAnalyzeCommand:
    def test_classification_line(self, capsys, write_file, fixed_non_partition):
        out = run_ok(capsys, ["analyze", write_file(fixed_non_partition)])
        assert "partition: no" in out
        assert "invariable: yes" in out
        assert "Cov(C)=C: yes" in out

    def test_runs_are_byte_identical(self, capsys, write_file, nested_with_tail):
        path = write_file(nested_with_tail)
        first = run_ok(capsys, ["analyze", path, "--lambda"])
        second = run_ok(capsys, ["analyze", path, "--lambda"])
        assert first == second

    def test_json_matches_text_verdicts(self, capsys, write_file, fixed_non_partition):
        path = write_file(fixed_non_partition)
        text = run_ok(capsys, ["analyze", path])
        data = json.loads(run_ok(capsys, ["analyze", path, "--json"]))
        cls = data["classification"]
        assert ("partition: yes" in text) == cls["partition"]
        assert ("invariable: yes" in text) == cls["invariable"]
        assert ("Cov(C)=C: yes" in text) == cls["cov_fixed_point"]
        assert data["cov_equals_covering"] is True

    def test_lambda_flag_controls_matrix(self, capsys, write_file, chain_of_overlaps):
        path = write_file(chain_of_overlaps)
        bare = json.loads(run_ok(capsys, ["analyze", path, "--json"]))
        assert bare["lambda"] is None
        full = json.loads(run_ok(capsys, ["analyze", path, "--json", "--lambda"]))
        assert full["lambda"]["matrix"][2][3] == 2

    def test_json_round_trips_covering(self, capsys, write_file, nested_with_tail):
        data = json.loads(run_ok(capsys, ["analyze", write_file(nested_with_tail), "--json"]))
        assert covering_from_json(json.dumps(data["covering"])) == nested_with_tail


class TestCheckNeighborhoodsCommand:
    def test_fixed_point(self, capsys, write_file, fixed_non_partition):
        assert "IS a neighborhoods" in run_ok(
            capsys, ["check-neighborhoods", write_file(fixed_non_partition)]
        )

    def test_not_fixed_point(self, capsys, write_file, overlapping_pair):
        out = run_ok(capsys, ["check-neighborhoods", write_file(overlapping_pair)])
        assert "is NOT a neighborhoods" in out

    def test_quick_reject_reason_shown(self, capsys, write_file, redundant_union):
        out = run_ok(capsys, ["check-neighborhoods", write_file(redundant_union)])
        assert "is NOT a neighborhoods" in out
        assert "more blocks than universe elements" in out


class TestPreimagesCommand:
    def test_lists_one_covering_per_line(self, capsys, write_file, singletons3):
        out = run_ok(capsys, ["preimages", write_file(singletons3)])
        lines = out.splitlines()
        assert len(lines) == 36
        parsed = [covering_from_json(line) for line in lines]
        assert singletons3 in parsed

    def test_limit(self, capsys, write_file, singletons3):
        out = run_ok(capsys, ["preimages", write_file(singletons3), "--limit", "4"])
        assert len(out.splitlines()) == 4

    def test_empty_for_non_fixed_point(self, capsys, write_file, overlapping_pair):
        assert run_ok(capsys, ["preimages", write_file(overlapping_pair)]) == ""


class TestVerifyCommand:
    def test_json_summary(self, capsys):
        data = json.loads(run_ok(capsys, ["verify", "--n", "3", "--json"]))
        assert data == {
            "n": 3,
            "total": 109,
            "partitions": 5,
            "irreducible": 45,
            "invariable": 29,
            "fixed_points": 29,
            "violations": [],
        }

    def test_human_summary(self, capsys):
        out = run_ok(capsys, ["verify", "--n", "1"])
        assert "coverings checked:  1" in out
        assert "violations:         0" in out

    def test_refuses_huge_universe(self, capsys):
        assert run(["verify", "--n", "5"]) == 1
        assert "allow_large" in capsys.readouterr().err

    def test_exit_one_when_laws_fail(self, capsys, monkeypatch):
        from covrough import oracle

        monkeypatch.setattr(
            oracle, "_reducible_flags", lambda masks: [False] * len(masks)
        )
        assert run(["verify", "--n", "2"]) == 1
        out = capsys.readouterr().out
        assert "invariable-iff-fixed-point" in out


class TestErrorHandling:
    def test_missing_file(self, capsys):
        assert run(["cov", "/no/such/file.json"]) == 1
        assert "file not found" in capsys.readouterr().err

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert run(["cov", str(path)]) == 1
        assert "malformed JSON" in capsys.readouterr().err

    def test_validation_error_names_block(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"universe": ["1", "2"], "blocks": [["1"], ["7"]]}')
        assert run(["cov", str(path)]) == 1
        err = capsys.readouterr().err
        assert "#1" in err and "'7'" in err

    def test_not_a_cover_reported(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"universe": ["1", "2"], "blocks": [["1"]]}')
        assert run(["cov", str(path)]) == 1
        assert "misses element" in capsys.readouterr().err

    def test_usage_error(self, capsys):
        assert run(["frobnicate"]) == 2
        assert run([]) == 2
        capsys.readouterr()


class TestEntryPoint:
    def test_module_invocation(self, tmp_path, fixed_non_partition):
        path = tmp_path / "c.json"
        path.write_text(json.dumps(covering_to_dict(fixed_non_partition)))
        proc = subprocess.run(
            [sys.executable, "-m", "covrough", "check-neighborhoods", str(path)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "IS a neighborhoods" in proc.stdout
