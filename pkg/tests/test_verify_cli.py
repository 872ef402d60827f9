"""Suite verifiers, report schema, CLI contract, and determinism."""

import json
import subprocess
import sys

import pytest

from tensorcert.cli import main, run_suite
from tensorcert.groebner import DEFAULT_STEP_BUDGET
from tensorcert.report import CertReport, emit_report, parse_report
from tensorcert.verify import (
    gen_set_case,
    knutson_case,
    oracle_equivalence_case,
    s3_invariance_case,
    squeeze_case,
    tensoriality_case,
    unit_not_tensorial_case,
)
from tensorcert.fleet import build_fleet
from tensorcert.xyz import Signature

BUDGET = DEFAULT_STEP_BUDGET


class TestVerifiers:
    def test_j_ideal_generator_ordering(self):
        # the division schedule depends on this exact list order
        from tensorcert.parse import parse_polynomial
        from tensorcert.verify import j_ideal_presentation
        from tensorcert.xyz import xyz_ring

        ring = xyz_ring(2, with_t=True)
        pres = j_ideal_presentation(Signature((1, -1)))
        expected = [
            "t*(y1 - z1)",
            "t*(y2 + z2)",
            "(1-t)*(z1 - x1)*(x1 - y1)",
            "(1-t)*(z1 - x1)*(x2 + y2)",
            "(1-t)*(z2 + x2)*(x1 - y1)",
            "(1-t)*(z2 + x2)*(x2 + y2)",
        ]
        assert list(pres.generators) == [parse_polynomial(t, ring) for t in expected]

    def test_gen_set_passes_small(self):
        for sig in Signature.sweep(2) + [Signature((-1,))]:
            case = gen_set_case(sig, BUDGET)
            assert case.status == "pass", case.witnesses
            assert case.details["structural_claims"]
            assert case.details["candidates_in_intersection"]
            assert case.details["intersection_in_candidates"]

    def test_gen_set_budget_exhaustion_is_reported(self):
        case = gen_set_case(Signature((1, 1)), budget_limit=5)
        assert case.status == "budget"

    def test_knutson_passes_small(self):
        for sig in Signature.sweep(2):
            case = knutson_case(sig, BUDGET)
            assert case.status == "pass", case.witnesses

    def test_squeeze_passes_small(self):
        for n in (1, 2):
            case = squeeze_case(n, BUDGET)
            assert case.status == "pass", case.witnesses

    def test_oracle_equivalence_small(self):
        case = oracle_equivalence_case(Signature((-1,)), BUDGET, samples=60)
        assert case.status == "pass", case.witnesses
        assert case.details["agreements"] == case.details["samples"]

    def test_oracle_case_is_deterministic(self):
        one = oracle_equivalence_case(Signature((1,)), BUDGET, samples=40)
        two = oracle_equivalence_case(Signature((1,)), BUDGET, samples=40)
        one.wall_time_ms = two.wall_time_ms = 0
        assert one == two

    def test_s3_invariance_small(self):
        for sig in (Signature((1,)), Signature((1, -1))):
            case = s3_invariance_case(sig, BUDGET)
            assert case.status == "pass", case.witnesses

    def test_tensoriality_case_small(self):
        fleet = {e.name: e for e in build_fleet()}
        case = tensoriality_case(fleet["diag-skew-n1"], bridge_samples=4)
        assert case.status == "pass", case.witnesses
        assert case.details["candidate_members_tensorial"]

    def test_unit_case(self):
        assert unit_not_tensorial_case().status == "pass"


class TestReport:
    def build(self):
        return run_suite("knutson", 1)

    def test_exit_code_pass(self):
        assert self.build().exit_code() == 0

    def test_json_roundtrip_modulo_timing(self):
        report = self.build()
        parsed = parse_report(emit_report(report, "json"))
        for case in report.cases + parsed.cases:
            case.wall_time_ms = 0
        assert parsed.to_dict() == report.to_dict()

    def test_empty_report_is_valid_json(self):
        report = CertReport(
            suite="gen-set",
            n_max=1,
            signatures="all",
            order_description="none",
            step_budget=BUDGET,
            workers=1,
        )
        data = json.loads(emit_report(report, "json"))
        assert data["cases"] == []
        assert data["summary"]["total"] == 0

    def test_text_format_mentions_every_case(self):
        report = self.build()
        text = emit_report(report, "text")
        for case in report.cases:
            assert case.case_id in text

    def test_determinism_modulo_timing(self):
        first, second = self.build(), self.build()
        for case in first.cases + second.cases:
            case.wall_time_ms = 0
        assert first.to_dict() == second.to_dict()

    def test_failing_case_witnesses_parse(self):
        from tensorcert.parse import parse_polynomial
        from tensorcert.verify import CaseResult
        from tensorcert.xyz import xyz_ring

        case = CaseResult(
            case_id="demo",
            suite="gen-set",
            claim="demo",
            n=1,
            signature="+",
            status="fail",
            witnesses=["x1^2*y1 - x1^2*z1"],
        )
        report = CertReport(
            suite="gen-set",
            n_max=1,
            signatures="all",
            order_description="demo",
            step_budget=BUDGET,
            workers=1,
            cases=[case],
        )
        parsed = parse_report(emit_report(report, "json"))
        witness = parsed.cases[0].witnesses[0]
        assert not parse_polynomial(witness, xyz_ring(1)).is_zero()
        assert report.exit_code() == 1


class TestCli:
    def test_certify_knutson_exit_zero(self, capsys, tmp_path):
        out = tmp_path / "report.json"
        code = main(
            [
                "certify",
                "--suite",
                "knutson",
                "--n",
                "1",
                "--out",
                str(out),
                "--format",
                "json",
            ]
        )
        assert code == 0
        data = json.loads(out.read_text())
        assert data["summary"]["pass"] == data["summary"]["total"] == 2
        printed = json.loads(capsys.readouterr().out)
        assert printed["suite"] == "knutson"

    def test_gen_set_sweep_has_fourteen_cases(self, capsys):
        code = main(["certify", "--suite", "gen-set", "--n", "3", "--format", "json"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["summary"]["total"] == 2 + 4 + 8
        assert data["summary"]["pass"] == 14

    def test_gen_set_explicit_signature(self, capsys):
        code = main(["certify", "--suite", "gen-set", "--n", "1", "--sig", "-", "--format", "json"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["summary"]["total"] == 1
        assert data["cases"][0]["case_id"] == "gen-set/N1/-"

    def test_bad_signature_is_config_error(self, capsys):
        assert main(["certify", "--suite", "gen-set", "--n", "1", "--sig", "+?"]) == 3

    def test_sig_longer_than_n_is_config_error(self):
        assert main(["certify", "--suite", "gen-set", "--n", "1", "--sig", "++"]) == 3

    def test_budget_exhaustion_exit_two(self, capsys):
        code = main(
            ["certify", "--suite", "gen-set", "--n", "2", "--sig", "++", "--budget", "10"]
        )
        assert code == 2

    def test_env_budget_override(self, capsys, monkeypatch):
        monkeypatch.setenv("CERTIFY_BUDGET", "10")
        code = main(["certify", "--suite", "gen-set", "--n", "2", "--sig", "++"])
        assert code == 2
        monkeypatch.setenv("CERTIFY_BUDGET", "not-a-number")
        assert main(["certify", "--suite", "gen-set", "--n", "1"]) == 3

    def test_gens_output_parses(self, capsys):
        code = main(["gens", "--n", "2", "--sig", "++"])
        assert code == 0
        from tensorcert.parse import parse_polynomial
        from tensorcert.xyz import xyz_ring

        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 9  # 8 torsions + 1 quadratic
        ring = xyz_ring(2)
        for line in lines:
            parse_polynomial(line, ring)

    def test_gb_command(self, tmp_path, capsys):
        ideal = tmp_path / "ideal.txt"
        ideal.write_text("# a toy ideal\nx1 - y1\nx1 - z1\n")
        code = main(["gb", "--ideal", str(ideal), "--order", "desc"])
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == ["y1 - z1", "x1 - z1"]

    def test_intersect_command(self, tmp_path, capsys):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text("y1 + z1\n")
        b.write_text("(z1+x1)*(x1+y1)\n")
        code = main(["intersect", "--a", str(a), "--b", str(b)])
        assert code == 0
        out = capsys.readouterr().out.strip()
        from tensorcert.parse import parse_polynomial
        from tensorcert.poly import monic
        from tensorcert.xyz import letter_block_order, xyz_ring

        ring = xyz_ring(1)
        expected = parse_polynomial("(x1+y1)*(y1+z1)*(z1+x1)", ring)
        got = parse_polynomial(out, ring)
        order = letter_block_order(1)
        assert monic(got, order) == monic(expected, order)

    def test_console_script_installed(self):
        proc = subprocess.run(
            [sys.executable, "-m", "tensorcert.cli", "certify", "--suite", "knutson", "--n", "1"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0

    def test_parallel_workers_match_serial(self):
        serial = run_suite("knutson", 2, workers=1)
        parallel = run_suite("knutson", 2, workers=2)
        for case in serial.cases + parallel.cases:
            case.wall_time_ms = 0
        assert [c.to_dict() for c in serial.sorted_cases()] == [
            c.to_dict() for c in parallel.sorted_cases()
        ]
