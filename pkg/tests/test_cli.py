"""Command-line interface contract: exit codes, outputs, report files."""
from __future__ import annotations

import json
from pathlib import Path

import pytest

from ldckit.cli import main

ROOT = Path(__file__).resolve().parent.parent
VALID = ROOT / "fixtures" / "left-distributor.json"
INVALID = ROOT / "fixtures" / "reverse-distributor.json"


class TestValidate:
    def test_valid_circuit_exits_zero(self, capsys):
        assert main(["validate", str(VALID)]) == 0
        assert capsys.readouterr().out.strip().endswith("valid")

    def test_invalid_circuit_exits_two(self, capsys):
        assert main(["validate", str(INVALID)]) == 2
        assert capsys.readouterr().out.strip().endswith("invalid")

    def test_trace_is_json_lines(self, capsys):
        assert main(["validate", "--trace", str(VALID)]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[-1] == "valid"
        steps = [json.loads(line) for line in lines[:-1]]
        assert all("rule" in step for step in steps)

    def test_missing_file_exits_one(self, capsys):
        assert main(["validate", "/nonexistent/circuit.json"]) == 1

    def test_malformed_json_exits_one(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["validate", str(bad)]) == 1


class TestNormalize:
    def test_writes_reduced_circuit(self, tmp_path, capsys):
        src = ROOT / "fixtures" / "tensor-roundtrip.json"
        out = tmp_path / "reduced.json"
        assert main(["normalize", str(src), "-o", str(out)]) == 0
        doc = json.loads(out.read_text())
        before = json.loads(src.read_text())
        assert len(doc["nodes"]) < len(before["nodes"])


class TestRender:
    def test_emits_dot(self, capsys):
        assert main(["render", str(VALID)]) == 0
        out = capsys.readouterr().out
        assert out.startswith("digraph")

    def test_unknown_format_exits_one(self, capsys):
        assert main(["render", "--format", "svg", str(VALID)]) == 1


class TestCheck:
    def test_passing_suite_exits_zero(self, capsys):
        assert main(["check", "--suite", "complementary",
                     "--gadget", "qubit-zx"]) == 0
        out = capsys.readouterr().out
        assert out.strip().endswith("pass")
        assert "comp.1-left" in out

    def test_failing_suite_exits_two(self, capsys):
        assert main(["check", "--suite", "frobenius-coincidence",
                     "--gadget", "weil"]) == 2
        assert capsys.readouterr().out.strip().endswith("fail")

    def test_unknown_suite_exits_one(self, capsys):
        assert main(["check", "--suite", "no-such-suite",
                     "--gadget", "weil"]) == 1

    def test_unknown_gadget_exits_one(self, capsys):
        assert main(["check", "--suite", "dual",
                     "--gadget", "no-such-gadget"]) == 1

    def test_report_file(self, tmp_path, capsys):
        report = tmp_path / "report.json"
        assert main(["check", "--suite", "linear-monoid",
                     "--gadget", "quad4", "--report", str(report)]) == 0
        doc = json.loads(report.read_text())
        assert doc["suite"] == "linear-monoid"
        assert doc["pass"] is True
        assert {e["label"] for e in doc["equations"]} \
            >= {"assoc", "unit-left", "unit-right"}


class TestSplit:
    def test_binary_split_reports_rank(self, tmp_path, capsys):
        # a gadget whose u, v roles form a binary idempotent
        import numpy as np
        from ldckit.fixtures import load_gadget
        from ldckit.gadget import Gadget, gadget_to_json
        qz = load_gadget("qubit-zx")
        e = qz.morphism("u") @ qz.morphism("k")
        g = Gadget("binary_idempotent", dict(qz.objects),
                   {"u": e, "v": e}, qz.env)
        path = tmp_path / "binary.json"
        path.write_text(json.dumps(gadget_to_json(g)))
        assert main(["split", "--gadget", str(path), "--kind", "binary"]) == 0
        assert "rank 1" in capsys.readouterr().out

    def test_missing_roles_exit_one(self, capsys):
        assert main(["split", "--gadget", "qubit-zx",
                     "--kind", "binary"]) == 1


class TestExpDemo:
    def test_full_pipeline_at_low_degree(self, capsys):
        assert main(["exp", "demo", "--gadget", "qubit-zx",
                     "--degree", "2"]) == 0
        out = capsys.readouterr().out
        assert "recovery error 0.000e+00" in out

    def test_non_complementary_gadget_exits_two(self, tmp_path, capsys):
        import numpy as np
        from ldckit.fixtures import load_gadget
        from ldckit.gadget import gadget_to_json
        qz = load_gadget("qubit-zx")
        phase = np.diag([1.0, -1.0]).astype(complex)
        cup = np.kron(np.eye(2), phase) @ qz.morphism("tau_L")
        cap = qz.morphism("gam_L") @ np.kron(phase, np.eye(2))
        twisted = qz.with_morphisms(tau_L=cup, tau_R=cup.copy(),
                                    gam_L=cap, gam_R=cap.copy())
        path = tmp_path / "twisted.json"
        path.write_text(json.dumps(gadget_to_json(twisted)))
        assert main(["exp", "demo", "--gadget", str(path),
                     "--degree", "2"]) == 2

    def test_wrong_gadget_kind_exits_one(self, capsys):
        assert main(["exp", "demo", "--gadget", "weil",
                     "--degree", "2"]) == 1


class TestExamples:
    def test_lists_builtins(self, capsys):
        assert main(["examples"]) == 0
        names = capsys.readouterr().out.split()
        assert names == ["quad4", "quad4-flip", "qubit-zx", "weil"]
