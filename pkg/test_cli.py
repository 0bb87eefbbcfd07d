#!/usr/bin/env python3
"""Tests for the fusionring command line."""

import io

import numpy as np
import pandas as pd
import pytest
from pydantic import ValidationError

from cli.main import main, parse_weight_list, run
from cli.schemas import (
    CheckDocument,
    DecomposeDocument,
    FusionDocument,
    JobConfig,
    SMatrixDocument,
    VerlindeDocument,
    WeightsDocument,
)
from config.constants import EXIT_INTEGRALITY, EXIT_INVALID_INPUT, EXIT_OK
from fusion.fusion_ring import fusion_table
from level import RationalPhase, level_data
from utils.errors import InvalidWeight


def test_weights_command(capsys):
    print("Testing `fusionring weights`...")
    assert main(["weights", "A1~1", "-k", "1"]) == EXIT_OK
    doc = WeightsDocument.model_validate_json(capsys.readouterr().out)
    assert doc.weights == [[0], [1]]
    assert doc.phases == [["1/6"], ["1/3"]]
    assert doc.norm_const == 6
    assert doc.dual_coxeter == 2
    assert doc.dual_weights is None
    assert [RationalPhase.parse(p[0]) for p in doc.phases] == [
        t.phase_covector[0] for t in level_data("A1~1", 1).sigma_k
    ]
    print("✓ Exact phases in the JSON document")


def test_weights_command_coweight_class(capsys):
    assert main(["weights", "D5~2", "-k", "1"]) == EXIT_OK
    doc = WeightsDocument.model_validate_json(capsys.readouterr().out)
    assert doc.dual_weights == [[0, 0, 0, 0], [1, 0, 0, 0]]
    assert doc.point_labels == [[0, 0, 0, 0], [1, 0, 0, 0]]


def test_fuse_command(capsys):
    assert main(["fuse", "C2~1", "-k", "1"]) == EXIT_OK
    doc = FusionDocument.model_validate_json(capsys.readouterr().out)
    table = fusion_table(level_data("C2~1", 1))
    assert np.array_equal(doc.to_coefficients(), table.coeffs)
    assert doc.weights == [[0, 0], [0, 1], [1, 0]]
    assert all(item.status == "PASS" for item in doc.verification)


def test_fuse_level_zero(capsys):
    assert main(["fuse", "G2~1", "-k", "0"]) == EXIT_OK
    doc = FusionDocument.model_validate_json(capsys.readouterr().out)
    assert doc.weights == [[0, 0]]
    assert doc.entries == [(0, 0, 0, 1)]


def test_fuse_csv(capsys):
    assert main(["fuse", "A1~1", "-k", "1", "--format", "csv"]) == EXIT_OK
    frame = pd.read_csv(io.StringIO(capsys.readouterr().out), dtype=str)
    assert list(frame.columns) == ["lambda", "mu", "nu", "c"]
    assert len(frame) == 4


def test_verlinde_command(capsys):
    assert main(["verlinde", "A1~1", "-k", "1", "--genus", "2"]) == EXIT_OK
    doc = VerlindeDocument.model_validate_json(capsys.readouterr().out)
    assert doc.value_integer == 4
    assert doc.integral
    assert doc.raw_complex[0] == pytest.approx(4.0)


def test_verlinde_with_weights(capsys):
    assert main(["verlinde", "A1~1", "-k", "2", "--weights", "1;1"]) == EXIT_OK
    doc = VerlindeDocument.model_validate_json(capsys.readouterr().out)
    assert doc.value_integer == 1


def test_smatrix_command(capsys):
    assert main(["smatrix", "A1~1", "-k", "2"]) == EXIT_OK
    doc = SMatrixDocument.model_validate_json(capsys.readouterr().out)
    assert doc.unitarity_residual < 1e-8
    assert doc.quantum_dimensions == pytest.approx([1.0, np.sqrt(2), 1.0])
    assert np.allclose(doc.to_matrix(), doc.to_matrix().T)


def test_smatrix_twisted(capsys):
    assert main(["smatrix", "A5~2", "-k", "1"]) == EXIT_OK
    doc = SMatrixDocument.model_validate_json(capsys.readouterr().out)
    assert doc.target == "D4~2"
    assert doc.quantum_dimensions is None


def test_decompose_command(capsys):
    """ω ⊗ 2ω at A_1, k = 2: 3ω lies on a wall, ω survives."""
    assert main(["decompose", "A1~1", "-k", "2", "--weights", "1;2"]) == EXIT_OK
    doc = DecomposeDocument.model_validate_json(capsys.readouterr().out)
    assert doc.removed == [[3]]
    assert [c.weight for c in doc.fusion] == [[1]]
    assert doc.cancelled == []


def test_decompose_cancellation(capsys):
    """2ω ⊗ 2ω at A_1, k = 2: 4ω folds onto 2ω with sign -1 and cancels it."""
    assert main(["decompose", "A1~1", "-k", "2", "--weights", "2;2"]) == EXIT_OK
    doc = DecomposeDocument.model_validate_json(capsys.readouterr().out)
    folded = {tuple(c.weight): (c.folded_to, c.sign) for c in doc.classical}
    assert folded[(4,)] == ([2], -1)
    assert folded[(2,)] == ([2], 1)
    assert [c.weight for c in doc.fusion] == [[0]]
    assert doc.cancelled == [[2]]
    assert doc.removed == []


def test_log_level_from_settings(capsys, monkeypatch):
    monkeypatch.setattr("cli.main.LOG_LEVEL", "INFO")
    assert main(["check", "A1~1", "-k", "1"]) == EXIT_OK
    assert "Invariant suite A1~1 k=1" in capsys.readouterr().err

    monkeypatch.setattr("cli.main.LOG_LEVEL", "ERROR")
    assert main(["check", "A1~1", "-k", "1"]) == EXIT_OK
    assert "Invariant suite" not in capsys.readouterr().err


def test_check_command(capsys):
    assert main(["check", "A1~1", "-k", "2"]) == EXIT_OK
    captured = capsys.readouterr()
    doc = CheckDocument.model_validate_json(captured.out)
    assert doc.passed
    assert "orthonormality" in captured.err


def test_check_twisted(capsys):
    assert main(["check", "E6~2", "-k", "1"]) == EXIT_OK
    assert CheckDocument.model_validate_json(capsys.readouterr().out).passed


@pytest.mark.parametrize("argv", [
    ["weights", "B2~1", "-k", "1"],
    ["weights", "A1~1", "-k", "-1"],
    ["verlinde", "A1~1", "-k", "1", "--weights", "2"],
    ["verlinde", "A1~1", "-k", "1", "--weights", "1,0"],
    ["verlinde", "A1~1", "-k", "1", "--weights", "x"],
    ["smatrix", "A1~1"],
    ["frobnicate", "A1~1", "-k", "1"],
])
def test_invalid_input_exit_code(argv, capsys):
    assert main(argv) == EXIT_INVALID_INPUT


def test_integrality_exit_code():
    cfg = JobConfig(command="fuse", affine_type="A2~1", k=2, tol_int=1e-30)
    assert run(cfg, stream=io.StringIO()) == EXIT_INTEGRALITY


def test_parse_weight_list():
    assert parse_weight_list("1,0;0,1") == [[1, 0], [0, 1]]
    assert parse_weight_list(None) == []
    with pytest.raises(InvalidWeight):
        parse_weight_list("1,0;1", rank=2)


def test_job_config_validation():
    with pytest.raises(ValidationError):
        JobConfig(command="weights", affine_type="A1~1", k=-1)
    with pytest.raises(ValidationError):
        JobConfig(command="nope", affine_type="A1~1", k=1)


def test_documents_survive_json():
    doc = FusionDocument(
        affine_type="A1~1", k=1, weights=[[0], [1]],
        entries=[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)], max_residual=0.0,
    )
    again = FusionDocument.model_validate_json(doc.model_dump_json())
    assert again == doc
    assert np.array_equal(again.to_coefficients(), fusion_table(level_data("A1~1", 1)).coeffs)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-v"]))
