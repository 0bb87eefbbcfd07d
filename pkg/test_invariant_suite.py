#!/usr/bin/env python3
"""Invariant suite over the full (type, level) matrix."""

import time

import numpy as np
import pytest

from fusion.folding import kac_walton_table
from fusion.fusion_ring import fusion_table
from level import level_data
from validation.invariants import InvariantSuite, run_suite

LEVEL_MATRIX = [
    ("A1~1", 1), ("A1~1", 2), ("A1~1", 3), ("A1~1", 8),
    ("A2~1", 1), ("A2~1", 2), ("A2~1", 3),
    ("C2~1", 1), ("C2~1", 2), ("C2~1", 3),
    ("G2~1", 1), ("G2~1", 2),
    ("B3~1", 1), ("B3~1", 2),
    ("A4~2", 1), ("A4~2", 2), ("A4~2", 3), ("A4~2", 5),
    ("A6~2", 1), ("A6~2", 3),
    ("A5~2", 1), ("A5~2", 2),
    ("D4~2", 1), ("D4~2", 2),
    ("D5~2", 1), ("D5~2", 2),
    ("E6~2", 1), ("E6~2", 2),
    ("D4~3", 1), ("D4~3", 2), ("D4~3", 3),
]

SUITE_CHECKS = {
    "dual Coxeter number", "|Σ_k| = |P_k|", "Δ > 0", "fundamental set", "orthonormality",
    "conjugation", "character paths", "fusion table", "non-negativity", "Kac-Walton",
    "stabilization", "fusion matrices", "Verlinde traces", "S unitarity", "S transpose",
    "Verlinde diagonalization",
}


@pytest.mark.parametrize("label,k", LEVEL_MATRIX)
def test_exhaustive_suite(label, k):
    """Every check passes; twisted negatives only ever surface as warnings."""
    ld = level_data(label, k)
    report = run_suite(ld, exhaustive=True)
    assert report.passed, report.render()
    assert {c.name for c in report.checks} == SUITE_CHECKS

    failed = [c for c in report.checks if not c.passed]
    if ld.affine_type.is_untwisted:
        assert not failed, report.render()
    else:
        assert all(c.name == "non-negativity" and c.level == "WARN" for c in failed), report.render()


@pytest.mark.parametrize("label,k", [
    ("A1~1", 1), ("A1~1", 2), ("A1~1", 3), ("C2~1", 1), ("A4~2", 1), ("A4~2", 2),
])
def test_fundamental_set_is_enumerated(label, k):
    suite = InvariantSuite(level_data(label, k))
    assert suite.check_fundamental_set().startswith("|T_k^reg|")


def test_fundamental_set_skipped_above_cap():
    suite = InvariantSuite(level_data("C2~1", 1), fundamental_set_cap=10)
    assert suite.check_fundamental_set().startswith("skipped")


def test_c2_level_five_with_kac_walton():
    print("Timing C2 k=5 with exhaustive Kac-Walton...")
    start = time.perf_counter()
    ld = level_data("C2~1", 5)
    table = fusion_table(ld)
    for method in ("projection", "reflection"):
        assert np.array_equal(kac_walton_table(ld, method), table.coeffs)
    elapsed = time.perf_counter() - start
    assert len(ld.P_k) == 21
    assert elapsed < 60
    print(f"✓ C2 k=5 in {elapsed:.2f}s")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-v"]))
