"""Invariant suite run by `fusionring check`."""
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np
from tabulate import tabulate

from affine.types import orbit_dual_coxeter_consistent
from characters.weyl_characters import character_matrix, chi_via_weights, delta_vector, gram_matrix
from config.settings import (
    FUNDAMENTAL_SET_CAP,
    TOL_CONJUGATION,
    TOL_INTEGRALITY,
    TOL_ORTHONORMAL,
    TOL_PATH_AGREEMENT,
    TOL_UNITARITY,
)
from fusion.folding import kac_walton_product, kac_walton_table
from fusion.fusion_ring import FusionTable, fusion_matrix_residual, fusion_table, verlinde_trace
from level.level_data import LevelData, fundamental_set_check
from modular.s_matrix import check_transpose, s_matrix, verlinde_diagonalization
from roots.representations import tensor_decompose
from utils.decorators import timer
from utils.errors import FusionRingError, InvariantFailure
from utils.logger import log


def _require(condition, detail: str) -> None:
    if not condition:
        raise InvariantFailure("suite", detail)


# Rows of the fusion table cross-checked by Kac-Walton when not exhaustive
SAMPLE_ROWS = 3


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    level: str = "ERROR"


@dataclass
class SuiteReport:
    affine_type: str
    k: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.level == "ERROR")

    def render(self) -> str:
        rows = [
            [c.name, "PASS" if c.passed else ("WARN" if c.level == "WARN" else "FAIL"), c.detail]
            for c in self.checks
        ]
        return tabulate(rows, headers=["check", "status", "detail"], tablefmt="simple")


class InvariantSuite:
    """Runs every executable invariant for one (type, level)."""

    def __init__(self, ld: LevelData, exhaustive: bool = False, threads: Optional[int] = None,
                 tol_int: Optional[float] = None, fundamental_set_cap: Optional[int] = None):
        self.ld = ld
        self.fundamental_set_cap = FUNDAMENTAL_SET_CAP if fundamental_set_cap is None else fundamental_set_cap
        self.exhaustive = exhaustive
        self.threads = threads
        self.tol_int = TOL_INTEGRALITY if tol_int is None else tol_int
        self.report = SuiteReport(str(ld.affine_type), ld.k)
        self._table: Optional[FusionTable] = None

    def _run(self, name: str, check: Callable[[], str], level: str = "ERROR"):
        try:
            detail = check()
            self.report.checks.append(CheckResult(name, True, detail or "", level))
        except FusionRingError as e:
            if level == "ERROR":
                log.error(f"check '{name}' failed: {e}")
            else:
                log.warning(f"check '{name}': {e}")
            self.report.checks.append(CheckResult(name, False, getattr(e, "details", None) or str(e), level))

    def table(self) -> FusionTable:
        if self._table is None:
            self._table = fusion_table(self.ld, threads=self.threads, tolerance=self.tol_int)
        return self._table

    # Structure

    def check_dual_coxeter(self) -> str:
        ld = self.ld
        _require(sum(ld.theta_check) + 1 == ld.affine.dual_coxeter, "ȟ != <ρ, θ̌> + 1")
        _require(orbit_dual_coxeter_consistent(ld.affine), "ȟ differs from the orbit source algebra")
        return f"ȟ = {ld.affine.dual_coxeter}"

    def check_sigma_size(self) -> str:
        _require(len(self.ld.sigma_k) == len(self.ld.P_k), "|Σ_k| != |P_k|")
        return f"|Σ_k| = |P_k| = {len(self.ld.P_k)}"

    def check_delta_positive(self) -> str:
        smallest = float(delta_vector(self.ld).min())
        _require(smallest > 0, f"min Δ = {smallest}")
        return f"min Δ = {smallest:.4g}"

    def check_fundamental_set(self) -> str:
        ld = self.ld
        if ld.norm_const > self.fundamental_set_cap:
            return f"skipped (|T_k| = {ld.norm_const} above {self.fundamental_set_cap})"
        report = fundamental_set_check(ld, cap=self.fundamental_set_cap)
        _require(report.ok, f"{report.regular_count} regular points, {report.distinct_images} distinct W-images")
        return f"|T_k^reg| = {report.regular_count}"

    # Characters

    def check_orthonormality(self) -> str:
        G = gram_matrix(self.ld, self.threads)
        residual = float(np.max(np.abs(G - np.eye(len(G)))))
        _require(residual < TOL_ORTHONORMAL, f"‖G - I‖ = {residual:.3g}")
        return f"‖G - I‖ = {residual:.2e}"

    def check_conjugation(self) -> str:
        ld = self.ld
        X = character_matrix(ld, self.threads)
        star = ld.star_indices()
        residual = float(np.max(np.abs(X[star] - X.conj())))
        _require(residual < TOL_CONJUGATION * max(1.0, float(np.abs(X).max())), f"max deviation {residual:.3g}")
        return f"max deviation {residual:.2e}"

    def check_two_paths(self) -> str:
        ld = self.ld
        X = character_matrix(ld, self.threads)
        worst = 0.0
        for a, w in enumerate(ld.P_k):
            for t_idx, t in enumerate(ld.sigma_k):
                oracle = chi_via_weights(ld, w, t)
                worst = max(worst, abs(X[a, t_idx] - oracle) / max(1.0, abs(oracle)))
        _require(worst < TOL_PATH_AGREEMENT, f"relative deviation {worst:.3g}")
        return f"relative deviation {worst:.2e}"

    # Fusion ring

    def check_fusion_table(self) -> str:
        table = self.table()
        return f"max residual {table.residual:.2e}"

    def check_non_negativity(self) -> str:
        warnings = self.table().warnings
        _require(not warnings, "; ".join(warnings))
        return "all coefficients >= 0"

    def check_kac_walton(self) -> str:
        table = self.table()
        methods = ("projection", "reflection") if self.exhaustive else ("reflection",)
        rows = len(self.ld.P_k) if self.exhaustive else min(SAMPLE_ROWS, len(self.ld.P_k))
        for method in methods:
            kw = kac_walton_table(self.ld, method) if self.exhaustive else self._kac_walton_rows(method, rows)
            _require(np.array_equal(kw[:rows], table.coeffs[:rows]), f"{method} fold disagrees with the table")
        return f"{'all' if self.exhaustive else rows} rows, methods {', '.join(methods)}"

    def _kac_walton_rows(self, method: str, rows: int) -> np.ndarray:
        ld = self.ld
        size = len(ld.P_k)
        out = np.zeros((rows, size, size), dtype=np.int64)
        for a in range(rows):
            for b, mu in enumerate(ld.P_k):
                for nu, c in kac_walton_product(ld, ld.P_k[a], mu, method).items():
                    out[a, b, ld.index(nu)] = c
        return out

    def check_stabilization(self) -> str:
        ld = self.ld
        c = self.table().coeffs
        compared = 0
        for a, lam in enumerate(ld.P_k):
            for b, mu in enumerate(ld.P_k[a:], start=a):
                classical = tensor_decompose(ld.rs, lam, mu)
                for d, nu in enumerate(ld.P_k):
                    if ld.level_of(lam) + ld.level_of(mu) + ld.level_of(nu) <= 2 * ld.k:
                        compared += 1
                        _require(
                            classical.get(nu, 0) == c[a, b, d],
                            f"({lam},{mu},{nu}): classical {classical.get(nu, 0)} != fusion {c[a, b, d]}"
                        )
        return f"{compared} triples within the bound"

    def check_fusion_matrices(self) -> str:
        residual = fusion_matrix_residual(self.ld, self.table())
        _require(residual < self.tol_int, f"residual {residual:.3g}")
        return f"residual {residual:.2e}"

    def check_verlinde(self) -> str:
        ld = self.ld
        star = ld.star_indices()
        size = len(ld.P_k)
        for a, lam in enumerate(ld.P_k):
            for b, mu in enumerate(ld.P_k):
                value = verlinde_trace(ld, 0, [lam, mu], tolerance=self.tol_int).value
                _require(value == int(b == star[a]), f"g=0 two-point ({lam},{mu}) = {value}")
        c = self.table().coeffs
        rows = size if self.exhaustive else min(SAMPLE_ROWS, size)
        for a in range(rows):
            for b in range(size):
                for d in range(size):
                    value = verlinde_trace(ld, 0, [ld.P_k[a], ld.P_k[b], ld.P_k[d]], tolerance=self.tol_int).value
                    _require(value == c[a, b, star[d]], f"g=0 three-point at {(a, b, d)}")
        genus_one = verlinde_trace(ld, 1, [], tolerance=self.tol_int)
        _require(genus_one.value == size, f"g=1 trace {genus_one.value} != |P_k| = {size}")
        return "g=0 two- and three-point, g=1"

    # Modular

    def check_unitarity(self) -> str:
        residual = s_matrix(self.ld.affine_type, self.ld.k).unitarity_residual()
        _require(residual < TOL_UNITARITY, f"‖SS̄^t - I‖ = {residual:.3g}")
        return f"‖SS̄^t - I‖ = {residual:.2e}"

    def check_transpose(self) -> str:
        report = check_transpose(self.ld.affine_type, self.ld.k)
        _require(report.ok, f"max deviation {report.max_deviation:.3g} at {report.first_offending}")
        return f"max deviation {report.max_deviation:.2e}"

    def check_diagonalization(self) -> str:
        ld = self.ld
        if ld.affine.adjacent_type != ld.affine_type or not ld.uses_weight_torus:
            return "not applicable"
        raw = verlinde_diagonalization(s_matrix(ld.affine_type, ld.k))
        residual = float(np.max(np.abs(raw - self.table().coeffs)))
        _require(residual < self.tol_int, f"residual {residual:.3g}")
        return f"residual {residual:.2e}"

    def run_fusion_checks(self, table: Optional[FusionTable] = None) -> SuiteReport:
        """Orthonormality and Kac-Walton agreement for an already computed table."""
        if table is not None:
            self._table = table
        self._run("orthonormality", self.check_orthonormality)
        self._run("Kac-Walton", self.check_kac_walton)
        return self.report

    @timer
    def run(self) -> SuiteReport:
        self._run("dual Coxeter number", self.check_dual_coxeter)
        self._run("|Σ_k| = |P_k|", self.check_sigma_size)
        self._run("Δ > 0", self.check_delta_positive)
        self._run("fundamental set", self.check_fundamental_set)
        self._run("orthonormality", self.check_orthonormality)
        self._run("conjugation", self.check_conjugation)
        self._run("character paths", self.check_two_paths)
        self._run("fusion table", self.check_fusion_table)
        self._run(
            "non-negativity", self.check_non_negativity,
            level="ERROR" if self.ld.affine_type.is_untwisted else "WARN",
        )
        self._run("Kac-Walton", self.check_kac_walton)
        self._run("stabilization", self.check_stabilization)
        self._run("fusion matrices", self.check_fusion_matrices)
        self._run("Verlinde traces", self.check_verlinde)
        self._run("S unitarity", self.check_unitarity)
        self._run("S transpose", self.check_transpose)
        self._run("Verlinde diagonalization", self.check_diagonalization)
        log.info(
            f"Invariant suite {self.report.affine_type} k={self.report.k}: "
            f"{'pass' if self.report.passed else 'FAIL'}"
        )
        return self.report


def run_suite(ld: LevelData, exhaustive: bool = False, threads: Optional[int] = None,
              tol_int: Optional[float] = None, fundamental_set_cap: Optional[int] = None) -> SuiteReport:
    """Run the invariant suite and return its report."""
    suite = InvariantSuite(
        ld, exhaustive=exhaustive, threads=threads, tol_int=tol_int, fundamental_set_cap=fundamental_set_cap
    )
    return suite.run()
