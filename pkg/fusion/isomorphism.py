"""R_{2k+1}(A_2n^(2)) against R_k(C_n^(1))."""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from affine.types import AffineType
from fusion.fusion_ring import fusion_table
from level.level_data import level_data
from utils.errors import InvalidWeight
from utils.logger import log


@dataclass
class IsoReport:
    """Comparison of the two level data and fusion tables."""
    n: int
    k: int
    weights_equal: bool
    sigma_equal: bool
    form_relation: bool
    tables_equal: bool
    diff: Optional[str] = None

    @property
    def equal(self) -> bool:
        return self.weights_equal and self.sigma_equal and self.form_relation and self.tables_equal


def twisted_iso_check(n: int, k: int, threads: Optional[int] = None) -> IsoReport:
    """Identify P_{2k+1}(A_2n^(2)) with P_k(C_n^(1)) coordinatewise and compare.

    Also confirms (·|·) of A_2n^(2) is twice that of C_n^(1) and that both
    Σ-sets have the same phase covectors.
    """
    if n < 2 or k < 0:
        raise InvalidWeight(f"twisted_iso_check needs n >= 2 and k >= 0, got n={n}, k={k}")
    twisted = level_data(AffineType("A", 2 * n, 2), 2 * k + 1)
    untwisted = level_data(AffineType("C", n, 1), k)

    weights_equal = twisted.P_k == untwisted.P_k
    sigma_equal = weights_equal and [t.phase_covector for t in twisted.sigma_k] == [
        t.phase_covector for t in untwisted.sigma_k
    ]
    form_relation = all(
        twisted.rs.gram[i][j] == 2 * untwisted.rs.gram[i][j]
        for i in range(n) for j in range(n)
    )

    diff = None
    tables_equal = False
    if weights_equal:
        a = fusion_table(twisted, threads=threads).coeffs
        b = fusion_table(untwisted, threads=threads).coeffs
        tables_equal = np.array_equal(a, b)
        if not tables_equal:
            i, j, m = np.argwhere(a != b)[0]
            w = twisted.P_k
            diff = (
                f"c_{w[i]},{w[j]}^{w[m]}: {a[i, j, m]} for {twisted.affine_type} "
                f"vs {b[i, j, m]} for {untwisted.affine_type}"
            )
    else:
        diff = f"weight sets differ: {twisted.P_k} vs {untwisted.P_k}"

    report = IsoReport(n, k, weights_equal, sigma_equal, form_relation, tables_equal, diff)
    log.info(f"Twisted isomorphism n={n} k={k}: {'equal' if report.equal else diff or 'mismatch'}")
    return report
