"""Static data of the affine Dynkin diagrams.

Node numbering follows the Kac affine tables: node 0 is the affine node and
nodes 1..n form the diagram of the underlying finite algebra. Each finite
bond is recorded as ``(i, j, m)`` meaning nodes i and j are joined and node i
carries the longer root, with squared-length ratio m (m = 1 for simple
bonds). Per family the finite nodes are numbered as follows:

    A_n^(1)        1 - 2 - ... - n
    B_n^(1)        1 - 2 - ... - (n-1) => n            (n short)
    C_n^(1)        1 - 2 - ... - (n-1) <= n            (n long)
    D_n^(1)        1 - 2 - ... - (n-2) - (n-1), (n-2) - n
    E_6^(1)        1 - 2 - 3 - 4 - 5, 3 - 6
    E_7^(1)        1 - 2 - 3 - 4 - 5 - 6, 3 - 7
    E_8^(1)        1 - 2 - 3 - 4 - 5 - 6 - 7, 3 - 8
    F_4^(1)        1 - 2 => 3 - 4                       (1, 2 long)
    G_2^(1)        1 => 2                               (1 long)
    A_2n^(2)       1 - 2 - ... - (n-1) <= n            (C_n, n long)
    A_2n-1^(2)     1 - 2 - ... - (n-1) <= n            (C_n, n long)
    D_n+1^(2)      1 - 2 - ... - (n-1) => n            (B_n, n short)
    E_6^(2)        1 - 2 <= 3 - 4                       (F_4, 3, 4 long)
    D_4^(3)        1 <= 2                               (G_2, 2 long)

Marks a_0..a_n and comarks ǎ_0..ǎ_n are given as rank-parametric formulas.
"""
from typing import Dict, List, Optional, Tuple

Bond = Tuple[int, int, int]


def _chain(n: int) -> List[Bond]:
    return [(i, i + 1, 1) for i in range(1, n)]


def _chain_last_long(n: int) -> List[Bond]:
    """Chain with node n longer (type C_n)."""
    return _chain(n - 1) + [(n, n - 1, 2)]


def _chain_last_short(n: int) -> List[Bond]:
    """Chain with node n shorter (type B_n)."""
    return _chain(n - 1) + [(n - 1, n, 2)]


def _d_bonds(n: int) -> List[Bond]:
    return _chain(n - 1) + [(n - 2, n, 1)]


def _e_bonds(n: int) -> List[Bond]:
    return _chain(n - 1) + [(3, n, 1)]


# Family specifications keyed by (letter, r, parity) where parity is only
# meaningful for A^(2): "even" for A_2n^(2), "odd" for A_2n-1^(2).
FAMILIES: Dict[Tuple[str, int, Optional[str]], Dict] = {
    ("A", 1, None): {
        "rank": lambda N: N,
        "min_rank": 1,
        "finite": lambda n: ("A", n),
        "bonds": _chain,
        "marks": lambda n: (1,) * (n + 1),
        "comarks": lambda n: (1,) * (n + 1),
        "dual_coxeter": lambda n: n + 1,
        "orbit_source": lambda n: ("A", n),
    },
    ("B", 1, None): {
        "rank": lambda N: N,
        "min_rank": 3,
        "finite": lambda n: ("B", n),
        "bonds": _chain_last_short,
        "marks": lambda n: (1, 1) + (2,) * (n - 1),
        "comarks": lambda n: (1, 1) + (2,) * (n - 2) + (1,),
        "dual_coxeter": lambda n: 2 * n - 1,
        "orbit_source": lambda n: ("B", n),
    },
    ("C", 1, None): {
        "rank": lambda N: N,
        "min_rank": 2,
        "finite": lambda n: ("C", n),
        "bonds": _chain_last_long,
        "marks": lambda n: (1,) + (2,) * (n - 1) + (1,),
        "comarks": lambda n: (1,) * (n + 1),
        "dual_coxeter": lambda n: n + 1,
        "orbit_source": lambda n: ("C", n),
    },
    ("D", 1, None): {
        "rank": lambda N: N,
        "min_rank": 4,
        "finite": lambda n: ("D", n),
        "bonds": _d_bonds,
        "marks": lambda n: (1, 1) + (2,) * (n - 3) + (1, 1),
        "comarks": lambda n: (1, 1) + (2,) * (n - 3) + (1, 1),
        "dual_coxeter": lambda n: 2 * n - 2,
        "orbit_source": lambda n: ("D", n),
    },
    ("E", 1, None): {
        "rank": lambda N: N,
        "allowed": (6, 7, 8),
        "finite": lambda n: ("E", n),
        "bonds": _e_bonds,
        "marks": lambda n: {
            6: (1, 1, 2, 3, 2, 1, 2),
            7: (1, 2, 3, 4, 3, 2, 1, 2),
            8: (1, 2, 4, 6, 5, 4, 3, 2, 3),
        }[n],
        "comarks": lambda n: {
            6: (1, 1, 2, 3, 2, 1, 2),
            7: (1, 2, 3, 4, 3, 2, 1, 2),
            8: (1, 2, 4, 6, 5, 4, 3, 2, 3),
        }[n],
        "dual_coxeter": lambda n: {6: 12, 7: 18, 8: 30}[n],
        "orbit_source": lambda n: ("E", n),
    },
    ("F", 1, None): {
        "rank": lambda N: N,
        "allowed": (4,),
        "finite": lambda n: ("F", 4),
        "bonds": lambda n: [(1, 2, 1), (2, 3, 2), (3, 4, 1)],
        "marks": lambda n: (1, 2, 3, 4, 2),
        "comarks": lambda n: (1, 2, 3, 2, 1),
        "dual_coxeter": lambda n: 9,
        "orbit_source": lambda n: ("F", 4),
    },
    ("G", 1, None): {
        "rank": lambda N: N,
        "allowed": (2,),
        "finite": lambda n: ("G", 2),
        "bonds": lambda n: [(1, 2, 3)],
        "marks": lambda n: (1, 2, 3),
        "comarks": lambda n: (1, 2, 1),
        "dual_coxeter": lambda n: 4,
        "orbit_source": lambda n: ("G", 2),
    },
    ("A", 2, "even"): {
        "rank": lambda N: N // 2,
        "min_rank": 2,
        "finite": lambda n: ("C", n),
        "bonds": _chain_last_long,
        "marks": lambda n: (2,) * n + (1,),
        "comarks": lambda n: (1,) + (2,) * n,
        "dual_coxeter": lambda n: 2 * n + 1,
        "orbit_source": lambda n: ("A", 2 * n),
    },
    ("A", 2, "odd"): {
        "rank": lambda N: (N + 1) // 2,
        "min_rank": 3,
        "finite": lambda n: ("C", n),
        "bonds": _chain_last_long,
        "marks": lambda n: (1, 1) + (2,) * (n - 2) + (1,),
        "comarks": lambda n: (1, 1) + (2,) * (n - 1),
        "dual_coxeter": lambda n: 2 * n,
        "orbit_source": lambda n: ("D", n + 1),
    },
    ("D", 2, None): {
        "rank": lambda N: N - 1,
        "min_rank": 3,
        "finite": lambda n: ("B", n),
        "bonds": _chain_last_short,
        "marks": lambda n: (1,) * (n + 1),
        "comarks": lambda n: (1,) + (2,) * (n - 1) + (1,),
        "dual_coxeter": lambda n: 2 * n,
        "orbit_source": lambda n: ("A", 2 * n - 1),
    },
    ("E", 2, None): {
        "rank": lambda N: 4,
        "allowed_N": (6,),
        "finite": lambda n: ("F", 4),
        "bonds": lambda n: [(1, 2, 1), (3, 2, 2), (3, 4, 1)],
        "marks": lambda n: (1, 2, 3, 2, 1),
        "comarks": lambda n: (1, 2, 3, 4, 2),
        "dual_coxeter": lambda n: 12,
        "orbit_source": lambda n: ("E", 6),
    },
    ("D", 3, None): {
        "rank": lambda N: 2,
        "allowed_N": (4,),
        "finite": lambda n: ("G", 2),
        "bonds": lambda n: [(2, 1, 3)],
        "marks": lambda n: (1, 2, 1),
        "comarks": lambda n: (1, 2, 3),
        "dual_coxeter": lambda n: 6,
        "orbit_source": lambda n: ("D", 4),
    },
}


def family_key(letter: str, N: int, r: int) -> Tuple[str, int, Optional[str]]:
    """Key into FAMILIES for a Cartan label X_N^(r)."""
    if letter == "A" and r == 2:
        return ("A", 2, "even" if N % 2 == 0 else "odd")
    return (letter, r, None)


def adjacent_label(letter: str, N: int, r: int) -> Tuple[str, int, int]:
    """Adjacent Cartan label A' (identity for r = 1 and A_2n^(2)).

    A_2n-1^(2) and D_n+1^(2) are exchanged; E_6^(2) and D_4^(3) are self-adjacent.
    """
    if letter == "A" and r == 2 and N % 2 == 1:
        n = (N + 1) // 2
        return ("D", n + 1, 2)
    if letter == "D" and r == 2:
        n = N - 1
        return ("A", 2 * n - 1, 2)
    return (letter, N, r)
