"""
The classification data for increasing-path counts of 5-flipclasses.

Exactly 104 t-vectors occur among 5-flipclasses (over all symmetric
groups). For 97 of them the t-vector alone determines c(F): the classes
C1..C7 below carry c = 1..7. The remaining seven t-vectors (the set D)
each split into two c values, separated by the out-degree distribution at
time 1 (`succ`) -- except for (1,12,33,32,11,1), where only the in-degree
distribution at time 4 (`prec`) separates them.

Degree distributions are stored as sorted (exponent, coefficient) pairs,
e.g. y^4 + 6y^5 -> ((4, 1), (5, 6)). `check_table()` verifies disjointness
and totality on import of the consumers; a corrupted table fails loudly.
"""

from __future__ import annotations

C1 = frozenset({
    (1, 3, 5, 5, 3, 1), (1, 3, 5, 6, 4, 1), (1, 4, 6, 5, 3, 1),
    (1, 4, 7, 7, 4, 1), (1, 4, 8, 9, 5, 1), (1, 4, 9, 10, 5, 1),
    (1, 4, 10, 12, 6, 1), (1, 5, 9, 8, 4, 1), (1, 5, 10, 9, 4, 1),
    (1, 5, 10, 10, 5, 1), (1, 5, 10, 11, 6, 1), (1, 6, 11, 10, 5, 1),
    (1, 6, 12, 10, 4, 1), (1, 6, 13, 13, 6, 1), (1, 6, 14, 15, 7, 1),
    (1, 6, 14, 16, 8, 1), (1, 6, 15, 18, 9, 1), (1, 7, 15, 14, 6, 1),
    (1, 7, 17, 17, 7, 1), (1, 8, 16, 14, 6, 1), (1, 9, 18, 15, 6, 1),
})

C2 = frozenset({
    (1, 6, 12, 12, 6, 1), (1, 6, 13, 14, 7, 1), (1, 7, 14, 13, 6, 1),
    (1, 7, 16, 16, 7, 1), (1, 7, 17, 19, 9, 1), (1, 7, 18, 20, 9, 1),
    (1, 8, 19, 19, 8, 1), (1, 8, 20, 20, 8, 1), (1, 8, 20, 21, 9, 1),
    (1, 8, 21, 22, 9, 1), (1, 8, 21, 23, 10, 1), (1, 8, 21, 24, 11, 1),
    (1, 8, 22, 24, 10, 1), (1, 8, 22, 25, 11, 1), (1, 9, 19, 17, 7, 1),
    (1, 9, 20, 18, 7, 1), (1, 9, 21, 20, 8, 1), (1, 9, 22, 21, 8, 1),
    (1, 9, 23, 23, 9, 1), (1, 10, 23, 21, 8, 1), (1, 10, 24, 22, 8, 1),
    (1, 11, 24, 21, 8, 1), (1, 11, 25, 22, 8, 1),
})

C3 = frozenset({
    (1, 6, 15, 15, 6, 1), (1, 6, 17, 19, 7, 1), (1, 7, 17, 18, 7, 1),
    (1, 7, 18, 17, 7, 1), (1, 7, 18, 19, 7, 1), (1, 7, 18, 20, 7, 1),
    (1, 7, 19, 17, 6, 1), (1, 7, 19, 18, 7, 1), (1, 7, 19, 21, 8, 1),
    (1, 7, 20, 18, 7, 1), (1, 8, 21, 19, 7, 1), (1, 9, 22, 22, 9, 1),
    (1, 9, 23, 24, 10, 1), (1, 9, 24, 26, 11, 1), (1, 9, 25, 27, 11, 1),
    (1, 10, 24, 23, 9, 1), (1, 10, 25, 25, 10, 1), (1, 10, 26, 27, 11, 1),
    (1, 10, 27, 27, 10, 1), (1, 10, 27, 28, 11, 1), (1, 10, 27, 29, 12, 1),
    (1, 10, 28, 29, 11, 1), (1, 10, 28, 30, 12, 1), (1, 11, 26, 24, 9, 1),
    (1, 11, 27, 25, 9, 1), (1, 11, 27, 26, 10, 1), (1, 11, 28, 27, 10, 1),
    (1, 11, 29, 28, 10, 1), (1, 11, 30, 30, 11, 1), (1, 12, 29, 27, 10, 1),
    (1, 12, 30, 28, 10, 1),
})

C4 = frozenset({
    (1, 9, 26, 27, 10, 1), (1, 9, 27, 29, 11, 1), (1, 10, 27, 26, 9, 1),
    (1, 10, 28, 28, 10, 1), (1, 10, 29, 30, 11, 1), (1, 10, 31, 34, 13, 1),
    (1, 11, 28, 28, 11, 1), (1, 11, 29, 27, 9, 1), (1, 11, 29, 30, 12, 1),
    (1, 11, 30, 29, 10, 1), (1, 11, 31, 32, 12, 1), (1, 12, 30, 29, 11, 1),
    (1, 12, 32, 31, 11, 1), (1, 13, 34, 31, 10, 1),
})

C5 = frozenset({
    (1, 9, 24, 25, 9, 1), (1, 9, 25, 24, 9, 1), (1, 12, 34, 34, 12, 1),
    (1, 12, 35, 36, 13, 1), (1, 13, 36, 35, 12, 1),
})

C6 = frozenset({(1, 8, 27, 28, 9, 1), (1, 9, 28, 27, 8, 1)})

C7 = frozenset({(1, 13, 40, 40, 13, 1)})

CLASSES = (C1, C2, C3, C4, C5, C6, C7)

# the seven ambiguous t-vectors: {t-vector: ('succ'|'prec', {distribution: c})}
D_BRANCHES = {
    (1, 11, 31, 31, 11, 1): ("succ", {
        ((4, 4), (6, 4), (7, 2), (8, 1)): 4,
        ((4, 4), (6, 3), (7, 4)): 4,
        ((4, 3), (6, 7), (8, 1)): 5,
    }),
    (1, 7, 17, 18, 8, 1): ("succ", {
        ((4, 1), (5, 6)): 1,
        ((4, 4), (6, 3)): 2,
    }),
    (1, 9, 24, 25, 10, 1): ("succ", {
        ((4, 3), (5, 4), (8, 2)): 2,
        ((4, 3), (5, 2), (6, 2), (7, 2)): 2,
        ((4, 2), (5, 4), (6, 1), (7, 2)): 2,
        ((4, 5), (6, 2), (8, 2)): 3,
    }),
    (1, 8, 18, 17, 7, 1): ("succ", {
        ((4, 4), (5, 4)): 1,
        ((4, 6), (5, 1), (7, 1)): 2,
    }),
    (1, 11, 32, 33, 12, 1): ("succ", {
        ((4, 3), (6, 4), (7, 4)): 4,
        ((4, 3), (6, 6), (8, 2)): 5,
        ((4, 2), (6, 8), (8, 1)): 5,
    }),
    (1, 10, 25, 24, 9, 1): ("succ", {
        ((4, 5), (5, 1), (6, 3), (7, 1)): 2,
        ((4, 2), (5, 7), (7, 1)): 2,
        ((4, 2), (5, 6), (6, 2)): 2,
        ((4, 6), (5, 1), (7, 3)): 3,
    }),
    (1, 12, 33, 32, 11, 1): ("prec", {
        ((4, 3), (6, 4), (7, 4)): 4,
        ((4, 3), (6, 6), (8, 2)): 5,
        ((4, 2), (6, 8), (8, 1)): 5,
    }),
}

D = frozenset(D_BRANCHES)

EXPECTED_TOTAL = 104


def check_table(classes=CLASSES, ambiguous=D_BRANCHES) -> None:
    """
    Self-check: the eight sets are pairwise disjoint, total 104 vectors,
    and every branch distribution is consistent with its t-vector.
    """
    seen: dict = {}
    for idx, cls in enumerate(classes):
        for t in cls:
            if t in seen:
                raise ValueError(f"t-vector {t} in both {seen[t]} and C{idx + 1}")
            seen[t] = f"C{idx + 1}"
    for t in ambiguous:
        if t in seen:
            raise ValueError(f"t-vector {t} in both {seen[t]} and D")
        seen[t] = "D"
    if len(seen) != EXPECTED_TOTAL:
        raise ValueError(f"table holds {len(seen)} t-vectors, expected "
                         f"{EXPECTED_TOTAL}")
    for t, (which, branches) in ambiguous.items():
        if which not in ("succ", "prec"):
            raise ValueError(f"unknown branch selector {which!r} for {t}")
        mass = t[1] if which == "succ" else t[-2]
        for dist, c in branches.items():
            if sum(coeff for _, coeff in dist) != mass:
                raise ValueError(f"distribution {dist} has wrong mass for {t}")
            if c < 1:
                raise ValueError(f"nonpositive count for {t}: {c}")


def all_tvectors() -> frozenset:
    return frozenset().union(*CLASSES, D)
