"""
R-tilde polynomials of Bruhat intervals, three ways.

1. `rtilde_oracle`: the classical descent recurrence. For a right descent s
   of v, R~_{u,v} = R~_{us,vs} when s is also a descent of u, and
   R~_{us,vs} + q * R~_{u,vs} otherwise; R~_{u,u} = 1 and R~_{u,v} = 0 when
   u is not below v. Memoized; deliberately independent of every flipclass
   code path, so it can anchor all cross-checks.

2. `rtilde_dyer`: the coefficient of q^h counts the length-h paths from u
   to v whose labels increase under a reflection ordering; enumerated by a
   pruned depth-first search.

3. `coeff_via_flipclasses`: partition P_h(u, v) into flipclasses and sum
   per-class counts read off invariants alone -- the t-vector for h <= 4,
   the t-vector plus time-1 out-degrees / time-(h-1) in-degrees for h = 5,
   and a generated iota-keyed lookup table for h = 6. An iota key absent
   from the table is a hard error, never a zero: an unknown key would mean
   the classification misses a class, which must surface loudly.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cbar5_data
from .flips import Flipclass, flipclasses
from .invariants import time_support_graph, tvector_str, poly1_str
from .paths import enumerate_label_seqs
from .perm import Perm, bruhat_leq, edges_between, edges_up, length
from .reforder import ReflectionOrdering, lex_order
from .tables import ac_table_path, load_ac_table

__all__ = [
    "RTildePolynomial", "rtilde_oracle", "rtilde_dyer",
    "cbar_h3", "cbar_h4", "cbar_h5", "cbar_of_flipclass",
    "coeff_via_flipclasses", "UnknownIotaKeyError", "clear_oracle_memo",
]


@dataclass(frozen=True)
class RTildePolynomial:
    """Coefficients c_0..c_d of a polynomial in q; () is the zero polynomial."""
    coefficients: tuple

    def __post_init__(self):
        if self.coefficients and self.coefficients[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, h: int) -> int:
        if 0 <= h < len(self.coefficients):
            return self.coefficients[h]
        return 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            if power == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                parts.append(f"{head}q^{power}" if power > 1 else f"{head}q")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# 1. descent recurrence

_ORACLE_MEMO: dict = {}


def clear_oracle_memo() -> None:
    _ORACLE_MEMO.clear()


def _rt_coeffs(u: Perm, v: Perm) -> tuple:
    if u == v:
        return (1,)
    key = (u, v)
    cached = _ORACLE_MEMO.get(key)
    if cached is not None:
        return cached
    if length(u) >= length(v) or not bruhat_leq(u, v):
        _ORACLE_MEMO[key] = ()
        return ()
    i = next(j for j in range(len(v) - 1) if v[j] > v[j + 1])
    vs = v[:i] + (v[i + 1], v[i]) + v[i + 2:]
    us = u[:i] + (u[i + 1], u[i]) + u[i + 2:]
    if u[i] > u[i + 1]:
        res = _rt_coeffs(us, vs)
    else:
        a = _rt_coeffs(us, vs)
        b = _rt_coeffs(u, vs)
        out = [0] * max(len(a), len(b) + 1)
        for p, c in enumerate(a):
            out[p] += c
        for p, c in enumerate(b):
            out[p + 1] += c
        res = tuple(out)
    _ORACLE_MEMO[key] = res
    return res


def rtilde_oracle(u: Perm, v: Perm) -> RTildePolynomial:
    """R~_{u,v} by the descent recurrence. Raises unless u <= v."""
    if len(u) != len(v):
        raise ValueError(f"degree mismatch: {len(u)} vs {len(v)}")
    if not bruhat_leq(u, v):
        raise ValueError("u is not below v in Bruhat order")
    return RTildePolynomial(_rt_coeffs(u, v))


# ---------------------------------------------------------------------------
# 2. increasing-path count

def rtilde_dyer(u: Perm, v: Perm,
                ordering: ReflectionOrdering | None = None) -> RTildePolynomial:
    """R~_{u,v} as the generating polynomial of increasing paths u -> v."""
    if len(u) != len(v):
        raise ValueError(f"degree mismatch: {len(u)} vs {len(v)}")
    if not bruhat_leq(u, v):
        raise ValueError("u is not below v in Bruhat order")
    if ordering is None:
        ordering = lex_order(len(u))
    elif not ordering.is_valid:
        raise ValueError("not a reflection ordering")
    rank = ordering.rank
    gap = length(v) - length(u)
    coeffs = [0] * (gap + 1)

    def walk(x: Perm, last: int, steps: int) -> None:
        if x == v:
            coeffs[steps] += 1
            return
        for _, y, t in edges_up(x):
            r = rank[t]
            if r >= last and bruhat_leq(y, v):
                walk(y, r, steps + 1)

    walk(u, 0, 0)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return RTildePolynomial(tuple(coeffs))


# ---------------------------------------------------------------------------
# 3. invariant recipes

def cbar_h3(tvec: tuple) -> int:
    """Count for a 3-flipclass from its t-vector: 2 on 5-crowns, else 1."""
    if len(tvec) != 4:
        raise ValueError(f"need a length-3 t-vector, got {tvec}")
    return 2 if tvec[1] == 5 else 1


def cbar_h4(tvec: tuple) -> int:
    """Count for a 4-flipclass from its t-vector."""
    if len(tvec) != 5:
        raise ValueError(f"need a length-4 t-vector, got {tvec}")
    if tvec in ((1, 5, 10, 5, 1), (1, 8, 14, 8, 1)):
        return 3
    if tvec[1] + tvec[3] >= 12:
        return 2
    return 1


_CBAR5_CHECKED = False


def _cbar5_table():
    global _CBAR5_CHECKED
    if not _CBAR5_CHECKED:
        cbar5_data.check_table()
        _CBAR5_CHECKED = True
    return cbar5_data


def cbar_h5(tvec: tuple, succ: dict, prec: dict) -> int:
    """
    Count for a 5-flipclass from (t-vector, succ, prec).

    succ and prec are degree distributions {exponent: coefficient} for the
    out-degrees at time 1 and the in-degrees at time 4.
    """
    if len(tvec) != 6:
        raise ValueError(f"need a length-5 t-vector, got {tvec}")
    data = _cbar5_table()
    for i, cls in enumerate(data.CLASSES, start=1):
        if tvec in cls:
            return i
    branch = data.D_BRANCHES.get(tvec)
    if branch is None:
        raise ValueError(f"t-vector {tvector_str(tvec)} is not in the "
                         f"104-vector classification")
    which, cases = branch
    dist = succ if which == "succ" else prec
    key = tuple(sorted(dist.items()))
    try:
        return cases[key]
    except KeyError:
        var = "y" if which == "succ" else "x"
        raise ValueError(
            f"{which} distribution {poly1_str(dist, var)} not among the "
            f"listed possibilities for t-vector {tvector_str(tvec)}") from None


class UnknownIotaKeyError(LookupError):
    """An iota key fell outside the generated classification table."""


def cbar_of_flipclass(F: Flipclass, ac6: dict | None = None,
                      table_directory=None) -> int:
    """Per-class increasing-path count from invariants alone."""
    if F.h in (0, 1, 2):
        return 1
    ts = time_support_graph(F)
    if F.h == 3:
        return cbar_h3(ts.t_vector())
    if F.h == 4:
        return cbar_h4(ts.t_vector())
    iota = ts.iota()
    if F.h == 5:
        return cbar_h5(iota.t_vector(), iota.succ(), iota.prec())
    if F.h == 6:
        if ac6 is None:
            ac6 = load_ac_table(ac_table_path(6, table_directory))
        key = iota.canonical_str()
        try:
            return ac6[key]
        except KeyError:
            raise UnknownIotaKeyError(
                f"iota key not present in the h=6 table: {key}") from None
    raise ValueError(f"no invariant recipe for h = {F.h}")


def coeff_via_flipclasses(u: Perm, v: Perm, h: int, ac6: dict | None = None,
                          table_directory=None) -> int:
    """
    The coefficient of q^h of R~_{u,v} for h <= 6, from flipclass
    invariants only.
    """
    if len(u) != len(v):
        raise ValueError(f"degree mismatch: {len(u)} vs {len(v)}")
    if not bruhat_leq(u, v):
        raise ValueError("u is not below v in Bruhat order")
    if not 0 <= h <= 6:
        raise ValueError(f"the invariant recipe stops at h = 6, got {h}")
    if h == 0:
        return 1 if u == v else 0
    if h == 1:
        return 1 if edges_between(u, v) else 0
    if h == 2:
        return 1 if enumerate_label_seqs(u, v, 2) else 0
    if h == 6 and ac6 is None:
        ac6 = load_ac_table(ac_table_path(6, table_directory))
    return sum(cbar_of_flipclass(F, ac6) for F in flipclasses(u, v, h))
