"""
Permutations of $[n] = \\{1, ..., n\\}$ in one-line notation, and the Bruhat
graph of the symmetric group.

A permutation is a plain tuple `w` of the values `1..n`, so `w[i-1] == w(i)`.
The degree is `len(w)`; operations mixing degrees raise `ValueError` rather
than embedding implicitly. A transposition is a normalized pair `(a, b)` with
`a < b`. The Bruhat graph has an edge `u -> v` labelled `t` exactly when
`v = t * u` (composition as functions on values) and the length goes up; for
`t = (a, b)` this swaps the values `a` and `b` in the window of `u`, and the
length goes up iff `a` sits to the left of `b`.

>>> length((2, 1, 4, 3))
2
>>> [t for _, _, t in edges_up((1, 2, 3))]
[(1, 2), (1, 3), (2, 3)]
>>> apply_transposition((2, 4), (2, 1, 4, 3))
(4, 1, 2, 3)
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

__all__ = [
    "Perm", "Transposition", "LabeledEdge",
    "identity", "longest_element", "all_perms",
    "length", "inverse", "compose", "apply_transposition",
    "bruhat_leq", "edges_up", "edges_into", "edges_between",
    "transpositions", "left_descents", "right_descents",
    "conjugate_by_longest",
    "perm_to_str", "perm_from_str", "transposition_to_str",
    "transposition_from_str",
]

Perm = tuple    # one-line notation, values 1..n
Transposition = tuple  # (a, b) with a < b
LabeledEdge = tuple    # (source, target, label)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    """The longest element w0 = [n, n-1, ..., 1]."""
    return tuple(range(n, 0, -1))


def all_perms(n: int):
    """All elements of S_n in lexicographic one-line order."""
    return permutations(range(1, n + 1))


@lru_cache(maxsize=None)
def length(w: Perm) -> int:
    """Coxeter length = number of inversions of the window."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def compose(f: Perm, g: Perm) -> Perm:
    """The product f*g acting as functions: (f*g)(i) = f(g(i))."""
    if len(f) != len(g):
        raise ValueError(f"degree mismatch: {len(f)} vs {len(g)}")
    return tuple(f[v - 1] for v in g)


def apply_transposition(t: Transposition, w: Perm) -> Perm:
    """t * w: swap the values t[0] and t[1] in the window of w."""
    a, b = t
    win = list(w)
    i, j = win.index(a), win.index(b)
    win[i], win[j] = b, a
    return tuple(win)


@lru_cache(maxsize=None)
def transpositions(n: int) -> tuple:
    """All transpositions (a, b), a < b, in lexicographic order."""
    return tuple(combinations(range(1, n + 1), 2))


def bruhat_leq(u: Perm, v: Perm) -> bool:
    """
    u <= v in Bruhat order, by the sorted-prefix dominance criterion:
    for every i, the sorted window prefix of u is entrywise <= that of v.

    Validated exhaustively against directed reachability in the Bruhat
    graph for n <= 5 (see the test suite).
    """
    n = len(u)
    if n != len(v):
        raise ValueError(f"degree mismatch: {n} vs {len(v)}")
    if u == v:
        return True
    pu: list = []
    pv: list = []
    for i in range(n - 1):
        _insort(pu, u[i])
        _insort(pv, v[i])
        for x, y in zip(pu, pv):
            if x > y:
                return False
    return True


def _insort(acc: list, x: int) -> None:
    lo, hi = 0, len(acc)
    while lo < hi:
        mid = (lo + hi) // 2
        if acc[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    acc.insert(lo, x)


@lru_cache(maxsize=None)
def edges_up(u: Perm) -> tuple:
    """
    All Bruhat-graph edges with source u, as (source, target, label)
    triples in lexicographic label order.

    The edge u -> t*u exists iff t = (a, b) with a left of b in the window.
    """
    n = len(u)
    pos = {v: i for i, v in enumerate(u)}
    win = list(u)
    out = []
    for a in range(1, n):
        pa = pos[a]
        for b in range(a + 1, n + 1):
            pb = pos[b]
            if pa < pb:
                win[pa], win[pb] = b, a
                out.append((u, tuple(win), (a, b)))
                win[pa], win[pb] = a, b
    return tuple(out)


@lru_cache(maxsize=None)
def edges_into(v: Perm) -> tuple:
    """All Bruhat-graph edges with target v, as (source, target, label)."""
    n = len(v)
    pos = {x: i for i, x in enumerate(v)}
    win = list(v)
    out = []
    for a in range(1, n):
        pa = pos[a]
        for b in range(a + 1, n + 1):
            pb = pos[b]
            if pb < pa:
                win[pa], win[pb] = b, a
                out.append((tuple(win), v, (a, b)))
                win[pa], win[pb] = a, b
    return tuple(out)


def edges_between(u: Perm, v: Perm):
    """
    The edge u -> v if v*u^{-1} is a transposition and length goes up,
    else None.
    """
    if len(u) != len(v):
        raise ValueError(f"degree mismatch: {len(u)} vs {len(v)}")
    diff = [i for i in range(len(u)) if u[i] != v[i]]
    if len(diff) != 2:
        return None
    i, j = diff
    if u[i] != v[j] or u[j] != v[i] or u[i] > u[j]:
        return None
    return (u, v, (u[i], u[j]))


def left_descents(w: Perm) -> list:
    """Indices i with length(s_i * w) < length(w), i.e. i+1 left of i."""
    pos = {v: i for i, v in enumerate(w)}
    return [i for i in range(1, len(w)) if pos[i + 1] < pos[i]]


def right_descents(w: Perm) -> list:
    """Indices i with length(w * s_i) < length(w), i.e. w(i) > w(i+1)."""
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def conjugate_by_longest(w: Perm) -> Perm:
    """w0 * w * w0, the degree-preserving diagram automorphism."""
    n = len(w)
    return tuple(n + 1 - w[n - i - 1] for i in range(n))


# ---------------------------------------------------------------------------
# text forms

def perm_to_str(w: Perm) -> str:
    """'2143' for degree <= 9, '[10,1,2,...]' for degree >= 10."""
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return "[" + ",".join(str(v) for v in w) + "]"


def perm_from_str(s: str, n: int | None = None) -> Perm:
    """
    Parse a permutation: digits ('2143'), bracketed ('[2,1,4,3]'), or the
    shorthands 'e'/'w0' when a degree n is supplied.
    """
    s = s.strip()
    if n is not None:
        if s == "e":
            return identity(n)
        if s == "w0":
            return longest_element(n)
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"unterminated permutation literal: {s!r}")
        w = tuple(int(part) for part in s[1:-1].split(","))
    else:
        if not s.isdigit():
            raise ValueError(f"not a permutation literal: {s!r}")
        w = tuple(int(c) for c in s)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"window is not a permutation of 1..{len(w)}: {s!r}")
    if n is not None and len(w) != n:
        raise ValueError(f"degree mismatch: expected {n}, got {len(w)}")
    return w


def transposition_to_str(t: Transposition) -> str:
    return f"({t[0]},{t[1]})"


def transposition_from_str(s: str) -> Transposition:
    s = s.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"not a transposition literal: {s!r}")
    a, b = (int(part) for part in s[1:-1].split(","))
    if not 1 <= a < b:
        raise ValueError(f"transposition must satisfy 1 <= a < b: {s!r}")
    return (a, b)
