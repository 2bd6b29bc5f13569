"""
Bruhat intervals: element sets, Hasse diagrams, reachability.

The down-set of v is computed by walking Bruhat-graph edges backwards; the
interval [u, v] filters the down-set through the dominance comparison.
Hasse edges are the graph edges whose length gap is exactly one.
"""

from __future__ import annotations

from .perm import Perm, bruhat_leq, edges_into, edges_up, length

__all__ = ["downset", "interval_elements", "hasse_edges"]


def downset(v: Perm) -> set:
    """All x <= v, by downward reachability in the Bruhat graph."""
    seen = {v}
    stack = [v]
    while stack:
        y = stack.pop()
        for x, _, _ in edges_into(y):
            if x not in seen:
                seen.add(x)
                stack.append(x)
    return seen


def interval_elements(u: Perm, v: Perm) -> set:
    """The Bruhat interval [u, v] as a set of permutations."""
    if len(u) != len(v):
        raise ValueError(f"degree mismatch: {len(u)} vs {len(v)}")
    return {x for x in downset(v) if bruhat_leq(u, x)}


def hasse_edges(elements: set) -> set:
    """
    Cover edges (x, y, label) of the poset induced on `elements`; for a
    Bruhat interval these are the graph edges with length gap one.
    """
    out = set()
    for x in elements:
        lx = length(x)
        for _, y, t in edges_up(x):
            if y in elements and length(y) == lx + 1:
                out.add((x, y, t))
    return out
