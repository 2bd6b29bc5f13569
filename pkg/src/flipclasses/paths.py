"""
Directed paths in the Bruhat graph.

A path of length h from u to v is stored as its vertex sequence
x_0 = u, ..., x_h = v together with the label sequence t_1, ..., t_h, where
x_i = t_i * x_{i-1}. Since the vertices are recoverable from u and the
labels, most of the machinery downstream passes label sequences around and
keeps `BruhatPath` for the user-facing surface.

Enumeration is depth-first with pruning by Bruhat comparability with the
target and by the parity/size of the remaining length gap: a length-h path
exists from x to v only if length(v) - length(x) >= h' and has the same
parity, where h' is the number of steps left. Output order is lexicographic
by label sequence and therefore reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import (
    Perm, Transposition, apply_transposition, bruhat_leq, edges_up, length,
    perm_to_str, transposition_to_str,
)

__all__ = ["BruhatPath", "enumerate_paths", "enumerate_label_seqs",
           "is_increasing", "vertices_of", "path_from_labels"]


@dataclass(frozen=True)
class BruhatPath:
    """A directed path in B(S_n); immutable and hashable."""
    vertices: tuple          # x_0, ..., x_h
    labels: tuple            # t_1, ..., t_h

    def __post_init__(self):
        if len(self.vertices) != len(self.labels) + 1:
            raise ValueError("vertex/label count mismatch")

    @property
    def h(self) -> int:
        return len(self.labels)

    @property
    def source(self) -> Perm:
        return self.vertices[0]

    @property
    def target(self) -> Perm:
        return self.vertices[-1]

    def validate(self) -> None:
        """Check every step is a genuine Bruhat-graph edge."""
        for i, t in enumerate(self.labels):
            x, y = self.vertices[i], self.vertices[i + 1]
            if apply_transposition(t, x) != y:
                raise ValueError(f"step {i + 1} is not {t} applied to {x}")
            if length(x) >= length(y):
                raise ValueError(f"step {i + 1} does not increase length")

    def __str__(self):
        parts = [perm_to_str(self.vertices[0])]
        for t, x in zip(self.labels, self.vertices[1:]):
            parts.append(f"-{transposition_to_str(t)}->")
            parts.append(perm_to_str(x))
        return " ".join(parts)


def vertices_of(u: Perm, labels: tuple) -> tuple:
    """Vertex sequence of the path starting at u with the given labels."""
    verts = [u]
    x = u
    for t in labels:
        x = apply_transposition(t, x)
        verts.append(x)
    return tuple(verts)


def path_from_labels(u: Perm, labels: tuple) -> BruhatPath:
    return BruhatPath(vertices_of(u, labels), tuple(labels))


def enumerate_label_seqs(u: Perm, v: Perm, h: int) -> list:
    """
    Label sequences of all length-h paths u -> v, in lexicographic order.

    This is the allocation-light core of `enumerate_paths`.
    """
    if len(u) != len(v):
        raise ValueError(f"degree mismatch: {len(u)} vs {len(v)}")
    gap = length(v) - length(u)
    if gap < h or (gap - h) % 2 or not bruhat_leq(u, v):
        return [()] if (h == 0 and u == v) else []
    if h == 0:
        return [()]
    out: list = []
    prefix: list = []

    def walk(x: Perm, steps_left: int) -> None:
        if steps_left == 1:
            for _, y, t in edges_up(x):
                if y == v:
                    out.append(tuple(prefix) + (t,))
            return
        for _, y, t in edges_up(x):
            rest = length(v) - length(y)
            if rest < steps_left - 1 or (rest - steps_left + 1) % 2:
                continue
            if not bruhat_leq(y, v):
                continue
            prefix.append(t)
            walk(y, steps_left - 1)
            prefix.pop()

    walk(u, h)
    return out


def enumerate_paths(u: Perm, v: Perm, h: int) -> list:
    """All length-h paths u -> v, ordered lexicographically by labels."""
    return [path_from_labels(u, labels)
            for labels in enumerate_label_seqs(u, v, h)]


def is_increasing(p: BruhatPath, ordering) -> bool:
    """
    True iff the labels of p weakly increase under the reflection ordering.

    Weak and strict agree on Bruhat paths: consecutive equal labels would
    force a repeated vertex, which length-increase forbids.
    """
    rank = ordering.rank
    labels = p.labels
    return all(rank[labels[i]] <= rank[labels[i + 1]]
               for i in range(len(labels) - 1))
