"""
The flip operator, the flip group action, and flipclasses (orbits).

For every length-2 path u -> x -> v in the Bruhat graph of a symmetric group
there is exactly one other length-2 path u -> y -> v; swapping one for the
other is the *flip*. The i-th flip operator f_i rewrites a length-h path at
positions (i-1, i, i+1), and a flipclass is an orbit of paths under the group
generated by f_1, ..., f_{h-1}.

The flip is computed in closed form from the two labels and the window of the
bottom vertex; a brute-force midpoint search over edges is kept alongside as
an independent oracle (select it with the `flip_fn` argument of `flip_path` /
`flipclass_of`). With labels p and q read off u -> x -> v:

  * disjoint supports: the labels swap;
  * p = (a, b), q = (a, c) sharing the letter a: the outcome depends on the
    relative order of a, b, c, and in the middle case (a between b and c)
    also on whether a sits between b and c in the window of u.

Orbits are closed by breadth-first search hashing label sequences; vertex
sequences ride along so each flip costs O(n). The canonical form of a
flipclass is its lexicographically sorted tuple of label sequences, plus the
base point u.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .perm import (
    Perm, Transposition, apply_transposition, edges_up, length,
    perm_from_str, perm_to_str, transposition_to_str,
)
from .paths import BruhatPath, enumerate_label_seqs, path_from_labels

__all__ = [
    "flip2", "flip_labels", "flip_labels_brute", "flip_path",
    "Flipclass", "flipclass_of", "flipclasses",
]

LabeledEdge = tuple  # (source, target, label), as produced by perm.edges_up


def flip_labels(x: Perm, p: Transposition, q: Transposition) -> tuple:
    """
    Labels (s, t) of the flip of the length-2 path x -p-> . -q-> .,
    in closed form.
    """
    a1, b1 = p
    a2, b2 = q
    if a1 == a2:
        a, b, c = a1, b1, b2
    elif a1 == b2:
        a, b, c = a1, b1, a2
    elif b1 == a2:
        a, b, c = b1, a1, b2
    elif b1 == b2:
        a, b, c = b1, a1, a2
    else:
        return q, p
    # one shared letter a; b from p, c from q
    if a < b < c or a > b > c:
        take_q = False
    elif a < c < b or a > c > b:
        take_q = True
    else:
        # b < a < c or b > a > c: decided by the window of x
        pa, pb, pc = x.index(a), x.index(b), x.index(c)
        take_q = pb < pa < pc or pc < pa < pb
    if take_q:
        s = (a, c) if a < c else (c, a)
        t = (b, c) if b < c else (c, b)
    else:
        s = (b, c) if b < c else (c, b)
        t = (a, b) if a < b else (b, a)
    return s, t


def flip_labels_brute(x: Perm, p: Transposition, q: Transposition) -> tuple:
    """
    Brute-force flip oracle: search all midpoints between x and q*p*x.

    Checks that exactly one alternative midpoint exists.
    """
    v = apply_transposition(q, apply_transposition(p, x))
    mid = apply_transposition(p, x)
    found = []
    for _, y, s in edges_up(x):
        if y == mid:
            continue
        for _, z, t in edges_up(y):
            if z == v:
                found.append((s, t))
    if len(found) != 1:
        raise ValueError(f"expected a unique flip of {x} -{p}-> -{q}->, "
                         f"found {len(found)}")
    return found[0]


def flip2(e1: LabeledEdge, e2: LabeledEdge) -> tuple:
    """
    Flip a chained pair of labelled edges; returns the two edges of the
    unique other length-2 path with the same endpoints.
    """
    u1, x1, p = e1
    x2, v2, q = e2
    if x1 != x2:
        raise ValueError("edges do not chain")
    s, t = flip_labels(u1, p, q)
    y = apply_transposition(s, u1)
    return (u1, y, s), (y, v2, t)


def flip_path(path: BruhatPath, i: int, flip_fn=flip_labels) -> BruhatPath:
    """Apply the i-th flip operator, 1 <= i <= h-1."""
    h = path.h
    if not 1 <= i <= h - 1:
        raise IndexError(f"flip index {i} out of range for length {h}")
    verts, labels = path.vertices, path.labels
    x = verts[i - 1]
    s, t = flip_fn(x, labels[i - 1], labels[i])
    y = apply_transposition(s, x)
    return BruhatPath(verts[:i] + (y,) + verts[i + 1:],
                      labels[:i - 1] + (s, t) + labels[i + 1:])


@dataclass(frozen=True)
class Flipclass:
    """
    An orbit of length-h paths from u to v under the flip group, in
    canonical form: label sequences sorted lexicographically.
    """
    u: Perm
    v: Perm
    h: int
    label_seqs: tuple

    @cached_property
    def size(self) -> int:
        return len(self.label_seqs)

    def __len__(self):
        return len(self.label_seqs)

    def paths(self) -> list:
        """The orbit as BruhatPath objects, in canonical order."""
        return [path_from_labels(self.u, seq) for seq in self.label_seqs]

    def representative(self) -> BruhatPath:
        return path_from_labels(self.u, self.label_seqs[0])

    def to_text(self) -> str:
        """Serialize: header 'u v h', then one label sequence per line."""
        lines = [f"{perm_to_str(self.u)} {perm_to_str(self.v)} {self.h}"]
        for seq in self.label_seqs:
            lines.append("".join(transposition_to_str(t) for t in seq))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Flipclass":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        us, vs, hs = lines[0].split()
        u, v, h = perm_from_str(us), perm_from_str(vs), int(hs)
        seqs = tuple(_parse_label_seq(ln) for ln in lines[1:])
        fc = cls(u, v, h, tuple(sorted(seqs)))
        if any(len(seq) != h for seq in fc.label_seqs):
            raise ValueError("label sequence length differs from header h")
        return fc


def _parse_label_seq(line: str) -> tuple:
    parts = line.strip().strip("()").split(")(")
    if parts == [""]:
        return ()
    out = []
    for part in parts:
        a, b = part.split(",")
        out.append((int(a), int(b)))
    return tuple(out)


def _orbit_label_seqs(u: Perm, seed: tuple, flip_fn=flip_labels,
                      ts_edges: set | None = None) -> set:
    """
    BFS closure of one label sequence under all flip operators.

    When `ts_edges` is given, every traversed path also deposits its
    time-stamped edges (i, x_i, x_{i+1}, t) there, which gives the
    time-support graph of the orbit for free.
    """
    h = len(seed)
    if h == 0:
        return {seed}
    seen = {seed}
    stack = [(seed, _verts(u, seed))]
    collect = ts_edges is not None
    while stack:
        labels, verts = stack.pop()
        if collect:
            for i in range(h):
                ts_edges.add((i, verts[i], verts[i + 1], labels[i]))
        for i in range(1, h):
            x = verts[i - 1]
            s, t = flip_fn(x, labels[i - 1], labels[i])
            nl = labels[:i - 1] + (s, t) + labels[i + 1:]
            if nl not in seen:
                seen.add(nl)
                nv = verts[:i] + (apply_transposition(s, x),) + verts[i + 1:]
                stack.append((nl, nv))
    return seen


def _verts(u: Perm, labels: tuple) -> tuple:
    verts = [u]
    x = u
    for t in labels:
        x = apply_transposition(t, x)
        verts.append(x)
    return tuple(verts)


def flipclass_of(p: BruhatPath, flip_fn=flip_labels) -> Flipclass:
    """The flipclass (orbit) containing the path p."""
    orbit = _orbit_label_seqs(p.source, p.labels, flip_fn)
    return Flipclass(p.source, p.target, p.h, tuple(sorted(orbit)))


def flipclasses(u: Perm, v: Perm, h: int, flip_fn=flip_labels) -> list:
    """
    Partition P_h(u, v) into flipclasses, ordered by canonical form.

    The partition property (disjoint, union = all paths) holds by
    construction: orbits are grown from the unused path with the least
    label sequence.
    """
    seqs = enumerate_label_seqs(u, v, h)
    return partition_into_orbits(u, v, h, seqs, flip_fn)


def partition_into_orbits(u: Perm, v: Perm, h: int, seqs: list,
                          flip_fn=flip_labels) -> list:
    """Partition an already-enumerated P_h(u, v) into flipclasses."""
    done: set = set()
    out = []
    for seq in seqs:  # lexicographic order makes the output canonical
        if seq in done:
            continue
        orbit = _orbit_label_seqs(u, seq, flip_fn)
        done |= orbit
        out.append(Flipclass(u, v, h, tuple(sorted(orbit))))
    if len(done) != len(seqs):
        raise AssertionError("orbits escaped the enumerated path set")
    return out
