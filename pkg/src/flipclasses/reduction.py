"""
Reduction of flipclasses: label graphs, irreducible decomposition, and
shuffle products.

The label graph of a path has a vertex for every letter moved by some label
and an edge {a, b} (tagged with the step index) for every label (a, b). Its
vertex set E(F) and component partition are orbit invariants. Restricting a
flipclass to E(F) (relabelling the letters order-preservingly onto
1..|E(F)|) preserves the orbit structure, the support graphs, the iota
polynomial, and the increasing-path count. A flipclass whose label graph is
disconnected splits, component by component, into a shuffle product of
irreducible flipclasses on disjoint letter blocks; every irreducible
h-flipclass lives, after restriction, in a symmetric group of degree at
most h+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .flips import Flipclass, flipclass_of
from .invariants import iota_polynomial
from .paths import BruhatPath, path_from_labels
from .perm import Perm

__all__ = [
    "LabelGraph", "label_graph", "letters_moved", "is_irreducible",
    "restrict", "decompose", "shuffle_product",
]


@dataclass(frozen=True)
class LabelGraph:
    """Letters moved by a path's labels, joined by the labels themselves."""
    vertices: frozenset
    edges: tuple            # (a, b, step index), possibly repeating {a, b}

    def components(self) -> list:
        """Connected components as sorted letter tuples, sorted."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, _ in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        groups: dict = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return sorted(tuple(sorted(g)) for g in groups.values())


def label_graph(p: BruhatPath) -> LabelGraph:
    edges = tuple((a, b, i) for i, (a, b) in enumerate(p.labels, start=1))
    vertices = frozenset(x for a, b, _ in edges for x in (a, b))
    return LabelGraph(vertices, edges)


def letters_moved(F: Flipclass) -> tuple:
    """E(F): the letters moved by any (hence every) member of F."""
    seq = F.label_seqs[0]
    return tuple(sorted({x for t in seq for x in t}))


def is_irreducible(F: Flipclass) -> bool:
    """True iff the label graph of a representative is connected."""
    return len(label_graph(F.representative()).components()) == 1


def _relabel_map(letters) -> dict:
    return {x: i + 1 for i, x in enumerate(sorted(letters))}


def _restrict_perm(w: Perm, letters, ren: dict) -> Perm:
    keep = set(letters)
    return tuple(ren[x] for x in w if x in keep)


def _restrict_seq(seq, ren: dict) -> tuple:
    return tuple((ren[a], ren[b]) for a, b in seq)


def restrict(F: Flipclass) -> Flipclass:
    """
    The flipclass of S_m, m = |E(F)|, obtained by deleting unmoved letters
    and renumbering; an isomorphism onto its image, so all invariants agree.
    """
    letters = letters_moved(F)
    if F.h == 0:
        return Flipclass((), (), 0, ((),)) if not letters else F
    ren = _relabel_map(letters)
    u = _restrict_perm(F.u, letters, ren)
    v = _restrict_perm(F.v, letters, ren)
    seqs = tuple(sorted(_restrict_seq(seq, ren) for seq in F.label_seqs))
    return Flipclass(u, v, F.h, seqs)


def decompose(F: Flipclass) -> list:
    """
    The irreducible factors of F: one restricted flipclass per label-graph
    component, sorted by canonical iota serialization (ties by canonical
    form) so the order is deterministic.
    """
    rep = F.representative()
    comps = label_graph(rep).components()
    factors = []
    for comp in comps:
        keep = set(comp)
        ren = _relabel_map(comp)
        labels = tuple((ren[a], ren[b]) for a, b in rep.labels if a in keep)
        projected = path_from_labels(_restrict_perm(F.u, comp, ren), labels)
        projected.validate()
        factors.append(flipclass_of(projected))
    return sorted(factors, key=lambda G: (iota_polynomial(G).canonical_str(),
                                          G.u, G.label_seqs))


def shuffle_product(F1: Flipclass, F2: Flipclass) -> Flipclass:
    """
    The flipclass of all interleavings of F1 and F2, placed on disjoint
    letter blocks: F1 keeps 1..m1, F2 is shifted up by m1, and the base
    point is the concatenated one-line word.
    """
    m1, m2 = len(F1.u), len(F2.u)
    u = F1.u + tuple(x + m1 for x in F2.u)
    v = F1.v + tuple(x + m1 for x in F2.v)
    h1, h2 = F1.h, F2.h
    seqs = set()
    for s1 in F1.label_seqs:
        for s2 in F2.label_seqs:
            shifted = tuple((a + m1, b + m1) for a, b in s2)
            for positions in combinations(range(h1 + h2), h1):
                pos1 = set(positions)
                merged, i1, i2 = [], 0, 0
                for i in range(h1 + h2):
                    if i in pos1:
                        merged.append(s1[i1])
                        i1 += 1
                    else:
                        merged.append(shifted[i2])
                        i2 += 1
                seqs.add(tuple(merged))
    return Flipclass(u, v, h1 + h2, tuple(sorted(seqs)))
