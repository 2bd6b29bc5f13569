"""
Support graphs, time-support graphs, and the invariants read off them.

For a flipclass F of length-h paths from u to v:

  * the time-support graph TS_F has a vertex (x, i) for every permutation x
    visited at time i by some path of F, and an edge
    (x, i) -t-> (y, i+1) for every traversed step;
  * the support graph S_F is the image of TS_F under (x, i) -> x;
  * the t-vector lists the rank sizes of TS_F (vertices per time);
  * the iota polynomial sums x^indegree * y^outdegree * t^time over the
    vertices of TS_F.

The t-vector is iota(1, 1, t); the out-degree distribution at time 1 and the
in-degree distribution at time h-1 (the `succ` and `prec` polynomials) are
the t- and t^(h-1)-slices of iota. A maximal path of TS_F is *effective* if
its label sequence is realized by a member of F; counting maximal paths of
TS_F against |F| decides whether all of them are.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .flips import Flipclass
from .perm import Perm, Transposition, perm_to_str, transposition_to_str

__all__ = [
    "SupportGraph", "TimeSupportGraph", "IotaPolynomial",
    "support_graph", "time_support_graph", "t_vector", "iota_polynomial",
    "succ", "prec", "is_effective", "all_paths_effective",
    "crown_k", "graded_digraphs_isomorphic", "forgetful_injective",
    "tvector_str", "poly1_str",
]


@dataclass(frozen=True)
class TimeSupportGraph:
    """TS_F: vertices (x, i), edges ((x, i), (y, i+1), label)."""
    h: int
    source: Perm            # x with (x, 0) the unique bottom vertex
    target: Perm
    vertices: frozenset
    edges: frozenset

    @cached_property
    def _out(self) -> dict:
        out: dict = {vert: [] for vert in self.vertices}
        for a, b, t in self.edges:
            out[a].append((b, t))
        for lst in out.values():
            lst.sort()
        return out

    @cached_property
    def _indeg(self) -> Counter:
        return Counter(b for _, b, _ in self.edges)

    @cached_property
    def _outdeg(self) -> Counter:
        return Counter(a for a, _, _ in self.edges)

    def t_vector(self) -> tuple:
        ranks = Counter(i for _, i in self.vertices)
        return tuple(ranks.get(i, 0) for i in range(self.h + 1))

    def iota(self) -> "IotaPolynomial":
        terms: Counter = Counter()
        indeg, outdeg = self._indeg, self._outdeg
        for vert in self.vertices:
            terms[(indeg.get(vert, 0), outdeg.get(vert, 0), vert[1])] += 1
        return IotaPolynomial(dict(terms))

    def maximal_label_seqs(self):
        """Label sequences of all maximal paths (u, 0) -> (v, h)."""
        top = (self.target, self.h)
        out = self._out
        seq: list = []

        def walk(vert):
            if vert == top:
                yield tuple(seq)
                return
            for nxt, t in out.get(vert, ()):
                seq.append(t)
                yield from walk(nxt)
                seq.pop()

        yield from walk((self.source, 0))

    def count_maximal_paths(self) -> int:
        """Number of maximal paths, by rank-by-rank path counting."""
        counts = {(self.source, 0): 1}
        by_rank: dict = {}
        for a, b, t in self.edges:
            by_rank.setdefault(a[1], []).append((a, b))
        for i in range(self.h):
            for a, b in by_rank.get(i, ()):
                if a in counts:
                    counts[b] = counts.get(b, 0) + counts[a]
        return counts.get((self.target, self.h), 0)

    def to_dot(self, name: str = "TS") -> str:
        return _dot(name,
                    ((f"{perm_to_str(x)}@{i}") for x, i in sorted(self.vertices, key=lambda v: (v[1], v[0]))),
                    ((f"{perm_to_str(a[0])}@{a[1]}", f"{perm_to_str(b[0])}@{b[1]}",
                      transposition_to_str(t)) for a, b, t in sorted(self.edges, key=lambda e: (e[0][1], e[0][0], e[1][0]))))


@dataclass(frozen=True)
class SupportGraph:
    """S_F: the union of the vertices and edges of the paths of F."""
    vertices: frozenset
    edges: frozenset        # (x, y, label)

    def to_dot(self, name: str = "S") -> str:
        return _dot(name,
                    (perm_to_str(x) for x in sorted(self.vertices)),
                    ((perm_to_str(a), perm_to_str(b), transposition_to_str(t))
                     for a, b, t in sorted(self.edges)))


def _dot(name, nodes, edges) -> str:
    lines = [f"digraph {name} {{"]
    for node in nodes:
        lines.append(f'  "{node}";')
    for a, b, label in edges:
        lines.append(f'  "{a}" -> "{b}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class IotaPolynomial:
    """
    Sparse trivariate polynomial in x, y, t with nonnegative integer
    coefficients, keyed by exponent triples.
    """
    terms: dict

    def __post_init__(self):
        for key, coeff in self.terms.items():
            if coeff <= 0:
                raise ValueError(f"nonpositive coefficient at {key}")

    def __eq__(self, other):
        return isinstance(other, IotaPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __mul__(self, other: "IotaPolynomial") -> "IotaPolynomial":
        prod: Counter = Counter()
        for (x1, y1, t1), c1 in self.terms.items():
            for (x2, y2, t2), c2 in other.terms.items():
                prod[(x1 + x2, y1 + y2, t1 + t2)] += c1 * c2
        return IotaPolynomial(dict(prod))

    def total_mass(self) -> int:
        return sum(self.terms.values())

    def t_degree(self) -> int:
        return max(te for _, _, te in self.terms)

    def t_vector(self) -> tuple:
        """Coefficient sequence of iota(1, 1, t)."""
        ranks: Counter = Counter()
        for (_, _, te), coeff in self.terms.items():
            ranks[te] += coeff
        return tuple(ranks.get(i, 0) for i in range(self.t_degree() + 1))

    def succ(self) -> dict:
        """Out-degree distribution at time 1: {exponent of y: coefficient}."""
        out: Counter = Counter()
        for (_, ye, te), coeff in self.terms.items():
            if te == 1:
                out[ye] += coeff
        return dict(out)

    def prec(self) -> dict:
        """In-degree distribution at time h-1: {exponent of x: coefficient}."""
        top = self.t_degree()
        out: Counter = Counter()
        for (xe, _, te), coeff in self.terms.items():
            if te == top - 1:
                out[xe] += coeff
        return dict(out)

    def canonical_str(self) -> str:
        """Terms sorted by (t, x, y); the census/table key format."""
        parts = []
        for (xe, ye, te) in sorted(self.terms, key=lambda k: (k[2], k[0], k[1])):
            parts.append(f"{self.terms[(xe, ye, te)]}*x^{xe}*y^{ye}*t^{te}")
        return "+".join(parts)

    @classmethod
    def from_canonical_str(cls, s: str) -> "IotaPolynomial":
        terms = {}
        for part in s.split("+"):
            coeff, xs, ys, ts = part.split("*")
            key = (int(xs[2:]), int(ys[2:]), int(ts[2:]))
            if key in terms:
                raise ValueError(f"duplicate term {key} in {s!r}")
            terms[key] = int(coeff)
        return cls(terms)

    def __str__(self):
        return self.canonical_str()


# ---------------------------------------------------------------------------
# derivations from a flipclass

def time_support_graph(F: Flipclass, ts_edges=None) -> TimeSupportGraph:
    """
    TS_F. With `ts_edges` (a set of (i, x, y, label) collected during orbit
    closure) the walk over F's paths is skipped.
    """
    if ts_edges is None:
        ts_edges = set()
        from .perm import apply_transposition
        for seq in F.label_seqs:
            x = F.u
            for i, t in enumerate(seq):
                y = apply_transposition(t, x)
                ts_edges.add((i, x, y, t))
                x = y
    edges = frozenset(((x, i), (y, i + 1), t) for i, x, y, t in ts_edges)
    vertices = frozenset(v for a, b, _ in edges for v in (a, b))
    if F.h == 0:
        vertices = frozenset({(F.u, 0)})
    return TimeSupportGraph(F.h, F.u, F.v, vertices, edges)


def support_graph(F: Flipclass, ts: TimeSupportGraph | None = None) -> SupportGraph:
    """S_F, derived from TS_F by the forgetful projection (x, i) -> x."""
    ts = ts or time_support_graph(F)
    return SupportGraph(frozenset(x for x, _ in ts.vertices),
                        frozenset((a[0], b[0], t) for a, b, t in ts.edges))


def t_vector(F: Flipclass) -> tuple:
    return time_support_graph(F).t_vector()


def iota_polynomial(F: Flipclass) -> IotaPolynomial:
    return time_support_graph(F).iota()


def succ(F: Flipclass) -> dict:
    """Generating distribution of out-degrees of TS_F at time 1."""
    return iota_polynomial(F).succ()


def prec(F: Flipclass) -> dict:
    """Generating distribution of in-degrees of TS_F at time h-1."""
    return iota_polynomial(F).prec()


def is_effective(F: Flipclass, label_seq: tuple,
                 ts: TimeSupportGraph | None = None) -> bool:
    """
    True iff the maximal TS_F path with these labels is realized by a
    member of F. Raises if the labels do not trace a maximal TS_F path.
    """
    ts = ts or time_support_graph(F)
    vert = (ts.source, 0)
    out = ts._out
    for t in label_seq:
        nxt = [b for b, lab in out.get(vert, ()) if lab == t]
        if not nxt:
            raise ValueError(f"labels do not trace a path of TS_F: {label_seq}")
        vert = nxt[0]
    if vert != (ts.target, ts.h):
        raise ValueError("path does not reach the top vertex")
    return label_seq in set(F.label_seqs)


def all_paths_effective(F: Flipclass,
                        ts: TimeSupportGraph | None = None) -> bool:
    """True iff every maximal path of TS_F lifts to a member of F."""
    ts = ts or time_support_graph(F)
    if ts.count_maximal_paths() != len(F.label_seqs):
        return False
    members = set(F.label_seqs)
    return all(seq in members for seq in ts.maximal_label_seqs())


def forgetful_injective(ts: TimeSupportGraph) -> bool:
    """
    True iff (x, i) -> x is injective on V(TS_F), i.e. the forgetful
    surjection TS_F -> S_F is an isomorphism.
    """
    return len({x for x, _ in ts.vertices}) == len(ts.vertices)


# ---------------------------------------------------------------------------
# shape recognition

def crown_k(ts: TimeSupportGraph) -> int | None:
    """
    The k for which the unlabelled TS is a k-crown, else None.

    A k-crown: ranks (1, k, k, 1), full fan below and above, and the middle
    layer a single alternating cycle (every middle vertex has degree 2 into
    its far rank).
    """
    if ts.h != 3:
        return None
    tvec = ts.t_vector()
    k = tvec[1]
    if tvec != (1, k, k, 1) or k < 2:
        return None
    mids = [v for v in ts.vertices if v[1] == 1]
    tops = [v for v in ts.vertices if v[1] == 2]
    indeg, outdeg = ts._indeg, ts._outdeg
    if any(indeg[m] != 1 or outdeg[m] != 2 for m in mids):
        return None
    if any(indeg[m] != 2 or outdeg[m] != 1 for m in tops):
        return None
    # middle bipartite graph is 2-regular; connectivity makes it one cycle
    adj: dict = {}
    for a, b, _ in ts.edges:
        if a[1] == 1:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
    seen = set()
    stack = [mids[0]]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(adj.get(v, ()))
    return k if len(seen) == 2 * k else None


def graded_digraphs_isomorphic(levels1, edges1, levels2, edges2) -> bool:
    """
    Isomorphism of two graded digraphs given as rank-size lists and edges
    ((rank, index) -> (rank+1, index)); backtracking over per-rank
    bijections with degree pruning. Intended for small graphs.
    """
    if levels1 != levels2:
        return False
    adj1 = _level_adj(edges1)
    adj2 = _level_adj(edges2)
    down1 = _down_profile(edges1)
    down2 = _down_profile(edges2)
    # match rank by rank; a rank-r map is admissible if it transports the
    # down-neighbourhoods (w.r.t. the already-fixed rank r-1 map)
    from itertools import permutations as _perms

    def extend(rank, maps):
        if rank == len(levels1):
            return True
        size = levels1[rank]
        for perm in _perms(range(size)):
            ok = True
            for i in range(size):
                j = perm[i]
                if len(adj1.get((rank, i), ())) != len(adj2.get((rank, j), ())):
                    ok = False
                    break
                if rank > 0:
                    prev = maps[-1]
                    img = {prev[p] for p in down1.get((rank, i), ())}
                    if img != set(down2.get((rank, j), ())):
                        ok = False
                        break
            if ok and extend(rank + 1, maps + [dict(enumerate(perm))]):
                return True
        return False

    return extend(0, [])


def _level_adj(edges):
    adj: dict = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
    return adj


def _down_profile(edges):
    down: dict = {}
    for (_, i), (s, j) in edges:
        down.setdefault((s, j), set()).add(i)
    return down


def ts_as_graded(ts: TimeSupportGraph):
    """Rank-size list and index-pair edges of the unlabelled TS graph."""
    by_rank: dict = {}
    for x, i in sorted(ts.vertices):
        by_rank.setdefault(i, []).append(x)
    levels = [len(by_rank.get(i, ())) for i in range(ts.h + 1)]
    index = {(x, i): by_rank[i].index(x) for x, i in ts.vertices}
    edges = [((a[1], index[a]), (b[1], index[b])) for a, b, _ in ts.edges]
    return levels, sorted(edges)


# ---------------------------------------------------------------------------
# text forms

def tvector_str(t: tuple) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def poly1_str(poly: dict, var: str = "y") -> str:
    """Display a univariate distribution {exp: coeff} as '4y^4+3y^6'."""
    if not poly:
        return "0"
    parts = []
    for exp in sorted(poly):
        coeff = poly[exp]
        head = "" if coeff == 1 else str(coeff)
        parts.append(f"{head}{var}^{exp}")
    return "+".join(parts)
