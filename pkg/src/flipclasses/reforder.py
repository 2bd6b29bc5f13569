"""
Reflection orderings of the transpositions of S_n.

A total order on the transpositions is a reflection ordering when for all
a < b < c it ranks (a,b), (a,c), (b,c) monotonically (in either direction).
Reflection orderings are exactly the orders induced by reduced words of the
longest element: the word s_{w_1} ... s_{w_N} induces
t_i = (s_{w_1} ... s_{w_{i-1}}) s_{w_i} (s_{w_{i-1}} ... s_{w_1}), and every
ordering arises this way. Random orderings are drawn by walking down from
the longest element along uniformly random left descents, which yields a
uniformly random-enough reduced word without Markov-chain machinery.

The number of label-increasing paths of a flipclass, c(F), does not depend
on the ordering; the test suite exercises that constancy.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from random import Random

from .flips import Flipclass
from .paths import BruhatPath, path_from_labels
from .perm import (
    Perm, Transposition, apply_transposition, identity, left_descents,
    length, longest_element, transpositions,
)

__all__ = [
    "ReflectionOrdering", "lex_order", "revlex_order", "from_reduced_word",
    "validate", "random_reduced_word", "random_ordering",
    "count_increasing", "increasing_label_seqs", "lex_first_path",
]


@dataclass(frozen=True)
class ReflectionOrdering:
    """A total rank assignment on the transpositions of S_n."""
    n: int
    rank: dict          # Transposition -> 1..n(n-1)/2

    def __post_init__(self):
        expect = set(transpositions(self.n))
        if set(self.rank) != expect:
            raise ValueError("rank must cover exactly the transpositions of S_n")
        if sorted(self.rank.values()) != list(range(1, len(expect) + 1)):
            raise ValueError("ranks must be a bijection onto 1..n(n-1)/2")

    def key(self, t: Transposition) -> int:
        return self.rank[t]

    def sorted_transpositions(self) -> list:
        return sorted(self.rank, key=self.rank.get)

    @cached_property
    def is_valid(self) -> bool:
        rank = self.rank
        for a in range(1, self.n + 1):
            for b in range(a + 1, self.n + 1):
                for c in range(b + 1, self.n + 1):
                    rab, rac, rbc = rank[(a, b)], rank[(a, c)], rank[(b, c)]
                    if not (rab < rac < rbc or rab > rac > rbc):
                        return False
        return True


def lex_order(n: int) -> ReflectionOrdering:
    """(1,2) < (1,3) < ... < (1,n) < (2,3) < ... < (n-1,n)."""
    if n < 2:
        raise ValueError("need n >= 2")
    ts = sorted(transpositions(n))
    return ReflectionOrdering(n, {t: i + 1 for i, t in enumerate(ts)})


def revlex_order(n: int) -> ReflectionOrdering:
    """(n-1,n) < (n-2,n) < ... < (1,n) < (n-2,n-1) < ... < (1,2)."""
    ts = sorted(transpositions(n), key=lambda t: (-t[1], -t[0]))
    return ReflectionOrdering(n, {t: i + 1 for i, t in enumerate(ts)})


def validate(ordering: ReflectionOrdering) -> bool:
    """Check the triple condition on all a < b < c."""
    return ordering.is_valid


def from_reduced_word(word) -> ReflectionOrdering:
    """
    The reflection ordering induced by a reduced word of the longest
    element, given as 1-based simple-transposition indices.

    Raises ValueError if the word has the wrong length, is not reduced, or
    does not multiply to the longest element.
    """
    word = list(word)
    m = len(word)
    n = round((1 + (1 + 8 * m) ** 0.5) / 2)
    if n * (n - 1) // 2 != m:
        raise ValueError(f"word length {m} is not a triangular number")
    if any(not 1 <= i <= n - 1 for i in word):
        raise ValueError(f"letter out of range for S_{n}")
    sigma = identity(n)
    ranked = {}
    for pos, i in enumerate(word, start=1):
        t = (sigma[i - 1], sigma[i])            # sigma * s_i * sigma^{-1}
        t = t if t[0] < t[1] else (t[1], t[0])
        if t in ranked:
            raise ValueError(f"word is not reduced (repeats {t} at {pos})")
        ranked[t] = pos
        win = list(sigma)
        win[i - 1], win[i] = win[i], win[i - 1]  # sigma <- sigma * s_i
        sigma = tuple(win)
    if sigma != longest_element(n):
        raise ValueError("word does not multiply to the longest element")
    return ReflectionOrdering(n, ranked)


def random_reduced_word(n: int, rng: Random) -> list:
    """
    A random reduced word of the longest element of S_n, by repeatedly
    taking a uniformly random left descent of the remainder.
    """
    x = longest_element(n)
    word = []
    while x != identity(n):
        i = rng.choice(left_descents(x))
        word.append(i)
        x = apply_transposition((i, i + 1), x)
    return word


def random_ordering(n: int, rng: Random) -> ReflectionOrdering:
    return from_reduced_word(random_reduced_word(n, rng))


# ---------------------------------------------------------------------------
# increasing paths

def increasing_label_seqs(F: Flipclass, ordering: ReflectionOrdering) -> list:
    rank = ordering.rank
    out = []
    for seq in F.label_seqs:
        if all(rank[seq[i]] <= rank[seq[i + 1]] for i in range(len(seq) - 1)):
            out.append(seq)
    return out


def count_increasing(F: Flipclass, ordering: ReflectionOrdering) -> int:
    """c(F): the number of paths of F with weakly increasing labels."""
    if not ordering.is_valid:
        raise ValueError("not a reflection ordering")
    return len(increasing_label_seqs(F, ordering))


def count_increasing_lex(F: Flipclass) -> int:
    """c(F) under the lexicographic ordering (tuple comparison fast path)."""
    count = 0
    for seq in F.label_seqs:
        if all(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
            count += 1
    return count


def lex_first_path(F: Flipclass, ordering: ReflectionOrdering) -> BruhatPath:
    """The orbit member least in the lexicographic order on rank sequences."""
    best = min(F.label_seqs,
               key=lambda seq: tuple(ordering.rank[t] for t in seq))
    return path_from_labels(F.u, best)
