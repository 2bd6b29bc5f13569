"""
Whole-group flipclass censuses and the invariant classification pipeline.

`iter_flipclasses(n, h)` streams every h-flipclass of S_n exactly once:
flipclasses of different (u, v) pairs are distinct census entries even when
invariant-equivalent. The census also reports the alternate count obtained
by deduplicating on the restricted canonical form (letters renumbered onto
1..|E(F)|), since the published census sequence does not say which
convention it counts.

The classification tables follow the finite reduction: every irreducible
h-flipclass is isomorphic to one of S_{h+1}, and every reducible one is a
shuffle product, under which iota polynomials multiply and increasing-path
counts multiply. Hence

    Ic_r = {(iota(F), c(F)) : F an r-flipclass of S_{r+1}}
    Rc_r = {(i1*i2, c1*c2) : (i1,c1) in Ac_j, (i2,c2) in Ac_k, j+k=r}
    Ac_r = Ic_r  union  Rc_r

covers all r-flipclasses of all symmetric groups. The invariant is *good*
at level h when the projection of Ac_h onto its first factor is injective;
then the table is a function iota -> c usable as a coefficient recipe.

Enumeration strategy: for n <= 6 a depth-first sweep from each u buckets
the length-h label sequences by endpoint (nothing but one source's paths is
ever in memory); for n >= 7 the census iterates over targets v, computes
the Bruhat down-set of v once, and runs a pruned search per source, which
bounds memory by a single (u, v) path set. Work is sharded over sources
(or targets) across worker processes; merging is a commutative dictionary
merge, so results are independent of scheduling.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field, asdict
from hashlib import blake2b

from .flips import Flipclass, _orbit_label_seqs
from .intervals import downset as _downset
from .invariants import IotaPolynomial, time_support_graph
from .perm import Perm, all_perms, edges_up, length
from .reduction import restrict
from .reforder import count_increasing_lex
from .tables import ac_table_path, save_ac_table, table_dir

__all__ = [
    "CensusSummary", "iter_flipclasses", "census", "published_census_counts",
    "build_Ic", "build_Ac", "check_goodness", "GoodnessReport",
    "probe_conjecture", "write_classification",
]

# number of h-flipclasses of S_{h+1} as published, h = 1..6; the h=1 entry
# does not match any orbit count (B(S_2) has a single length-1 path), so the
# census reports the discrepancy rather than reproducing it
PUBLISHED_CENSUS = (4, 4, 50, 1096, 36634, 1701056)


def published_census_counts(h: int) -> int | None:
    return PUBLISHED_CENSUS[h - 1] if 1 <= h <= 6 else None


# ---------------------------------------------------------------------------
# enumeration

def _paths_from(u: Perm, h: int) -> dict:
    """All length-h label sequences from u, bucketed by endpoint."""
    buckets: dict = {}
    labels: list = []

    def walk(x: Perm, d: int) -> None:
        if d == h:
            buckets.setdefault(x, []).append(tuple(labels))
            return
        for _, y, t in edges_up(x):
            labels.append(t)
            walk(y, d + 1)
            labels.pop()

    walk(u, 0)
    return buckets


def _paths_to(v: Perm, u: Perm, h: int, down: set) -> list:
    """Length-h label sequences u -> v, pruned by membership in down(v)."""
    lv = length(v)
    out: list = []
    labels: list = []

    def walk(x: Perm, d: int) -> None:
        if d == h - 1:
            for _, y, t in edges_up(x):
                if y == v:
                    out.append(tuple(labels) + (t,))
            return
        left = h - d - 1
        for _, y, t in edges_up(x):
            rest = lv - length(y)
            if rest < left or (rest - left) % 2 or y not in down:
                continue
            labels.append(t)
            walk(y, d + 1)
            labels.pop()

    if h == 0:
        return [()] if u == v else []
    walk(u, 0)
    return out


def _iter_pairs(n: int, h: int, sources=None, strategy: str | None = None):
    """
    Yield (u, v, label_seqs) with P_h(u, v) nonempty, deterministically.

    "from-source" sweeps all paths out of each u at once (fast, but holds
    one source's paths in memory); "to-target" walks towards each v through
    its Bruhat down-set (slower, memory bounded by one pair). Defaults by
    degree: S_7 and up use "to-target".
    """
    strategy = strategy or ("from-source" if n < 7 else "to-target")
    if strategy == "from-source":
        for u in sources if sources is not None else all_perms(n):
            buckets = _paths_from(u, h)
            for v in sorted(buckets):
                yield u, v, buckets[v]
    elif strategy == "to-target":
        for v in sources if sources is not None else all_perms(n):
            down = _downset(v)
            lv = length(v)
            for u in sorted(down):
                gap = lv - length(u)
                if gap < h or (gap - h) % 2:
                    continue
                seqs = _paths_to(v, u, h, down)
                if seqs:
                    yield u, v, seqs
    else:
        raise ValueError(f"unknown strategy {strategy!r}")


def iter_flipclasses(n: int, h: int, collect_ts: bool = False):
    """
    Every h-flipclass of S_n exactly once. With `collect_ts`, yields
    (flipclass, ts_edges) where ts_edges is the set of (i, x, y, label)
    quadruples gathered during orbit closure (the time-support graph).
    """
    if n < 2 or h < 0:
        raise ValueError("need n >= 2 and h >= 0")
    for u, v, seqs in _iter_pairs(n, h):
        seqs.sort()
        yield from _pair_orbits(u, v, h, seqs, collect_ts)


def _pair_orbits(u, v, h, seqs, collect_ts):
    done: set = set()
    for seq in seqs:
        if seq in done:
            continue
        ts_edges: set | None = set() if collect_ts else None
        orbit = _orbit_label_seqs(u, seq, ts_edges=ts_edges)
        done |= orbit
        fc = Flipclass(u, v, h, tuple(sorted(orbit)))
        yield (fc, ts_edges) if collect_ts else fc
    if len(done) != len(seqs):
        raise AssertionError(f"orbits escaped P_h({u}, {v})")


# ---------------------------------------------------------------------------
# census aggregation

@dataclass
class CensusSummary:
    n: int
    h: int
    flipclass_count: int = 0
    path_count: int = 0
    pair_count: int = 0
    distinct_iota: int = 0
    distinct_tvectors: int = 0
    alternate_count: int = 0
    published: int | None = None
    matches_published: bool | None = None
    alternate_matches_published: bool | None = None
    workers: int = 1
    elapsed_seconds: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def _restricted_digest(fc: Flipclass) -> bytes:
    r = restrict(fc)
    blob = repr((r.u, r.label_seqs)).encode()
    return blake2b(blob, digest_size=12).digest()


def _census_chunk(args):
    """Aggregate one shard of sources; returns mergeable plain data."""
    n, h, sources, want_ic, strategy = args
    ic: dict = {}
    tvecs: set = set()
    digests: set = set()
    n_classes = n_paths = n_pairs = 0
    for u, v, seqs in _iter_pairs(n, h, sources=sources, strategy=strategy):
        seqs.sort()
        n_pairs += 1
        n_paths += len(seqs)
        for item in _pair_orbits(u, v, h, seqs, collect_ts=want_ic):
            fc, ts_edges = item if want_ic else (item, None)
            n_classes += 1
            digests.add(_restricted_digest(fc))
            if want_ic:
                ts = time_support_graph(fc, ts_edges)
                iota = ts.iota()
                tvecs.add(iota.t_vector())
                c = count_increasing_lex(fc)
                key = iota.canonical_str()
                ic.setdefault(key, Counter())[c] += 1
    return n_classes, n_paths, n_pairs, ic, tvecs, digests


def census(n: int, h: int, workers: int = 1, want_ic: bool = True,
           strategy: str | None = None):
    """
    Run the full census of h-flipclasses of S_n.

    Returns (summary, ic) where ic maps canonical iota strings to
    Counter(c -> multiplicity); ic is empty when want_ic is false.
    """
    t0 = time.time()
    ic: dict = {}
    tvecs: set = set()
    digests: set = set()
    n_classes = n_paths = n_pairs = 0
    if workers <= 1:
        chunks = [(n, h, None, want_ic, strategy)]
        results = map(_census_chunk, chunks)
    else:
        from multiprocessing import get_context
        outer = list(all_perms(n))
        size = max(1, (len(outer) + workers * 8 - 1) // (workers * 8))
        chunks = [(n, h, outer[i:i + size], want_ic, strategy)
                  for i in range(0, len(outer), size)]
        ctx = get_context("fork")
        pool = ctx.Pool(workers)
        try:
            results = pool.imap_unordered(_census_chunk, chunks)
            results = list(results)
        finally:
            pool.close()
            pool.join()
    for c_cls, c_paths, c_pairs, c_ic, c_tvecs, c_digests in results:
        n_classes += c_cls
        n_paths += c_paths
        n_pairs += c_pairs
        tvecs |= c_tvecs
        digests |= c_digests
        for key, counter in c_ic.items():
            ic.setdefault(key, Counter()).update(counter)
    published = published_census_counts(h) if n == h + 1 else None
    summary = CensusSummary(
        n=n, h=h,
        flipclass_count=n_classes,
        path_count=n_paths,
        pair_count=n_pairs,
        distinct_iota=len(ic),
        distinct_tvectors=len(tvecs),
        alternate_count=len(digests),
        published=published,
        matches_published=(None if published is None
                           else n_classes == published),
        alternate_matches_published=(None if published is None
                                     else len(digests) == published),
        workers=workers,
        elapsed_seconds=round(time.time() - t0, 3),
    )
    return summary, ic


# ---------------------------------------------------------------------------
# classification tables

def build_Ic(h: int, workers: int = 1, census_cache: dict | None = None):
    """(iota, c) pairs over the census of S_{h+1}, with multiplicities."""
    if census_cache is not None and h in census_cache:
        return census_cache[h]
    result = census(h + 1, h, workers=workers, want_ic=True)
    if census_cache is not None:
        census_cache[h] = result
    return result


def _merge_pairs(table: dict, key: str, c: int, count: int,
                 provenance: str) -> None:
    entry = table.setdefault(key, {})
    got = entry.setdefault(c, [0, set()])
    got[0] += count
    got[1].add(provenance)


def build_Ac(h: int, workers: int = 1, census_cache: dict | None = None):
    """
    Ac_r tables for r = 1..h: maps canonical iota string to
    {c: [multiplicity, {provenances}]}. Lower censuses are recomputed, or
    taken from `census_cache` (a dict r -> (summary, ic)).
    """
    acs: dict = {}
    for r in range(1, h + 1):
        table: dict = {}
        _, ic = build_Ic(r, workers=workers, census_cache=census_cache)
        for key, counter in ic.items():
            for c, count in counter.items():
                _merge_pairs(table, key, c, count, "irreducible-census")
        for j in range(1, r // 2 + 1):
            k = r - j
            for key1, entry1 in acs[j].items():
                p1 = IotaPolynomial.from_canonical_str(key1)
                for key2, entry2 in acs[k].items():
                    key = (p1 * IotaPolynomial.from_canonical_str(key2)).canonical_str()
                    for c1 in entry1:
                        for c2 in entry2:
                            _merge_pairs(table, key, c1 * c2, 1,
                                         "product-closure")
        acs[r] = table
    return acs


@dataclass
class GoodnessReport:
    h: int
    invariant: str
    good: bool
    table_size: int
    conflicts: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def _project_tvec(table: dict) -> dict:
    out: dict = {}
    for key, entry in table.items():
        tkey = IotaPolynomial.from_canonical_str(key).t_vector()
        tentry = out.setdefault(tkey, {})
        for c, (count, prov) in entry.items():
            got = tentry.setdefault(c, [0, set()])
            got[0] += count
            got[1] |= prov
    return out


def check_goodness(h: int, invariant: str = "iota", workers: int = 1,
                   ac: dict | None = None,
                   census_cache: dict | None = None) -> GoodnessReport:
    """
    Does the invariant determine c across all h-flipclasses (census of
    S_{h+1} plus product closure)?
    """
    if invariant not in ("iota", "tvec"):
        raise ValueError(f"unknown invariant {invariant!r}")
    if ac is None:
        ac = build_Ac(h, workers=workers, census_cache=census_cache)[h]
    table = _project_tvec(ac) if invariant == "tvec" else ac
    conflicts = []
    for key, entry in sorted(table.items(), key=lambda kv: str(kv[0])):
        if len(entry) > 1:
            conflicts.append({
                "key": key if isinstance(key, str) else str(key),
                "values": sorted(entry),
                "witnesses": {str(c): sorted(entry[c][1]) for c in entry},
            })
    return GoodnessReport(h=h, invariant=invariant, good=not conflicts,
                          table_size=len(table), conflicts=conflicts)


def ac_function(ac_table: dict) -> dict:
    """Collapse an Ac table to a key -> c function; raises on conflicts."""
    out = {}
    for key, entry in ac_table.items():
        if len(entry) != 1:
            raise ValueError(f"iota key maps to several counts: {key}")
        out[key] = next(iter(entry))
    return out


def write_classification(h: int, workers: int = 1, directory=None,
                         census_cache: dict | None = None) -> dict:
    """
    Build and persist ic/ac tables and a JSON summary for levels 1..h.
    Returns {"summaries": [...], "goodness": [...], "paths": [...]}.
    """
    directory = table_dir(directory)
    directory.mkdir(parents=True, exist_ok=True)
    if census_cache is None:
        census_cache = {}
    for r in range(1, h + 1):
        build_Ic(r, workers=workers, census_cache=census_cache)
    summaries = [census_cache[r][0] for r in range(1, h + 1)]
    acs = build_Ac(h, workers=workers, census_cache=census_cache)
    reports = []
    paths = []
    for r in range(1, h + 1):
        ic_path = directory / f"ic{r}.tsv"
        with open(ic_path, "w") as fh:
            _, ic = census_cache[r]
            for key in sorted(ic):
                for c in sorted(ic[key]):
                    fh.write(f"{key}\t{c}\t{ic[key][c]}\n")
        paths.append(str(ic_path))
        report = check_goodness(r, ac=acs[r])
        reports.append(report)
        if report.good:
            path = ac_table_path(r, directory)
            save_ac_table(ac_function(acs[r]), path)
            paths.append(str(path))
    summary_path = directory / f"classify_h{h}.json"
    with open(summary_path, "w") as fh:
        json.dump({
            "summaries": [asdict(s) for s in summaries],
            "goodness": [asdict(r) for r in reports],
            "tables": paths,
        }, fh, indent=2, sort_keys=True)
    return {"summaries": summaries, "goodness": reports,
            "paths": paths, "json": str(summary_path)}


# ---------------------------------------------------------------------------
# conjecture probe

def _path_structure(fc: Flipclass):
    """The unlabelled flipclass: paths as tuples of element ids."""
    from .perm import apply_transposition
    ids: dict = {}
    paths = []
    for seq in fc.label_seqs:
        x = fc.u
        walk = [ids.setdefault(x, len(ids))]
        for t in seq:
            x = apply_transposition(t, x)
            walk.append(ids.setdefault(x, len(ids)))
        paths.append(tuple(walk))
    return len(ids), sorted(paths)


def _refine_colors(n_elems: int, paths) -> tuple:
    """
    Color refinement on the element/path incidence structure; returns a
    canonical certificate (stable under element relabelling).
    """
    colors = [0] * n_elems
    for _ in range(n_elems + 2):
        path_colors = [tuple(colors[e] for e in p) for p in paths]
        sig: dict = {e: [] for e in range(n_elems)}
        for pc, p in zip(path_colors, paths):
            for pos, e in enumerate(p):
                sig[e].append((pc, pos))
        new = {e: (colors[e], tuple(sorted(sig[e]))) for e in range(n_elems)}
        palette = {v: i for i, v in enumerate(sorted(set(new.values())))}
        nxt = [palette[new[e]] for e in range(n_elems)]
        if nxt == colors:
            break
        colors = nxt
    return tuple(sorted(Counter(tuple(colors[e] for e in p) for p in paths).items()))


def _exact_unlabelled_iso(s1, s2) -> bool:
    """Backtracking isomorphism between two path structures."""
    n1, paths1 = s1
    n2, paths2 = s2
    if n1 != n2 or len(paths1) != len(paths2):
        return False
    target = set(paths2)
    mapping = [-1] * n1
    used = [False] * n1

    def extend(idx):
        if idx == len(paths1):
            return True
        path = paths1[idx]
        for cand in paths2:
            ok = True
            trial = []
            for a, b in zip(path, cand):
                if mapping[a] == -1 and not used[b]:
                    mapping[a] = b
                    used[b] = True
                    trial.append((a, b))
                elif mapping[a] != b:
                    ok = False
                    break
            if ok and extend(idx + 1):
                return True
            for a, b in trial:
                mapping[a] = -1
                used[b] = False
        return False

    if not extend(0):
        return False
    image = {tuple(mapping[e] for e in p) for p in paths1}
    return image == target


def probe_conjecture(h: int, n: int | None = None, budget: int = 10_000) -> dict:
    """
    Search the census of S_n (default S_{h+1}) for two flipclasses with
    isomorphic unlabelled structures but different increasing-path counts.

    Only classes sharing an iota key can collide (iota is preserved by
    unlabelled isomorphism), so candidates are pairs with equal iota key
    and different c. Orientation is kept fixed; a time-reversal variant of
    the conjecture is not probed.
    """
    n = n or h + 1
    by_iota: dict = {}
    n_classes = 0
    for fc, ts_edges in iter_flipclasses(n, h, collect_ts=True):
        n_classes += 1
        iota = time_support_graph(fc, ts_edges).iota().canonical_str()
        c = count_increasing_lex(fc)
        by_iota.setdefault(iota, []).append((c, fc))
    candidates = {key: entries for key, entries in by_iota.items()
                  if len({c for c, _ in entries}) > 1}
    tested = 0
    counterexamples = []
    exhausted = False
    for key, entries in sorted(candidates.items()):
        by_hash: dict = {}
        for c, fc in entries:
            s = _path_structure(fc)
            cert = _refine_colors(*s)
            by_hash.setdefault(cert, []).append((c, fc, s))
        for cert, bucket in by_hash.items():
            for i in range(len(bucket)):
                for j in range(i + 1, len(bucket)):
                    c1, f1, s1 = bucket[i]
                    c2, f2, s2 = bucket[j]
                    if c1 == c2:
                        continue
                    if tested >= budget:
                        exhausted = True
                        break
                    tested += 1
                    if _exact_unlabelled_iso(s1, s2):
                        counterexamples.append({
                            "iota": key, "c1": c1, "c2": c2,
                            "flipclass1": f1.to_text(),
                            "flipclass2": f2.to_text(),
                        })
    return {
        "h": h, "n": n,
        "classes": n_classes,
        "iota_keys_with_conflicting_c": len(candidates),
        "pairs_tested": tested,
        "budget_exhausted": exhausted,
        "counterexamples": counterexamples,
        "orientation": "fixed (time reversal not probed)",
    }
