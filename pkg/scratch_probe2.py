"""Scale probe: path totals and census timings (not part of the package)."""
import time
from collections import Counter

from flipclasses.perm import all_perms, bruhat_leq, edges_up, length
from flipclasses.flips import partition_into_orbits
from flipclasses.paths import enumerate_label_seqs

def total_paths_by_h(n, hmax):
    tot = Counter()
    def walk(x, d):
        if d == hmax:
            return
        for _, y, t in edges_up(x):
            tot[d + 1] += 1
            walk(y, d + 1)
    for u in all_perms(n):
        walk(u, 0)
    return tot

t0 = time.time()
tp5 = total_paths_by_h(5, 10)
print("total paths S_5 by h:", dict(sorted(tp5.items())), f"({time.time()-t0:.1f}s)")

t0 = time.time()
tp6 = total_paths_by_h(6, 5)
print("total paths S_6 by h<=5:", dict(sorted(tp6.items())), f"({time.time()-t0:.1f}s)")

# census S_6 h=5: enumerate per-u grouped by endpoint, orbit-partition each bucket
def census(n, h):
    t0 = time.time()
    n_classes = 0
    n_paths = 0
    for u in all_perms(n):
        buckets = {}
        # DFS collecting label seqs by endpoint
        labels = []
        def walk(x, d):
            if d == h:
                buckets.setdefault(x, []).append(tuple(labels))
                return
            for _, y, t in edges_up(x):
                labels.append(t)
                walk(y, d + 1)
                labels.pop()
        walk(u, 0)
        for v, seqs in sorted(buckets.items()):
            n_paths += len(seqs)
            seqs.sort()
            orbs = partition_into_orbits(u, v, h, seqs)
            n_classes += len(orbs)
    return n_classes, n_paths, time.time() - t0

nc, np_, dt = census(5, 4)
print(f"census S_5 h=4: {nc} classes, {np_} paths, {dt:.1f}s")
nc, np_, dt = census(5, 5)
print(f"census S_5 h=5: {nc} classes, {np_} paths, {dt:.1f}s")
nc, np_, dt = census(6, 3)
print(f"census S_6 h=3: {nc} classes, {np_} paths, {dt:.1f}s")
