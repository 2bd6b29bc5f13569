"""Probe: classification pipeline through h=4, S_6@5 census timing."""
import time
from flipclasses.classify import (
    build_Ac, census, check_goodness, probe_conjecture,
)

cache = {}
t0 = time.time()
for h in (1, 2, 3, 4):
    summary, ic = census(h + 1, h, want_ic=True)
    cache[h] = (summary, ic)
    print(f"census S_{h+1}@{h}: {summary.flipclass_count} classes, "
          f"{summary.distinct_iota} iota keys, {summary.distinct_tvectors} tvecs, "
          f"alt={summary.alternate_count}, {summary.elapsed_seconds}s")

acs = build_Ac(4, census_cache=cache)
for r in (1, 2, 3, 4):
    rep_iota = check_goodness(r, ac=acs[r])
    rep_tvec = check_goodness(r, invariant="tvec", ac=acs[r])
    print(f"h={r}: goodness iota={rep_iota.good} (|Ac|={rep_iota.table_size}), "
          f"tvec={rep_tvec.good} (|Ac|={rep_tvec.table_size})")

print(probe_conjecture(3))

# S_6 @ 5 census with invariants, single worker
t0 = time.time()
summary, ic = census(6, 5, want_ic=True)
print(f"census S_6@5: {summary.flipclass_count} classes (expect 36634), "
      f"{summary.distinct_iota} iota keys, {summary.distinct_tvectors} tvecs "
      f"(expect 104), alt={summary.alternate_count}, {summary.elapsed_seconds}s")
cache[5] = (summary, ic)

t0 = time.time()
acs = build_Ac(5, census_cache=cache)
rep5 = check_goodness(5, ac=acs[5])
rep5t = check_goodness(5, invariant="tvec", ac=acs[5])
print(f"h=5 goodness iota={rep5.good}, tvec={rep5t.good} with "
      f"{len(rep5t.conflicts)} conflicts (expect 7) ({time.time()-t0:.1f}s)")
for c in rep5t.conflicts:
    print("  conflict:", c["key"], c["values"])
