import sys
import time
from collections import defaultdict
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from grouplib import (GroupRecord, are_isomorphic, enumerate_order,
                      extension_candidates, is_abelian_table)

prior = {}
t0 = time.time()
for n in range(1, 37):
    prior[n] = enumerate_order(n, prior, verbose=False)
print(f"1..36: {time.time()-t0:.1f}s", flush=True)
cands = []
t0 = time.time()
for i, rec in enumerate(prior[32]):
    if rec.abelian and all(o <= 2 for o in rec.orders):
        continue
    t1 = time.time()
    for t in extension_candidates(rec, 2):
        if not is_abelian_table(t):
            cands.append(t)
    dt = time.time() - t1
    if dt > 3:
        print(f"  N#{i}: {dt:.1f}s", flush=True)
print(f"candidates: {len(cands)} in {time.time()-t0:.1f}s", flush=True)
t0 = time.time()
recs, seen = [], set()
for j, t in enumerate(cands):
    key = t.tobytes()
    if key in seen:
        continue
    seen.add(key)
    r = GroupRecord(t)
    r.fingerprint()
    recs.append(r)
    if j % 1000 == 0:
        print(f"  fp {j} @ {time.time()-t0:.1f}s", flush=True)
print(f"fingerprints: {len(recs)} unique, {time.time()-t0:.1f}s", flush=True)
buckets = defaultdict(list)
for r in recs:
    buckets[r.fingerprint()].append(r)
sizes = sorted((len(v) for v in buckets.values()), reverse=True)
print(f"{len(buckets)} buckets; largest {sizes[:8]}", flush=True)
t0 = time.time()
tests = 0
classes = 0
slow = 0
for fp, rs in buckets.items():
    reps = []
    for r in rs:
        hit = False
        for rep in reps:
            tests += 1
            t1 = time.time()
            iso = are_isomorphic(r, rep)
            if time.time() - t1 > 2:
                slow += 1
                print(f"  slow iso #{tests}: {time.time()-t1:.1f}s iso={iso}",
                      flush=True)
            if iso:
                hit = True
                break
        if not hit:
            reps.append(r)
    classes += len(reps)
print(f"dedup: {classes} classes, {tests} tests ({slow} slow), "
      f"{time.time()-t0:.1f}s", flush=True)
