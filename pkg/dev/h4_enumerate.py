"""Exhaustive h=4 search: all connected 6-cell shapes x 7 free triangles."""
import itertools, time, json, sys
import numpy as np
from h4_frames import run_frame

def connected(F):
    fs = set(F)
    seen = {F[0]}
    stack = [F[0]]
    while stack:
        x, y = stack.pop()
        for dx, dy in ((1,0),(-1,0),(0,1),(0,-1)):
            nb = (x+dx, y+dy)
            if nb in fs and nb not in seen:
                seen.add(nb); stack.append(nb)
    return len(seen) == len(F)

cells5 = [(i, j) for i in range(5) for j in range(5)]
shapes = []
for F in itertools.combinations(cells5, 6):
    if not connected(F):
        continue
    xs = [c[0] for c in F]; ys = [c[1] for c in F]
    if min(xs) != 0 or min(ys) != 0:
        continue
    if max(xs) > 3 and max(ys) > 3:
        pass
    shapes.append(F)
print(len(shapes), "connected F6 shapes", flush=True)

t0 = time.time()
found = []
for k, F in enumerate(shapes):
    g = run_frame(list(F), f"{k}/{len(shapes)} F={F}", max_out=5000000)
    if g:
        found.append((F, g))
        with open("h4_solutions.json", "w") as fh:
            json.dump([[list(F), [[list(t[:2]) + [t[2]] for t in ex] for ex in g]]
                       for F, g in found], fh)
        print("WROTE SOLUTION FILE", flush=True)
        if len(found) >= 2:
            break
print("done", len(found), time.time() - t0, flush=True)
