"""h=4 search: 8-connected 6-cell shapes x 7 free triangles, prioritized."""
import itertools, time, json
import numpy as np
from h4_frames import run_frame

def connected8(F):
    fs = set(F)
    seen = {F[0]}
    stack = [F[0]]
    while stack:
        x, y = stack.pop()
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                nb = (x+dx, y+dy)
                if nb in fs and nb not in seen:
                    seen.add(nb); stack.append(nb)
    return len(seen) == len(F)

cells5 = [(i, j) for i in range(5) for j in range(5)]
shapes = []
for F in itertools.combinations(cells5, 6):
    if not connected8(F):
        continue
    xs = [c[0] for c in F]; ys = [c[1] for c in F]
    if min(xs) != 0 or min(ys) != 0:
        continue
    shapes.append(F)

def plausibility(F):
    # prefer compact shapes hugging the diagonal / staircase region
    s = 0.0
    for (i, j) in F:
        s += (i + j) + 0.3 * max(0, i + j - 3)
    # bonus for containing an interior-ish 2x2 (full octagon potential)
    fs = set(F)
    has22 = any((i, j) in fs and (i+1, j) in fs and (i, j+1) in fs and (i+1, j+1) in fs
                for i in range(4) for j in range(4))
    return (0 if has22 else 5, s)

shapes.sort(key=plausibility)
print(len(shapes), "8-connected F6 shapes", flush=True)

found = []
t0 = time.time()
for k, F in enumerate(shapes):
    g = run_frame(list(F), f"{k}/{len(shapes)} F={F}", max_out=2000000)
    if g:
        found.append((list(F), g))
        with open("h4_solutions.json", "w") as fh:
            json.dump([[F, [[list(t[:2]) + [t[2]] for t in ex] for ex in gg]]
                       for F, gg in found], fh, default=list)
        print("WROTE SOLUTION FILE", flush=True)
        if len(found) >= 2:
            break
print("done", len(found), time.time() - t0, flush=True)
