import time
import numpy as np
from h4_k7 import search7
from search_lattice import (analyze, cell_triangles, code_matrices, gf2_rank,
                            min_logical_weight, tri_vertices)
from solve_h4 import small_weight_fingerprint

N_T, M_T, D = 31, 15, 7
F4 = [(0,0),(1,0),(0,1),(1,1)]
core = [t for c in F4 for t in cell_triangles(*c)]
core += [(2,0,"N"),(2,0,"W"),(2,1,"S"),(2,1,"W"),
         (0,2,"S"),(0,2,"E"),(1,2,"S"),(1,2,"W")]
core = sorted(set(core))
assert len(core) == 24
pool_cells = [(-1,0),(-1,1),(0,-1),(1,-1),(2,0),(0,2),(2,1),(1,2),(3,0),(0,3),
              (2,2),(3,1),(1,3),(2,-1),(-1,2),(-1,-1),(3,-1),(-1,3),(2,3),(3,2)]
cands = sorted(set(t for c in pool_cells for t in cell_triangles(*c)) - set(core))
print(f"core {len(core)} cands {len(cands)} need {N_T-len(core)}", flush=True)

verts = sorted({v for t in set(core) | set(cands) for v in tri_vertices(t)}, key=str)
vidx = {v: i for i, v in enumerate(verts)}
wbase = np.zeros(len(verts), dtype=np.int8)
for t in core:
    for v in tri_vertices(t):
        wbase[vidx[v]] += 1
cv = np.array([[vidx[v] for v in tri_vertices(t)] for t in cands], dtype=np.int32)
atv = np.array([[vidx[v] for v in tri_vertices(t)] for t in core], dtype=np.int32)
out = np.zeros((3000000, 7), dtype=np.int32)
t0 = time.time()
k = search7(cv, wbase, len(cands), M_T, atv, len(core), out, 3000000)
print(f"kernel {k} survivors {time.time()-t0:.0f}s", flush=True)
good = []
for row in out[:k]:
    extra = [cands[i] for i in row]
    patch = core + extra
    checks, _ = analyze(patch)
    if len(checks) != M_T:
        continue
    covered = set()
    for s in checks.values():
        covered |= s
    if len(covered) != N_T:
        continue
    cl = list(checks.values())
    if any(len(cl[x] & cl[y]) % 2 for x in range(len(cl)) for y in range(x+1, len(cl))):
        continue
    H = code_matrices(patch, checks)
    if gf2_rank(H) != M_T:
        continue
    if min_logical_weight(H) != D:
        continue
    if small_weight_fingerprint(H) == (5807, 73121):
        good.append(sorted(extra))
        print("PAPER MATCH:", sorted(extra), flush=True)
        if len(good) >= 8:
            break
print(len(good), "good, total", time.time()-t0, "s")
