import itertools, time
import numpy as np
from numba import njit
from search_lattice import (analyze, cell_triangles, code_matrices, gf2_rank,
                            min_logical_weight, tri_vertices, exact_polynomial,
                            TARGET_D5)

N_T, M_T, D = 17, 8, 5

@njit
def search5(cand_verts, wbase, cand_count, m_target, out, max_out):
    nv = wbase.shape[0]
    w = wbase.copy()
    nout = 0
    for a in range(cand_count):
        for v in cand_verts[a]:
            w[v] += 1
        for b in range(a+1, cand_count):
            for v in cand_verts[b]:
                w[v] += 1
            for c in range(b+1, cand_count):
                for v in cand_verts[c]:
                    w[v] += 1
                for d in range(c+1, cand_count):
                    for v in cand_verts[d]:
                        w[v] += 1
                    for e in range(d+1, cand_count):
                        for v in cand_verts[e]:
                            w[v] += 1
                        m = 0
                        for vi in range(nv):
                            if w[vi] == 4 or w[vi] == 8:
                                m += 1
                        if m == m_target and nout < max_out:
                            out[nout, 0] = a; out[nout, 1] = b; out[nout, 2] = c
                            out[nout, 3] = d; out[nout, 4] = e
                            nout += 1
                        for v in cand_verts[e]:
                            w[v] -= 1
                    for v in cand_verts[d]:
                        w[v] -= 1
                for v in cand_verts[c]:
                    w[v] -= 1
            for v in cand_verts[b]:
                w[v] -= 1
        for v in cand_verts[a]:
            w[v] -= 1
    return nout

window = [(i, j) for i in range(-2, 4) for j in range(-2, 4)]
alltris = [t for c in window for t in cell_triangles(*c)]
verts = sorted({v for t in alltris for v in tri_vertices(t)}, key=str)
vidx = {v: i for i, v in enumerate(verts)}

def full_validate(patch):
    checks, _ = analyze(patch)
    if len(checks) != M_T:
        return False
    covered = set()
    for s in checks.values():
        covered |= s
    if len(covered) != N_T:
        return False
    cl = list(checks.values())
    if any(len(cl[x] & cl[y]) % 2 for x in range(len(cl)) for y in range(x+1, len(cl))):
        return False
    H = code_matrices(patch, checks)
    if gf2_rank(H) != M_T:
        return False
    if min_logical_weight(H) != D:
        return False
    counts = exact_polynomial(H)
    return all(counts[k] == v for k, v in TARGET_D5.items()) and \
        all(counts[k] == 0 for k in range(len(counts)) if k not in TARGET_D5)

t0 = time.time()
found = []
seen_708 = 0
cells = sorted(set(window))
for F in itertools.combinations(cells, 3):
    fs = set(F)
    seen = {F[0]}
    stack = [F[0]]
    while stack:
        x, y = stack.pop()
        for dx, dy in ((1,0),(-1,0),(0,1),(0,-1)):
            nb = (x+dx, y+dy)
            if nb in fs and nb not in seen:
                seen.add(nb); stack.append(nb)
    if len(seen) != 3:
        continue
    core = sorted(set(t for c in F for t in cell_triangles(*c)))
    cands = [t for t in alltris if t not in core]
    wbase = np.zeros(len(verts), dtype=np.int8)
    for t in core:
        for v in tri_vertices(t):
            wbase[vidx[v]] += 1
    cv = np.array([[vidx[v] for v in tri_vertices(t)] for t in cands], dtype=np.int32)
    out = np.zeros((500000, 5), dtype=np.int32)
    k = search5(cv, wbase, len(cands), M_T, out, 500000)
    seen_708 += k
    for row in out[:k]:
        extra = [cands[i] for i in row]
        patch = core + extra
        if full_validate(patch):
            found.append((F, sorted(extra)))
            print("SOL F =", F, "extras =", sorted(extra), flush=True)
print(f"{len(found)} solutions total, {seen_708} m-passers, {time.time()-t0:.0f}s")
# classify F-shapes
from collections import Counter
shapes = Counter()
for F, e in found:
    xs = [c[0] for c in F]; ys = [c[1] for c in F]
    norm = tuple(sorted((x - min(xs), y - min(ys)) for x, y in F))
    shapes[norm] += 1
print(shapes)
