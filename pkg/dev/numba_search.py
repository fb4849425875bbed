"""Numba-accelerated free-triangle search for triangular 4.8.8 patches."""
import time
import numpy as np
from numba import njit

from search_lattice import (analyze, cell_triangles, code_matrices, gf2_rank,
                            min_logical_weight, tri_vertices)
from solve_h4 import small_weight_fingerprint


@njit(cache=True)
def search6(cand_verts, wbase, core_tri_verts, cand_count, m_target,
            n_core_tris, out, max_out):
    """DFS over 6-subsets with weight bookkeeping; emits m+coverage passers."""
    nv = wbase.shape[0]
    w = wbase.copy()
    nout = 0
    c = cand_count
    for a in range(c):
        for v in cand_verts[a]:
            w[v] += 1
        for b in range(a + 1, c):
            for v in cand_verts[b]:
                w[v] += 1
            for d in range(b + 1, c):
                for v in cand_verts[d]:
                    w[v] += 1
                for e in range(d + 1, c):
                    for v in cand_verts[e]:
                        w[v] += 1
                    for f in range(e + 1, c):
                        for v in cand_verts[f]:
                            w[v] += 1
                        for g in range(f + 1, c):
                            for v in cand_verts[g]:
                                w[v] += 1
                            m = 0
                            for vi in range(nv):
                                if w[vi] == 4 or w[vi] == 8:
                                    m += 1
                            if m == m_target:
                                # coverage: every core triangle and the six
                                # chosen ones touch >= 1 check vertex
                                ok = True
                                for ti in range(n_core_tris):
                                    hit = False
                                    for k in range(3):
                                        ww = w[core_tri_verts[ti, k]]
                                        if ww == 4 or ww == 8:
                                            hit = True
                                            break
                                    if not hit:
                                        ok = False
                                        break
                                if ok:
                                    for ci in (a, b, d, e, f, g):
                                        hit = False
                                        for k in range(3):
                                            ww = w[cand_verts[ci, k]]
                                            if ww == 4 or ww == 8:
                                                hit = True
                                                break
                                        if not hit:
                                            ok = False
                                            break
                                if ok and nout < max_out:
                                    out[nout, 0] = a
                                    out[nout, 1] = b
                                    out[nout, 2] = d
                                    out[nout, 3] = e
                                    out[nout, 4] = f
                                    out[nout, 5] = g
                                    nout += 1
                            for v in cand_verts[g]:
                                w[v] -= 1
                        for v in cand_verts[f]:
                            w[v] -= 1
                    for v in cand_verts[e]:
                        w[v] -= 1
                for v in cand_verts[d]:
                    w[v] -= 1
            for v in cand_verts[b]:
                w[v] -= 1
        for v in cand_verts[a]:
            w[v] -= 1
    return nout


def run_search(core, cands, n_target, m_target, d_target, fingerprint,
               max_out=2000000):
    all_tris = sorted(set(core) | set(cands))
    verts = sorted({v for t in all_tris for v in tri_vertices(t)}, key=str)
    vidx = {v: i for i, v in enumerate(verts)}
    wbase = np.zeros(len(verts), dtype=np.int8)
    for t in core:
        for v in tri_vertices(t):
            wbase[vidx[v]] += 1
    cand_verts = np.array([[vidx[v] for v in tri_vertices(t)] for t in cands],
                          dtype=np.int32)
    core_tv = np.array([[vidx[v] for v in tri_vertices(t)] for t in core],
                       dtype=np.int32)
    out = np.zeros((max_out, 6), dtype=np.int32)
    t0 = time.time()
    k = search6(cand_verts, wbase, core_tv, len(cands), m_target,
                len(core), out, max_out)
    print(f"numba pass: {k} survivors in {time.time()-t0:.0f}s", flush=True)
    good = []
    for row in out[:k]:
        extra = [cands[i] for i in row]
        patch = list(core) + extra
        checks, _ = analyze(patch)
        if len(checks) != m_target:
            continue
        cl = list(checks.values())
        if any(len(cl[x] & cl[y]) % 2 for x in range(len(cl))
               for y in range(x + 1, len(cl))):
            continue
        H = code_matrices(patch, checks)
        if gf2_rank(H) != m_target:
            continue
        if min_logical_weight(H) != d_target:
            continue
        if fingerprint is not None:
            fp = small_weight_fingerprint(H)
            if fp != fingerprint:
                continue
        good.append(sorted(extra))
        print("PAPER MATCH:", sorted(extra), flush=True)
        if len(good) >= 10:
            break
    return good
