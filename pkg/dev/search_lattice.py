"""Dev-time search for the triangular 4.8.8 patch in union-jack form.

Qubits are triangles of a centered-square (union-jack) lattice: each unit
cell (i,j) holds four triangles N/S/E/W around its center.  Octagon checks
live on grid vertices (8 incident triangles in the bulk), square checks on
cell centers (4 incident triangles).  We search for which rim triangles to
adjoin to a staircase block of full cells so that all color-code invariants
hold, using the d=5 exact failure polynomial as the final oracle.
"""
import itertools
import sys
from collections import defaultdict

import numpy as np


def cell_triangles(i, j):
    return [(i, j, t) for t in "NSEW"]


def tri_vertices(tri):
    i, j, t = tri
    c = ("c", i, j)
    if t == "S":
        return [("g", i, j), ("g", i + 1, j), c]
    if t == "N":
        return [("g", i, j + 1), ("g", i + 1, j + 1), c]
    if t == "W":
        return [("g", i, j), ("g", i, j + 1), c]
    if t == "E":
        return [("g", i + 1, j), ("g", i + 1, j + 1), c]
    raise ValueError(t)


def analyze(patch):
    """Return (checks dict vertex -> triangle set) or None if weights bad."""
    w = defaultdict(set)
    for tri in patch:
        for v in tri_vertices(tri):
            w[v].add(tri)
    checks = {v: s for v, s in w.items() if len(s) in (4, 8)}
    return checks, w


def code_matrices(patch, checks):
    idx = {tri: k for k, tri in enumerate(sorted(patch))}
    H = np.zeros((len(checks), len(patch)), dtype=np.uint8)
    for r, (v, s) in enumerate(sorted(checks.items())):
        for tri in s:
            H[r, idx[tri]] = 1
    return H


def gf2_rank(M):
    M = M.copy() % 2
    r = 0
    rows, cols = M.shape
    for c in range(cols):
        piv = None
        for rr in range(r, rows):
            if M[rr, c]:
                piv = rr
                break
        if piv is None:
            continue
        M[[r, piv]] = M[[piv, r]]
        for rr in range(rows):
            if rr != r and M[rr, c]:
                M[rr] ^= M[r]
        r += 1
    return r


def min_logical_weight(H, nmax=None):
    """Min odd weight over the zero-syndrome space (n odd, rows even wt)."""
    m, n = H.shape
    # nullspace basis over GF(2)
    A = H.copy() % 2
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for rr in range(r, m):
            if A[rr, c]:
                piv = rr
                break
        if piv is None:
            continue
        A[[r, piv]] = A[[piv, r]]
        for rr in range(m):
            if rr != r and A[rr, c]:
                A[rr] ^= A[r]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.uint8)
        v[f] = 1
        for rr, pc in enumerate(pivots):
            if A[rr, f]:
                v[pc] = 1
        basis.append(v)
    k = len(basis)
    if k > 22:
        return None
    best = n + 1
    vecs = np.array(basis, dtype=np.uint8)
    for mask in range(1, 1 << k):
        sel = np.zeros(n, dtype=np.uint8)
        mm = mask
        bi = 0
        while mm:
            if mm & 1:
                sel ^= vecs[bi]
            mm >>= 1
            bi += 1
        wt = int(sel.sum())
        if wt % 2 == 1 and wt < best:
            best = wt
    return best


def exact_polynomial(H):
    """counts c_w of MLE failures, for small n via full enumeration."""
    m, n = H.shape
    cols = np.zeros(n, dtype=np.uint32)
    for c in range(n):
        bits = 0
        for r in range(m):
            if H[r, c]:
                bits |= 1 << r
        cols[c] = bits
    # min weight per syndrome
    minw = np.full(1 << m, 255, dtype=np.uint8)
    syn = np.zeros(1 << n, dtype=np.uint32)
    # iterate patterns in gray-ish order: straightforward loop fine for n<=17
    synd = np.zeros(1, dtype=np.uint32)
    # vectorized: build syndromes by dynamic programming over bits
    syn_all = np.zeros(1 << n, dtype=np.uint32)
    for c in range(n):
        half = 1 << c
        syn_all[half:2 * half] = syn_all[:half] ^ cols[c]
    wt_all = np.zeros(1 << n, dtype=np.uint8)
    for c in range(n):
        half = 1 << c
        wt_all[half:2 * half] = wt_all[:half] + 1
    np.minimum.at(minw, syn_all, wt_all)
    fail = (wt_all % 2) != (minw[syn_all] % 2)
    counts = np.bincount(wt_all[fail], minlength=n + 1)
    return counts


TARGET_D5 = {3: 332, 4: 1655, 5: 2327, 6: 7612, 7: 7312, 8: 14563, 9: 9747,
             10: 12136, 11: 4764, 12: 3861, 13: 725, 14: 348, 15: 136, 16: 17,
             17: 1}


def search(h, quick=False):
    d = 2 * h - 1
    n_target = 2 * h * h - 1
    m_target = h * h - 1
    block = [(i, j) for i in range(h - 1) for j in range(h - 1 - i)]
    base = [t for c in block for t in cell_triangles(*c)]
    # rim candidates: triangles of cells adjacent (incl. diagonal) to block
    blockset = set(block)
    rim_cells = set()
    for (i, j) in block:
        for di in (-1, 0, 1):
            for dj in (-1, 0, 1):
                c = (i + di, j + dj)
                if c not in blockset:
                    rim_cells.add(c)
    cands = [t for c in sorted(rim_cells) for t in cell_triangles(*c)]
    need = n_target - len(base)
    print(f"h={h} d={d}: base {len(base)} triangles, need {need} extras "
          f"from {len(cands)} candidates", flush=True)
    solutions = []
    tried = 0
    for extra in itertools.combinations(cands, need):
        tried += 1
        patch = base + list(extra)
        checks, w = analyze(patch)
        if len(checks) != m_target:
            continue
        # every triangle covered
        covered = set()
        for s in checks.values():
            covered |= s
        if len(covered) != n_target:
            continue
        # CSS: pairwise even overlaps
        ok = True
        cl = list(checks.values())
        for a in range(len(cl)):
            for b in range(a + 1, len(cl)):
                if len(cl[a] & cl[b]) % 2:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        # same-color checks must not share triangles
        def color(v):
            if v[0] == "c":
                return "r"
            return "g" if (v[1] + v[2]) % 2 == 0 else "b"
        ok = True
        cv = list(checks.items())
        for a in range(len(cv)):
            for b in range(a + 1, len(cv)):
                if color(cv[a][0]) == color(cv[b][0]) and (cv[a][1] & cv[b][1]):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        H = code_matrices(patch, checks)
        if gf2_rank(H) != m_target:
            continue
        mlw = min_logical_weight(H)
        if mlw != d:
            continue
        print(f"  candidate after {tried} combos: extras={sorted(extra)} "
              f"minlog={mlw}", flush=True)
        if h == 3 and not quick:
            counts = exact_polynomial(H)
            match = all(counts[k] == v for k, v in TARGET_D5.items()) and \
                all(counts[k] == 0 for k in range(len(counts))
                    if k not in TARGET_D5)
            print(f"    poly={dict((i, int(c)) for i, c in enumerate(counts) if c)} "
                  f"match={match}", flush=True)
            if match:
                solutions.append((sorted(extra), checks))
        else:
            solutions.append((sorted(extra), checks))
        if len(solutions) >= 40:
            break
    print(f"h={h}: {len(solutions)} solutions after {tried} combos")
    for extra, checks in solutions[:40]:
        print("  EXTRA:", extra)
    return solutions


if __name__ == "__main__":
    h = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    search(h)
