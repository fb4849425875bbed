"""Structured search for the h=4 (d=7) triangular 4.8.8 patch.

Model: patch = union of FULL cells F plus extra single triangles H.
Enumerate candidate F (connected cell sets), then DFS over H with weight
constraints, validating candidates against code invariants and the d=7
failure-count fingerprints c4=5807, c5=73121 from the exact polynomial.
"""
import itertools
import sys
from collections import defaultdict

import numpy as np

from search_lattice import (analyze, cell_triangles, code_matrices, gf2_rank,
                            min_logical_weight, tri_vertices)

H_PARAM = 4
D = 2 * H_PARAM - 1
N_T = 2 * H_PARAM * H_PARAM - 1
M_T = H_PARAM * H_PARAM - 1
O8 = (H_PARAM - 1) * (H_PARAM - 2) // 2


def syndrome_cols(Hm):
    m, n = Hm.shape
    cols = []
    for c in range(n):
        bits = 0
        for r in range(m):
            if Hm[r, c]:
                bits |= 1 << r
        cols.append(bits)
    return cols


def small_weight_fingerprint(Hm):
    """c4 and c5 of the exact failure polynomial (d=7 code)."""
    m, n = Hm.shape
    cols = syndrome_cols(Hm)
    best = {}
    for w in (1, 2, 3, 4):
        for combo in itertools.combinations(range(n), w):
            s = 0
            for c in combo:
                s ^= cols[c]
            if s not in best or w < best[s]:
                best.setdefault(s, w)
    c4 = 0
    for combo in itertools.combinations(range(n), 4):
        s = 0
        for c in combo:
            s ^= cols[c]
        mw = best.get(s, 4)
        if mw % 2 == 1:
            c4 += 1
    c5 = 0
    for combo in itertools.combinations(range(n), 5):
        s = 0
        for c in combo:
            s ^= cols[c]
        mw = best.get(s, 5)
        if mw % 2 == 0:
            c5 += 1
    return c4, c5


def validate(patch, fingerprint=True):
    checks, w = analyze(patch)
    if len(checks) != M_T:
        return None
    covered = set()
    for s in checks.values():
        covered |= s
    if len(covered) != len(patch):
        return None
    cl = list(checks.values())
    for a in range(len(cl)):
        for b in range(a + 1, len(cl)):
            if len(cl[a] & cl[b]) % 2:
                return None

    def color(v):
        return "r" if v[0] == "c" else ("g" if (v[1] + v[2]) % 2 == 0 else "b")
    cv = list(checks.items())
    for a in range(len(cv)):
        for b in range(a + 1, len(cv)):
            if color(cv[a][0]) == color(cv[b][0]) and (cv[a][1] & cv[b][1]):
                return None
    Hm = code_matrices(patch, checks)
    if gf2_rank(Hm) != M_T:
        return None
    if min_logical_weight(Hm) != D:
        return None
    if fingerprint:
        c4, c5 = small_weight_fingerprint(Hm)
        if (c4, c5) != (5807, 73121):
            return ("WRONGPOLY", c4, c5)
    return checks


def main():
    window = [(i, j) for i in range(-1, H_PARAM + 1)
              for j in range(-1, H_PARAM + 1)]
    # candidate full-cell sets: connected, containing the central block rows
    base_block = [(i, j) for i in range(H_PARAM - 1)
                  for j in range(H_PARAM - 1 - i)]
    results = []
    for nfull in (6, 7):
        extra_full = nfull - len(base_block)
        fsets = []
        if extra_full == 0:
            fsets = [tuple(base_block)]
        else:
            others = [c for c in window if c not in base_block]
            for add in itertools.combinations(others, extra_full):
                fsets.append(tuple(base_block) + add)
        for F in fsets:
            ftris = [t for c in F for t in cell_triangles(*c)]
            nh = N_T - len(ftris)
            if nh < 0:
                continue
            # candidate extra triangles: cells adjacent to F
            fset = set(F)
            rim = set()
            for (i, j) in F:
                for di in (-1, 0, 1):
                    for dj in (-1, 0, 1):
                        c = (i + di, j + dj)
                        if c not in fset:
                            rim.add(c)
            cands = [t for c in sorted(rim) for t in cell_triangles(*c)]
            if len(cands) < nh:
                continue
            # quick forced analysis: grid vertices with base weight in {5,6,7}
            # must reach 8; those with base > 8 impossible.
            wbase = defaultdict(int)
            for t in ftris:
                for v in tri_vertices(t):
                    wbase[v] += 1
            if any(x > 8 for x in wbase.values()):
                continue
            for extra in itertools.combinations(cands, nh):
                patch = ftris + list(extra)
                res = validate(patch)
                if res is None:
                    continue
                if isinstance(res, tuple):
                    print("near miss (poly):", F, sorted(extra), res[1:],
                          flush=True)
                    continue
                print("SOLUTION F =", F)
                print("        H =", sorted(extra), flush=True)
                results.append((F, sorted(extra)))
                if len(results) >= 8:
                    return results
    return results


if __name__ == "__main__":
    r = main()
    print(len(r), "solutions")
