"""Verify the generalized triangular 4.8.8 patch rule for several h."""
import sys
import numpy as np
from search_lattice import (analyze, cell_triangles, code_matrices, gf2_rank,
                            min_logical_weight, exact_polynomial, TARGET_D5,
                            tri_vertices)


def build_patch(h):
    block = [(i, j) for i in range(h - 1) for j in range(h - 1 - i)]
    patch = [t for c in block for t in cell_triangles(*c)]
    for i in range(1, h - 1):
        j = h - 1 - i
        patch.append((i, j, "S"))
        patch.append((i, j, "W"))
    patch.append((h - 1, 0, "W"))
    patch.append((0, h - 1, "S"))
    patch.append((h - 2, -1, "N"))
    return patch


def main():
    for h in range(2, 7):
        d = 2 * h - 1
        patch = build_patch(h)
        n = len(patch)
        checks, w = analyze(patch)
        m = len(checks)
        n_t, m_t = 2 * h * h - 1, h * h - 1
        weights = sorted(len(s) for s in checks.values())
        covered = set()
        for s in checks.values():
            covered |= s
        css = all((len(a & b) % 2) == 0
                  for i, a in enumerate(checks.values())
                  for j, b in enumerate(checks.values()) if i < j)
        H = code_matrices(patch, checks)
        rank = gf2_rank(H)
        mlw = min_logical_weight(H) if n <= 50 else "skip"
        print(f"h={h} d={d}: n={n}/{n_t} m={m}/{m_t} cov={len(covered)==n} "
              f"css={css} rank={rank} minlog={mlw} w8={weights.count(8)}")
        # membership profile: corners (1), mids (2), interior (3)
        memb = {}
        for tri in patch:
            memb[tri] = sum(1 for v in tri_vertices(tri) if v in checks)
        from collections import Counter
        print("   membership profile:", Counter(memb.values()))
        if h == 3:
            counts = exact_polynomial(H)
            ok = all(counts[k] == v for k, v in TARGET_D5.items())
            print("   d=5 polynomial matches paper:", ok)


if __name__ == "__main__":
    main()
