"""Search corner-flap choices for general h given the forced patch core."""
import itertools
import sys
from search_lattice import (analyze, cell_triangles, code_matrices, gf2_rank,
                            min_logical_weight, tri_vertices)


def core_patch(h):
    block = [(i, j) for i in range(h - 1) for j in range(h - 1 - i)]
    patch = [t for c in block for t in cell_triangles(*c)]
    for i in range(1, h - 1):
        patch += [(i, h - 1 - i, "S"), (i, h - 1 - i, "W")]
    return patch, set(block)


def candidates(h, blockset):
    rim = set()
    for (i, j) in blockset:
        for di in (-1, 0, 1):
            for dj in (-1, 0, 1):
                c = (i + di, j + dj)
                if c not in blockset:
                    rim.add(c)
    return [t for c in sorted(rim) for t in cell_triangles(*c)]


def check(h, patch):
    d = 2 * h - 1
    n_t, m_t = 2 * h * h - 1, h * h - 1
    checks, _ = analyze(patch)
    if len(checks) != m_t:
        return None
    covered = set()
    for s in checks.values():
        covered |= s
    if len(covered) != n_t:
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
    H = code_matrices(patch, checks)
    if gf2_rank(H) != m_t:
        return None
    if h <= 4:
        if min_logical_weight(H) != d:
            return None
    return checks


def main(h):
    core, blockset = core_patch(h)
    cands = [t for t in candidates(h, blockset) if t not in core]
    need = 2 * h * h - 1 - len(core)
    print(f"h={h}: core={len(core)}, need {need} from {len(cands)}")
    sols = []
    for extra in itertools.combinations(cands, need):
        patch = core + list(extra)
        res = check(h, patch)
        if res is not None:
            sols.append(sorted(extra))
    print(f"{len(sols)} solutions")
    for s in sols:
        print("  ", s)


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 4)
