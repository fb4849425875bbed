"""h=4: 8-connected F6 shapes prioritized by fewest edge-adjacencies."""
import itertools
import json

from h4_frames import run_frame


def connected8(F):
    fs = set(F)
    seen = {F[0]}
    stack = [F[0]]
    while stack:
        x, y = stack.pop()
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                nb = (x + dx, y + dy)
                if nb in fs and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
    return len(seen) == len(F)


def edge_adjacencies(F):
    fs = set(F)
    return sum(1 for (x, y) in F for nb in ((x + 1, y), (x, y + 1)) if nb in fs)


def main():
    cells5 = [(i, j) for i in range(5) for j in range(5)]
    shapes = []
    for F in itertools.combinations(cells5, 6):
        if not connected8(F):
            continue
        xs = [c[0] for c in F]
        ys = [c[1] for c in F]
        if min(xs) != 0 or min(ys) != 0:
            continue
        shapes.append(F)
    shapes.sort(key=lambda F: (edge_adjacencies(F),
                               max(c[0] for c in F) + max(c[1] for c in F),
                               sum(i + j for i, j in F)))
    print(len(shapes), "shapes; first:", shapes[:3], flush=True)

    found = []
    for k, F in enumerate(shapes):
        g = run_frame(list(F), f"{k}/{len(shapes)} adj={edge_adjacencies(F)} F={F}",
                      max_out=2000000)
        if g:
            found.append((list(F), g))
            with open("h4_solutions.json", "w") as fh:
                json.dump([[F, [[list(t[:2]) + [t[2]] for t in ex] for ex in gg]]
                           for F, gg in found], fh, default=list)
            print("WROTE SOLUTION FILE", flush=True)
            if len(found) >= 2:
                break
    print("done", len(found), flush=True)


if __name__ == "__main__":
    main()
