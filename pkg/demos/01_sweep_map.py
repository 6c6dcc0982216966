#!/usr/bin/env python3
"""A walk through the sweep map on rational Dyck paths.

We rank the steps of a path, sort them (with the tie-breaking rule that
matters once gcd(N, M) > 1), and watch the area/dinv statistics trade
places.  Two rectangles are shown: the coprime 5x3 case and the 9x6
case where ranks collide.
"""

from ratcat import (
    GridParams,
    area,
    dinv_armleg,
    dinv_sweep,
    enumerate_paths,
    parse_path,
    step_ranks,
    zeta,
)


def show(params, steps):
    path = parse_path(steps, params)
    ranks = step_ranks(params, path)
    image = zeta(params, path)
    print(f"rectangle {params.N} x {params.M}   path {steps}")
    print("  steps", "  ".join(path.steps))
    print("  ranks", " ".join(f"{r:3d}" for r in ranks))
    print(f"  zeta  {image.steps}")
    print(f"  area {area(params, path)}   dinv {dinv_sweep(params, path)}"
          f"   dinv' {dinv_armleg(params, path)}")
    print()


def main():
    show(GridParams(5, 3, 1), "hhvhvvvv")
    show(GridParams(3, 2, 3), "hvhvvhhhvhvvvvv")

    # the sweep map permutes the whole set of paths
    params = GridParams(3, 2, 2)
    paths = enumerate_paths(params)
    image = sorted(zeta(params, D).steps for D in paths)
    assert image == sorted(D.steps for D in paths)
    print(f"zeta permutes all {len(paths)} paths of the "
          f"{params.N} x {params.M} rectangle:")
    for D in paths:
        print(f"  {D.steps} -> {zeta(params, D).steps}")


if __name__ == "__main__":
    main()
