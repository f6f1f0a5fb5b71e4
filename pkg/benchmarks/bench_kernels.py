"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Both backends are imported directly, so the comparison does not depend on
DRINFELD_PURE_PYTHON.  Results are checked for equality before timing.
"""

import argparse
import random
import timeit

from drinfeld._kernels import _pykernels as py

try:
    from drinfeld._kernels import _ckernels as cy
except ImportError:
    cy = None


def _poly(rng, n, p):
    c = [rng.randrange(p) for _ in range(n)]
    c[-1] = rng.randrange(1, p)
    return tuple(c)


def cases(seed=1):
    rng = random.Random(seed)
    p = 3
    small = [(_poly(rng, 8, p), _poly(rng, 6, p)) for _ in range(200)]
    big = [(_poly(rng, 300, p), _poly(rng, 120, p)) for _ in range(10)]

    from drinfeld.algebra import parse_poly
    from drinfeld.orbits import LayerGroup
    from drinfeld.projline import ProjectiveLine

    line = ProjectiveLine(parse_poly("(T^2+1)^3*T*(T+1)", 3))
    perms = [line.permutation(g.entries) for g in LayerGroup(3, "B").generators()]
    return p, small, big, (perms, line.size)


def workloads(mod, p, small, big, orbit):
    return {
        "mul small": lambda: [mod.mul(a, b, p) for a, b in small],
        "mul 300x120": lambda: [mod.mul(a, b, p) for a, b in big],
        "divmod 300/120": lambda: [mod.divmod_(a, b, p) for a, b in big],
        "gcd small": lambda: [mod.gcd(a, b, p) for a, b in small],
        f"orbit_labels |P1|={orbit[1]}": lambda: mod.orbit_labels(*orbit),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    p, small, big, orbit = cases()
    wp = workloads(py, p, small, big, orbit)
    wc = workloads(cy, p, small, big, orbit) if cy else {}
    print(f"{'kernel':<28}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, fn in wp.items():
        tp = min(timeit.repeat(fn, number=1, repeat=args.repeat)) * 1e3
        if cy:
            assert wc[name]() == fn(), name
            tc = min(timeit.repeat(wc[name], number=1, repeat=args.repeat)) * 1e3
            print(f"{name:<28}{tp:>12.2f}{tc:>12.2f}{tp / tc:>9.1f}x")
        else:
            print(f"{name:<28}{tp:>12.2f}{'n/a':>12}")
    if not cy:
        print("compiled kernels not built; run pip install -e . --no-build-isolation")


if __name__ == "__main__":
    main()
