"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each row checks that both backends return identical arrays before timing them.
"""

import argparse
import sys
import timeit

import numpy as np

from youngpowers import kernels
from youngpowers.oracle import _pair_generators
from youngpowers.tabloids import TabloidSpace

# (shape, whether to include the pair kernel); pair work grows as dim^2
CASES = [((3, 2, 1), True), ((3, 3, 2), True), ((4, 3, 2), False), ((2, 2, 2, 2), False)]


def _workload(shape):
    space = TabloidSpace(shape)
    n = space.degree
    moved = np.empty_like(space.words)
    moved[:, list(_pair_generators(n)[1])] = space.words
    actions = space.actions(_pair_generators(n))
    return space, moved, actions


def _time(call, repeat):
    return min(timeit.repeat(call, number=1, repeat=repeat))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    try:
        compiled = kernels.load("compiled")
    except ImportError:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    python = kernels.load("python")

    print(f"{'kernel':<18}{'shape':<12}{'dim':>7}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for shape, with_pairs in CASES:
        space, moved, actions = _workload(shape)
        counts = np.array(shape, dtype=np.int64)
        jobs = [
            ("rank_words", lambda k: k.rank_words(moved, counts)),
            ("orbit_labels", lambda k: k.orbit_labels(actions)),
        ]
        if with_pairs:
            jobs.append(("pair_orbit_labels", lambda k: k.pair_orbit_labels(actions, False)))
        for name, job in jobs:
            if not np.array_equal(job(python), job(compiled)):
                print(f"{name} disagrees on {shape}", file=sys.stderr)
                return 1
            slow = _time(lambda: job(python), args.repeat)
            fast = _time(lambda: job(compiled), args.repeat)
            label = ",".join(map(str, shape))
            print(f"{name:<18}{label:<12}{space.dim:>7}{slow:>12.4f}{fast:>12.4f}{slow / fast:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
