"""Compare the compiled and pure-Python kernels.

Times the three kernels directly and two end-to-end workloads (census
growth and the antipodal decision on a family sweep).  Each backend runs
in its own interpreter so that module-level caches do not leak across.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, timeit
from sdmaps import kernels, pancake, wheel, ear, is_antipodally_self_dual
from sdmaps.census import _level
m = pancake(5, 3)
alpha, sigma = list(m.alpha), list(m.sigma)
repeat = int(sys.argv[1])

def best(fn, number):
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number

def census():
    _level.cache_clear()
    _level(6, False)

def sweep():
    for n in range(3, 9):
        is_antipodally_self_dual(wheel(n), with_labeling=False)
    for n in range(3, 7):
        is_antipodally_self_dual(ear(n), with_labeling=False)

out = {
    "backend": kernels.BACKEND,
    "orbit_labels": best(lambda: kernels.orbit_labels(sigma), 2000),
    "traversal_code": best(lambda: kernels.traversal_code(alpha, sigma, 0), 2000),
    "canonical_code (all roots)": best(lambda: [kernels.traversal_code(alpha, sigma, r) for r in range(len(alpha))], 20),
    "extend_morphism": best(lambda: kernels.extend_morphism(alpha, sigma, alpha, sigma, 0, 0), 2000),
    "census E=6": best(census, 1),
    "antipodal sweep": best(sweep, 1),
}
print(json.dumps(out))
"""


def run(pure, repeat):
    env = dict(os.environ)
    env["SDMAPS_PURE_PYTHON"] = "1" if pure else "0"
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ns = ap.parse_args()
    fast = run(False, ns.repeat)
    slow = run(True, ns.repeat)
    if fast["backend"] != "cython":
        print("compiled kernels not built; both columns use pure Python")
    print(f"{'workload':<28}{'cython':>12}{'python':>12}{'speedup':>9}")
    for key in fast:
        if key == "backend":
            continue
        a, b = fast[key], slow[key]
        print(f"{key:<28}{a * 1e3:>10.3f}ms{b * 1e3:>10.3f}ms{b / a:>8.1f}x")


if __name__ == "__main__":
    main()
