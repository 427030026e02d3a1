"""Compare the compiled and pure-Python support-counting backends.

    python benchmarks/bench_kernels.py [--rows 20000] [--items 60] [--repeat 5]

Prints per-backend timings for a batch candidate count and for a full
Apriori run (the latter in subprocesses, toggling RULEHIDE_PURE_PYTHON).
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from rulehide import _pykernels

try:
    from rulehide import _ckernels
except ImportError:
    _ckernels = None


def make_rows(n, m, seed=42):
    rng = random.Random(seed)
    # skewed item popularity so deeper levels exist
    weights = [1.0 / (i + 1) ** 0.7 for i in range(m)]
    rows = []
    for _ in range(n):
        size = rng.randint(2, 12)
        rows.append(sorted(set(rng.choices(range(m), weights, k=size))))
    return rows


def bench_count(rows, m, repeat):
    rng = random.Random(1)
    cands = [tuple(sorted(rng.sample(range(m), 3))) for _ in range(2000)]
    results = {}
    for name, mod in (("python", _pykernels), ("cython", _ckernels)):
        if mod is None:
            continue
        index = mod.BitIndex(rows, m)
        results[name] = min(timeit.repeat(lambda: index.count(cands), number=1, repeat=repeat))
        build = min(timeit.repeat(lambda: mod.BitIndex(rows, m), number=1, repeat=repeat))
        print(f"{name:>7}: count 2000 3-itemsets {results[name] * 1e3:9.2f} ms   "
              f"build index {build * 1e3:9.2f} ms")
    if len(results) == 2:
        print(f"speedup (count): {results['python'] / results['cython']:.1f}x")


APRIORI_SNIPPET = """
import sys, time
from rulehide import MiningParams, TransactionDB, apriori, BACKEND
rows = [line.split() for line in open(sys.argv[1])]
db = TransactionDB.from_names(rows)
t = time.perf_counter()
freq = apriori(db, MiningParams(min_support=float(sys.argv[2])))
print(BACKEND, len(freq), freq.scan_count, time.perf_counter() - t)
"""


def bench_apriori(rows, support, path):
    with open(path, "w") as fh:
        for r in rows:
            fh.write(" ".join(f"i{x}" for x in r) + "\n")
    for pure in (True, False):
        env = dict(os.environ)
        env.pop("RULEHIDE_PURE_PYTHON", None)
        if pure:
            env["RULEHIDE_PURE_PYTHON"] = "1"
        out = subprocess.run([sys.executable, "-c", APRIORI_SNIPPET, path, str(support)],
                             env=env, capture_output=True, text=True, check=True).stdout
        backend, count, scans, secs = out.split()
        print(f"{backend:>7}: apriori at support {support}: {count} itemsets, "
              f"{scans} scans, {float(secs):.3f} s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rows", type=int, default=20000)
    parser.add_argument("--items", type=int, default=60)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--support", type=float, default=0.01)
    parser.add_argument("--basket", default="/tmp/rulehide_bench.basket")
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; timing the fallback only")
    rows = make_rows(args.rows, args.items)
    bench_count(rows, args.items, args.repeat)
    bench_apriori(rows, args.support, args.basket)


if __name__ == "__main__":
    main()
