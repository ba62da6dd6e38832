"""Compare the compiled kernels with the pure-Python fallback.

    python3 bench/bench_kernels.py [--repeat 3]

Each row times one workload on both backends (best of ``--repeat`` runs) and
checks that the two produce identical results.
"""
import argparse
import random
import time

from pomkit import _purekernels as pure

try:
    from pomkit import _ckernels as compiled
except ImportError:
    compiled = None


def best_of(repeat, fn):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads(rng):
    n = 48
    rows = [0] * n
    for _ in range(2 * n):
        a, b = rng.randrange(n), rng.randrange(n)
        rows[a] |= 1 << b
    # max-semilattice on a chain is associative, so the scan runs to the end
    chain = [max(a, b) for a in range(40) for b in range(40)]
    chain_le = pure.closure([1 << (a + 1) if a + 1 < 40 else 0 for a in range(40)], 40)
    half = sum(1 << a for a in range(0, 40, 2)) | 1
    return [
        ("closure n=48", lambda k: k.closure(rows, n)),
        ("assoc scan n=40", lambda k: k.assoc_violation(chain, 40)),
        ("compat scan n=40", lambda k: k.compat_violation(chain, chain_le, 40)),
        ("coset masks n=40", lambda k: (k.coset_masks(chain, 40, half, 0),
                                        k.coset_masks(chain, 40, half, 1))),
        ("enumerate monoids n=4", lambda k: sum(1 for _ in k.enum_monoid_tables(4))),
        ("enumerate preorders n=5", lambda k: sum(1 for _ in k.enum_preorders(5))),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if compiled is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    print(f"{'workload':26} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in workloads(random.Random(args.seed)):
        tp, rp = best_of(args.repeat, lambda: fn(pure))
        tc, rc = best_of(args.repeat, lambda: fn(compiled))
        assert _norm(rp) == _norm(rc), f"{name}: backends disagree"
        print(f"{name:26} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")


def _norm(x):
    if isinstance(x, (list, tuple)):
        return [_norm(v) for v in x]
    return x


if __name__ == "__main__":
    main()
