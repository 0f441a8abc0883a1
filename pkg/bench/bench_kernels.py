"""Time the compiled and pure-Python pattern kernels on the same inputs.

    python bench/bench_kernels.py [--words 300] [--repeat 5]
"""

import argparse
import random
import timeit

from hdthompson.kernel import backends

V, H, S = 0, 1, 2


def random_codes(rng, n, length, index_bound):
    return [[(rng.choice((V, H, S)), rng.randint(0, index_bound)) for _ in range(rng.randint(1, length))]
            for _ in range(n)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--words", type=int, default=300)
    ap.add_argument("--length", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    words = random_codes(rng, args.words, args.length, 6)
    kernels = backends()
    ref = kernels["python"]
    pats = [ref.apply_letters((), 0, w) for w in words]
    prods = [ref.compose(*p, *q) for p, q in zip(pats, pats[1:])]

    jobs = {
        "apply_letters": lambda k: [k.apply_letters((), 0, w) for w in words],
        "compose": lambda k: [k.compose(*p, *q) for p, q in zip(pats, pats[1:])],
        "left_quotient": lambda k: [k.left_quotient(*p, *c) for p, c in zip(pats, prods)],
        "right_quotient": lambda k: [k.right_quotient(*c, *q) for c, q in zip(prods, pats[1:])],
    }
    names = sorted(kernels)
    print(f"{'operation':<16}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for op, job in jobs.items():
        # same answers first, then timings (best of repeat, milliseconds)
        results = {n: job(kernels[n]) for n in names}
        assert all(results[n] == results["python"] for n in names), op
        best = {n: min(timeit.repeat(lambda: job(kernels[n]), number=1, repeat=args.repeat)) * 1e3
                for n in names}
        row = f"{op:<16}" + "".join(f"{best[n]:>10.2f}ms" for n in names)
        if "cython" in best:
            row += f"{best['python'] / best['cython']:>11.1f}x"
        print(row)
    if len(names) == 1:
        print("compiled kernel not built; only the Python reference was timed")


if __name__ == "__main__":
    main()
