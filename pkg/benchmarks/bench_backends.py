"""Compare the compiled and pure-Python d_N kernels on growing inputs.

    python3 benchmarks/bench_backends.py [--max-exp 6] [--repeats 3]
"""
import argparse

from timedalign import BACKENDS
from timedalign.bench import run_bench


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-exp", type=int, default=6)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    lengths = [10**k for k in range(1, args.max_exp + 1)]
    rows = run_bench(lengths, args.seed, args.repeats, BACKENDS)
    by = {(r["backend"], r["length"]): r for r in rows}

    print(f"{'length':>9} " + " ".join(f"{b + ' s':>12}" for b in BACKENDS) + ("   speedup" if len(BACKENDS) > 1 else ""))
    for n in lengths:
        cells = [by[(b, n)]["seconds"] for b in BACKENDS]
        line = f"{n:>9} " + " ".join(f"{c:>12.6f}" for c in cells)
        if len(BACKENDS) > 1:
            line += f"   {cells[1] / cells[0]:>7.2f}x"
        print(line)
    distances = {by[(b, lengths[-1])]["distance"] for b in BACKENDS}
    assert len(distances) == 1, "backends disagree"
    if "compiled" not in BACKENDS:
        print("compiled extension not built; only the pure-Python kernel was timed")


if __name__ == "__main__":
    main()
