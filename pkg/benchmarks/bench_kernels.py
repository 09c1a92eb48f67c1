"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from scatter2d.kernels import available_backends


def cases():
    z_small = np.linspace(0.0, 8.0, 20_000)
    z_mid = np.linspace(8.0, 25.0, 20_000)
    z_big = np.linspace(25.0, 1e4, 20_000)
    return [
        ("j1 scalar x1000", lambda k: [k.j1(float(z)) for z in z_mid[:1000]]),
        ("j1 array, series branch", lambda k: k.j1(z_small)),
        ("j1 array, Miller branch", lambda k: k.j1(z_mid)),
        ("j1 array, Hankel branch", lambda k: k.j1(z_big)),
        ("pw_sums x=2 L=4096", lambda k: k.pw_sums(2.0, 1.0, 4096)),
        ("pw_sums x=80 L=51200", lambda k: k.pw_sums(80.0, 1.0, 51200)),
        ("sin2_sum x=5 L=200", lambda k: k.sin2_sum(5.0, 200)),
    ]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = available_backends()
    names = list(backends)
    print(f"{'kernel':28s}" + "".join(f"{n:>14s}" for n in names) + "   speedup")
    for label, fn in cases():
        times = []
        for name in names:
            mod = backends[name]
            t = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
            times.append(t)
        line = f"{label:28s}" + "".join(f"{t * 1e3:12.3f}ms" for t in times)
        if len(times) == 2:
            line += f"   {times[0] / times[1]:7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
