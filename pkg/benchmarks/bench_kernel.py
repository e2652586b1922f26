"""Compare the compiled and pure-Python lattice kernels on census workloads.

    python3 benchmarks/bench_kernel.py --max-genus 15 --row 22
"""
import argparse
import time

from kunzcount.polytope import AVAILABLE_BACKENDS, add_genus_cut, count_lattice_points, genus_system, med_system


def census(max_genus, backend, med=False):
    total = 0
    for g in range(1, max_genus + 1):
        for m in range(2, g + 2):
            sys_ = add_genus_cut(med_system(m), g) if med else genus_system(m, g)
            total += count_lattice_points(sys_, backend=backend)
    return total


def row(g, backend):
    return sum(count_lattice_points(genus_system(m, g), backend=backend) for m in range(2, g + 2))


def best_of(fn, repeat):
    times, value = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        times.append(time.perf_counter() - t0)
    return min(times), value


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-genus", type=int, default=15)
    ap.add_argument("--row", type=int, default=22, help="single genus row to time")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    workloads = [
        (f"census g<={args.max_genus}", lambda b: census(args.max_genus, b)),
        (f"MED census g<={args.max_genus}", lambda b: census(args.max_genus, b, med=True)),
        (f"row g={args.row}", lambda b: row(args.row, b)),
    ]
    print(f"{'workload':<22} {'backend':<9} {'seconds':>9} {'points':>9}")
    for name, fn in workloads:
        timings = {}
        for backend in AVAILABLE_BACKENDS:
            secs, value = best_of(lambda: fn(backend), args.repeat)
            timings[backend] = secs
            print(f"{name:<22} {backend:<9} {secs:>9.3f} {value:>9}")
        if len(timings) == 2:
            print(f"{'':<22} speedup   {timings['python'] / timings['compiled']:>8.1f}x")


if __name__ == "__main__":
    main()
