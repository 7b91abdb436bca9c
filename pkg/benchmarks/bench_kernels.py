"""Compare the compiled mode-sum kernel with the numpy fallback.

    python benchmarks/bench_kernels.py

Times raw block sums of several lengths, then a full 250-point frequency
sweep (air / 100 nm sodium / glass) in a fresh interpreter per backend.
"""
import os
import subprocess
import sys
import timeit

from swavefilm import _fallback

try:
    from swavefilm import _kernel
except ImportError:
    _kernel = None

ARGS = dict(omega=1.3, eps=0.001, W=2.1682, vr=2.842e-3, qz_sq=0.0)

SWEEP = """
import time
from swavefilm import _backend
from swavefilm.sweep import SweepSpec, run_sweep
from swavefilm.units import SODIUM, IncidentWave, StackConfiguration
spec = SweepSpec("omega_ratio", 0.01, 2.5, 250, SODIUM, StackConfiguration(1, 4, 100), IncidentWave(1.0))
t = time.perf_counter()
run_sweep(spec)
print(_backend.BACKEND, time.perf_counter() - t)
"""


def block(fn, count):
    a = ARGS
    return fn(1, count, a["omega"], a["eps"], a["W"], a["vr"], a["qz_sq"])


def main():
    print(f"{'modes':>8} {'numpy [ms]':>12} {'cython [ms]':>12} {'speedup':>8}")
    for count in (16, 128, 1024, 16384, 200000):
        number = max(1, 20000 // count)
        t_np = min(timeit.repeat(lambda: block(_fallback.mode_block_sum, count), number=number, repeat=5)) / number
        if _kernel is None:
            print(f"{count:>8} {t_np * 1e3:12.4f} {'n/a':>12}")
            continue
        t_cy = min(timeit.repeat(lambda: block(_kernel.mode_block_sum, count), number=number, repeat=5)) / number
        print(f"{count:>8} {t_np * 1e3:12.4f} {t_cy * 1e3:12.4f} {t_np / t_cy:8.1f}")

    print("\n250-point frequency sweep")
    for pure in ("0", "1"):
        env = dict(os.environ, SWAVEFILM_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True, text=True, check=True)
        backend, seconds = out.stdout.split()
        print(f"  {backend:>7}: {float(seconds):.3f} s")


if __name__ == "__main__":
    main()
