"""Benchmark the compiled kernel core against its pure-Python twin.

Run:  python benchmarks/bench_backends.py [repeats]

Times the hot series kernels directly (both modules are importable side
by side); the verification suites inherit whichever backend the package
selected at import.
"""

from __future__ import annotations

import sys
import time

from bsfrac import _pykernels as pure

try:
    from bsfrac import _ckernels as compiled
except ImportError:
    compiled = None

WORKLOADS = [
    ("bs_series nu=0.25 u=6 (positive)",
     lambda k: k.bs_series(0.25, 6.0, 1e-15, 10000)),
    ("bs_series nu=0.5 u=-10 (compensated)",
     lambda k: k.bs_series(0.5, -10.0, 1e-15, 10000)),
    ("bessel_series I_0.7(3.5)",
     lambda k: k.bessel_series(0.7, 3.5, 1, 1e-15, 10000)),
    ("struve_series L_0.7(3.5)",
     lambda k: k.struve_series(0.7, 3.5, 1, 1e-15, 10000)),
    ("hyp2f1_kernel z=0.4",
     lambda k: k.hyp2f1_kernel(0.4, 0.3, 0.9, 0.4, 0.6)),
    ("hyp2f1_kernel z=1-1e-8",
     lambda k: k.hyp2f1_kernel(0.4, 0.3, 0.9, 1.0 - 1e-8, 1e-8)),
    ("hyp2f1_kernel z=-1e6",
     lambda k: k.hyp2f1_kernel(0.4, 0.3, 0.9, -1e6, 0.0)),
    ("wright_series 4Psi4 z=1.3",
     lambda k: k.wright_series((0.5, 1.2, 1.9, 1.4), (0.5, 1.0, 1.0, 1.0),
                               (1.25, 1.6, 2.0, 1.7), (0.5, 1.0, 1.0, 1.0),
                               1.3, 1e-14, 10000)),
    ("f3_series x=y=0.4",
     lambda k: k.f3_series(0.3, 0.4, 0.5, 0.6, 1.2, 0.4, 0.4, 1e-13, 10000)),
]


def _time(fn, module, repeats: int) -> float:
    fn(module)  # warm up
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn(module)
    return (time.perf_counter() - t0) / repeats * 1e6  # microseconds


def _value(result):
    return result[0] if isinstance(result, tuple) else result


def main() -> int:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    if compiled is None:
        print("compiled backend not built; nothing to compare")
        return 1
    name_w = max(len(n) for n, _ in WORKLOADS)
    print(f"{'workload'.ljust(name_w)}  {'pure us':>9}  {'compiled us':>11}  "
          f"{'speedup':>7}  {'rel diff':>9}")
    for name, fn in WORKLOADS:
        t_pure = _time(fn, pure, repeats)
        t_comp = _time(fn, compiled, repeats)
        a = _value(fn(pure))
        b = _value(fn(compiled))
        scale = max(abs(a), abs(b), 1e-300)
        rel = abs(a - b) / scale
        print(f"{name.ljust(name_w)}  {t_pure:9.2f}  {t_comp:11.2f}  "
              f"{t_pure / t_comp:7.1f}  {rel:9.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
