"""Compare the pure-Python and compiled multiplication kernels.

Times the raw packed-term kernels on operands captured from real series
work, checks both produce identical term dicts, then times two end-to-end
workloads in-process by forcing each backend.

Run:  python3 benchmarks/bench_kernels.py
"""

import time

from boxcount import _kernels

try:
    from boxcount import _speedups
except ImportError:
    _speedups = None


def operands():
    from boxcount import formulas

    return formulas.closed_klein(16), formulas.closed_pyramid(16)


def time_kernel(fn, a, b, rounds):
    cap, shift = 2 * a.trunc, 8 * len(a.vars)
    best = float("inf")
    result = None
    for _ in range(rounds):
        t0 = time.perf_counter()
        result = fn(a._terms, b._terms, cap, shift)
        best = min(best, time.perf_counter() - t0)
    return best, result


def time_pipeline(rounds):
    from boxcount import formulas

    best = float("inf")
    for _ in range(rounds):
        t0 = time.perf_counter()
        formulas.closed_klein(18)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    a, b = operands()
    print(f"operands: {len(a)} x {len(b)} terms, 4 variables, degree {a.trunc}")

    t_py, r_py = time_kernel(_kernels.mul_terms_py, a, b, rounds=3)
    print(f"mul_terms pure python : {t_py * 1000:8.1f} ms")
    if _speedups is None:
        print("compiled kernel not built; set up with the extension to compare")
        return
    t_c, r_c = time_kernel(_speedups.mul_terms_c, a, b, rounds=3)
    assert r_c == r_py, "kernels disagree"
    print(f"mul_terms compiled    : {t_c * 1000:8.1f} ms   ({t_py / t_c:.1f}x)")

    # whole-pipeline comparison: swap the bound kernels in place
    saved = _kernels.mul_terms, _kernels.scale_accumulate
    try:
        _kernels.mul_terms, _kernels.scale_accumulate = (
            _kernels.mul_terms_py,
            _kernels.scale_accumulate_py,
        )
        t_pipe_py = time_pipeline(rounds=3)
        print(f"closed_klein(18) pure : {t_pipe_py * 1000:8.1f} ms")
        _kernels.mul_terms, _kernels.scale_accumulate = (
            _speedups.mul_terms_c,
            _speedups.scale_accumulate_c,
        )
        t_pipe_c = time_pipeline(rounds=3)
        print(f"closed_klein(18) fast : {t_pipe_c * 1000:8.1f} ms   ({t_pipe_py / t_pipe_c:.1f}x)")
    finally:
        _kernels.mul_terms, _kernels.scale_accumulate = saved


if __name__ == "__main__":
    main()
