"""Compare the numba and numpy word-screening backends.

Usage: python benchmarks/bench_kernels.py [--n N] [--length L] [--words W]
"""

import argparse
import sys
import time


def bench_in_process(n: int, length: int, batch: int, repeats: int) -> None:
    import numpy as np

    from sympbranch import _kernels

    rng = np.random.default_rng(7)
    letters = np.array(
        [i for i in range(1, n + 1)] + [-i for i in range(1, n + 1)], dtype=np.int32)
    words = letters[rng.integers(0, len(letters), size=(batch, length))]

    # warm up (numba compilation happens here)
    _kernels.screen_words(words[:64], n)
    _kernels.screen_words_numpy(words[:64], n)

    t0 = time.perf_counter()
    for _ in range(repeats):
        cancel, dom = _kernels.screen_words(words, n)
    active = time.perf_counter() - t0

    t0 = time.perf_counter()
    for _ in range(repeats):
        cancel_np, dom_np = _kernels.screen_words_numpy(words, n)
    numpy_time = time.perf_counter() - t0

    assert np.array_equal(np.asarray(cancel), np.asarray(cancel_np))
    assert np.array_equal(np.asarray(dom), np.asarray(dom_np))

    per_word = active / repeats / batch * 1e9
    print(f"backend={_kernels.active_backend():6s} n={n} length={length} "
          f"batch={batch} repeats={repeats}")
    print(f"  active backend: {active:8.4f}s total  ({per_word:8.1f} ns/word)")
    print(f"  numpy path:     {numpy_time:8.4f}s total  "
          f"({numpy_time / repeats / batch * 1e9:8.1f} ns/word)")


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--length", type=int, default=16)
    parser.add_argument("--words", type=int, default=200_000)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    bench_in_process(args.n, args.length, args.words, args.repeats)
    return 0


if __name__ == "__main__":
    sys.exit(main())
