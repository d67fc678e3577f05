"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 20] [--batch 32]

Shapes follow the desk-scale network: 64x64 inputs, 3x3 convolutions.
The numba column excludes JIT compilation (one warm-up call first).
"""

import argparse
import timeit

import numpy as np

from deepcc.kernels import _numpy

try:
    from deepcc.kernels import _numba
except ImportError:
    _numba = None


def cases(batch, rng):
    x = rng.normal(size=(batch, 66, 66, 16)).astype(np.float32)
    cols = rng.normal(size=(batch * 64 * 64, 9 * 16)).astype(np.float32)
    act = rng.normal(size=(batch, 64, 64, 32)).astype(np.float32)
    _, idx = _numpy.maxpool2_forward(act)
    dout = rng.normal(size=(batch, 32, 32, 32)).astype(np.float32)
    t = np.linspace(0, 2 * np.pi, 9)[:-1]
    poly = np.stack([32 + 20 * np.cos(t), 32 + 14 * np.sin(t)], axis=1)
    return {
        "im2col": lambda k: k.im2col(x, 3, 3),
        "col2im": lambda k: k.col2im(cols, x.shape, 3, 3),
        "maxpool2_forward": lambda k: k.maxpool2_forward(act),
        "maxpool2_backward": lambda k: k.maxpool2_backward(dout, idx, act.shape),
        "fill_polygon": lambda k: k.fill_polygon(poly, 64, 64),
    }


def best_ms(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat)) * 1000


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--batch", type=int, default=32)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    print(f"{'kernel':<20}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for name, call in cases(args.batch, rng).items():
        t_np = best_ms(lambda: call(_numpy), args.repeat)
        if _numba is None:
            print(f"{name:<20}{t_np:>12.3f}{'n/a':>12}{'':>10}")
            continue
        call(_numba)  # compile
        t_nb = best_ms(lambda: call(_numba), args.repeat)
        print(f"{name:<20}{t_np:>12.3f}{t_nb:>12.3f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
