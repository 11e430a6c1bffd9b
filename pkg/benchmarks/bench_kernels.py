"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--n-b 8] [--repeat 5]

Inputs come from the real desk fixture (mesh n_omega=5, n_b given), so the
sizes match what the optimizer feeds the kernels.  Each row reports the
best-of-N wall time per backend and the max abs difference of the outputs.
"""

import argparse
import time

import numpy as np

from htsopt import _accel, kernels, levelset
from htsopt.hcurl import EdgeSpace
from htsopt.mesh import build_box_mesh, quadrature_rule


def best_time(fn, repeat):
    out = fn()  # warm-up, also triggers JIT compilation
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(n_b):
    rng = np.random.default_rng(0)
    mesh = build_box_mesh(5, n_b)
    space = EdgeSpace(mesh)
    quad = quadrature_rule(2)
    phi = np.ascontiguousarray(space.basis(quad))
    nc, nq = phi.shape[:2]
    K = np.ascontiguousarray(np.broadcast_to(np.eye(3), (nc, nq, 3, 3)))
    w = np.ascontiguousarray(space.weights(quad))
    e = rng.normal(size=(nc * nq, 3)) * 2e-3

    bg = mesh.bgrid
    ball = levelset.init_shape("ball", bg, radius=0.3)
    tris = np.ascontiguousarray(levelset.interface_triangles(ball, mesh))
    pts = bg.coordinates()
    u = levelset.grid(ball, bg)
    frozen = np.abs(u) < bg.h
    dist = np.where(frozen, np.abs(u), np.inf)

    yield (f"lambda_psi ({len(e)} points)",
           lambda: kernels.lambda_psi_numba(e, 7e2, 1.0), lambda: kernels.lambda_psi_numpy(e, 7e2, 1.0))
    yield (f"element matrices ({nc} cells)",
           lambda: kernels.weighted_element_matrices_numba(phi, K, w),
           lambda: kernels.weighted_element_matrices_numpy(phi, K, w))
    yield (f"triangle distance ({len(pts)} pts x {len(tris)} tris)",
           lambda: kernels.triangle_distance_numba(pts, tris), lambda: kernels.triangle_distance_numpy(pts, tris))
    yield (f"eikonal ({u.size} nodes)",
           lambda: kernels.eikonal_numba(dist, frozen, bg.h), lambda: kernels.eikonal_numpy(dist, frozen, bg.h))


def max_diff(a, b):
    if isinstance(a, tuple):
        return max(max_diff(x, y) for x, y in zip(a, b))
    return float(np.abs(np.asarray(a) - np.asarray(b)).max())


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--n-b", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if not _accel.HAS_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"active backend: {_accel.backend()}")
    print(f"{'kernel':48s} {'numba [ms]':>11s} {'numpy [ms]':>11s} {'speedup':>8s} {'max diff':>10s}")
    for name, fast, slow in cases(args.n_b):
        t_fast, a = best_time(fast, args.repeat)
        t_slow, b = best_time(slow, args.repeat)
        print(f"{name:48s} {1e3 * t_fast:11.2f} {1e3 * t_slow:11.2f} {t_slow / t_fast:8.1f} {max_diff(a, b):10.2e}")


if __name__ == "__main__":
    main()
