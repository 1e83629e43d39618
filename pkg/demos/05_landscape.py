"""
A coarse (beta1, gamma_p) landscape
===================================

A 15x15 scan of the shear building with the XY mixer at p = 7. The full
50x50 scans are run through the CLI: ``qaoa-osp landscape ...``.
"""
import numpy as np

from qaoa_osp import OspProblem
from qaoa_osp.experiments import run_landscape_scan
from qaoa_osp.io import write_pgm

problem = OspProblem.from_case("shear16")
n = 15
cells = run_landscape_scan(problem, "xy", 7, grid_n=n, shots=1000, seed=0)

avg = np.array([c.avg_ratio for c in cells]).reshape(n, n)
i, j = np.unravel_index(np.argmax(avg), avg.shape)
best = cells[i * n + j]
print(f"best cell: beta1={best.beta1:.3f}, gamma_p={best.gamma_p:.3f}, avg ratio {best.avg_ratio:.3f}")
print(f"grid mean {avg.mean():.3f}, max best_ratio {max(c.best_ratio for c in cells):.4f}")

# rows follow beta1, columns gamma_p; brighter = higher average ratio
write_pgm(cells, n, "landscape_xy_p7.pgm")
print("wrote landscape_xy_p7.pgm")
