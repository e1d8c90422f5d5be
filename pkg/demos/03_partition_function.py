"""Kostant partition function of A_1^(1): the DP table against a brute-force count.

Run: python3 demos/03_partition_function.py
"""
import sys
from itertools import product
from pathlib import Path

import numpy as np

from kmbranch import partition_function, positive_roots_up_to_depth, preset

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
from oracles import partition_count  # noqa: E402

A = preset("A1_1")

# %% the positive roots by depth: two real roots and delta (multiplicity l = 1) per level
for r in positive_roots_up_to_depth(A, 2):
    print(f"  coords {r.coords}  mult {r.mult}  {'imaginary' if r.is_imaginary else 'real'}")

# %% the table of P(k_0 alpha_0 + k_1 alpha_1)
pf = partition_function(A)
N = 5
table = np.array([[pf.count((i, j)) for j in range(N + 1)] for i in range(N + 1)], dtype=object)
print("\nP(k0, k1), rows k0 = 0..5, columns k1 = 0..5")
print(table)

# %% the diagonal P(n delta)
print("\nP(n delta):", [pf.count((n, n)) for n in range(N + 1)])

# %% brute force agrees on a smaller box
small = [(i, j) for i, j in product(range(4), repeat=2)]
assert all(pf.count(k) == partition_count(A.cartan, A.a, k) for k in small)
print("brute force agrees on", len(small), "vectors")
