"""Restricting L(Lambda_0) of A_1^(1) to the winding subalgebra g[2].

The four methods are run side by side.  For u = 2 the count of dominant
LS paths comes up short at Lambda_0 - 2 delta, while the Steinberg sum, the
peeling oracle and the certified signed sum all agree on 1.  The second
half of the script shows why: both paths ending there leave the dotted
chamber.

Run: python3 demos/02_winding_branching.py
"""
from kmbranch import (METHODS, branch, dotted_basis, enumerate_ls_paths, preset,
                      winding_construct)
from kmbranch.paths import h_values
from kmbranch.serialize import emit_table, format_rational, format_rational_vec

A = preset("A1_1")
lam = A.fundamental(0)

for u in (2, 3):
    w = winding_construct(A, u)
    print(f"\n=== u = {u}:  dotted alpha_0 = {format_rational_vec(w.roots[0].labels)}"
          f"d{format_rational(w.roots[0].d)},  dotted rho labels {format_rational_vec(w.labels(w.rho))}")
    table = branch(A, lam, w, 4, methods=METHODS, margin=0)
    print(emit_table(table, "pretty").decode(), end="")

# %% look at the paths that end at Lambda_0 - 2 delta
w = winding_construct(A, 2)
b = dotted_basis(w)
target = lam - 2 * A.delta
print("\npaths ending at Lambda_0 - 2 delta and their dotted h-profiles:")
for p in enumerate_ls_paths(A, lam, 2):
    if p.endpoint != target:
        continue
    print("  segments:", ", ".join(f"{format_rational_vec(s.labels)}d{format_rational(s.d)}"
                                    for s in p.segments))
    for i in range(A.n):
        vals = [format_rational(x) for x in h_values(b, i, p)]
        print(f"    h_{i} dotted at breakpoints: {vals}")
print("neither path stays in the chamber, yet the component is there.")
