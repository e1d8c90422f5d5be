"""The basic module L(Lambda_0) of A_1^(1), computed two ways.

Run: python3 demos/01_basic_module.py
"""
from kmbranch import (character_by_kostant, character_by_paths, enumerate_ls_paths, preset,
                      verify_kac_character)
from kmbranch.serialize import format_rational, format_rational_vec

A = preset("A1_1")
lam = A.fundamental(0)
print("algebra", A.name, " a =", A.a, " c =", A.c, " h =", A.coxeter, " h_vee =", A.dual_coxeter)

# %% LS paths: every path is a word in the f operators applied to the straight line
D = 3
paths = enumerate_ls_paths(A, lam, D)
print(f"\n{len(paths)} LS paths of shape Lambda_0 down to depth {D}")
for p in paths[:6]:
    segs = "  ".join(f"{format_rational_vec(s.labels)}d{format_rational(s.d)}" for s in p.segments)
    print("   ", segs)
print("    ...")

# %% the endpoint count is the character; the signed Weyl sum gives the same numbers
by_paths = character_by_paths(A, lam, D)
by_kostant = character_by_kostant(A, lam, D)
print("\n depth  weight           paths  kostant")
for mu in sorted(by_kostant.support, key=lambda w: (by_kostant.depth(w), w)):
    print(f"  {format_rational(by_kostant.depth(mu)):>4}  "
          f"{format_rational_vec(mu.labels) + 'd' + format_rational(mu.d):<16} "
          f"{by_paths[mu]:>5}  {by_kostant[mu]:>7}")
assert dict(by_paths.items()) == dict(by_kostant.items())

# %% string weights Lambda_0 - n delta: 1, 1, 2, 3, 5, 7, ... (partitions of n)
print("\nmultiplicities of Lambda_0 - n delta:",
      [by_kostant[lam - n * A.delta] for n in range(D + 1)])

# %% the Weyl-Kac denominator identity, truncated
print("Kac identity holds through depth", D - 1, ":", verify_kac_character(A, lam, D, margin=1))
