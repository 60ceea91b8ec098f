"""Factorizability of comodule algebras, decided by exact rank.

The space E(H,B) of intertwiners H → B is computed as a kernel; the
factorizability map sends functionals on H into it.  B is factorizable
exactly when that map has full rank, and factorizability implies the weak
form (bijectivity of the invariant-to-invariant contraction of the
copairing).
"""

from hopffact import (
    compute_end_space,
    drinfeld_map,
    is_factorizable_comodule,
    named_example,
    omega_copairing,
    theta_comodule,
    weak_factorizability,
)

# For B = H with the double braiding, the factorizability map *is* the
# Drinfeld map once E(H,H) is identified with H by evaluation at 1.
b = named_example("double:C3")
es = compute_end_space(b.comodule)
print(f"dim E(H,H) = {es.dim} (dim H = {b.hopf.dim})")
theta = theta_comodule(b.kmatrix, es)
same = (es.evaluation_at_unit() @ theta).rows == drinfeld_map(b.rmatrix).matrix.rows
print("theta equals the Drinfeld map under E(H,H) ≅ H:", same)
print("factorizable:", is_factorizable_comodule(b.kmatrix, es))

# Subgroup comodule algebras collapse: rank 1 unless everything is trivial.
for name in ("subgroup:S3:C2", "subgroup:C2:C1", "subgroup:C1:C1"):
    s = named_example(name)
    ess = compute_end_space(s.comodule)
    th = theta_comodule(s.kmatrix, ess)
    print(f"{name}: rank {th.rank()} / dim {s.hopf.dim};",
          "factorizable:", is_factorizable_comodule(s.kmatrix, ess))

# The copairing is H-invariant (verified on construction), and weak
# factorizability compares invariant functionals with invariant vectors.
r = named_example("regular:C2")
esr = compute_end_space(r.comodule)
omega_copairing(r.kmatrix, esr)
wf = weak_factorizability(r.kmatrix, esr)
print("kC2 regular:", wf)
rf = named_example("reflective-trivial:C2")
print("reflective over D(C2):", weak_factorizability(rf.kmatrix))
