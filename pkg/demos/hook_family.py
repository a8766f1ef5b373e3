"""Hook-family predictions for (3,3,3) (1)^7 in Gr(4,8) and a check against direct solves.

Run: python demos/hook_family.py
"""

from oscschubert.combinat import nu, predicted_real_counts
from oscschubert.hookfam import HookInstance, mod4_factorization_census, solve_direct, verify_det_identity

k, n = 4, 8
print("possible real-solution counts by the number of real points carrying (1):")
for r_box in (7, 5, 3, 1):
    print(f"  r = {r_box}: {predicted_real_counts(k, n, r_box)}")

# f has three real roots and two conjugate pairs
inst = HookInstance(k, n, ["-3", "0", "4", "1+i", "1-i", "-2+3*i", "-2-3*i"])
r = inst.derivative_real_roots()
rep = solve_direct(inst)
print(f"\nf' has {r} real roots: nu = {nu(k, n, r)}, direct solve finds {rep.num_real} of {rep.num_complex} real")

print(f"determinant identity for (3,6): {verify_det_identity(3, 6)}")
f = inst.fprime.monic()
print(f"census of f' factorizations into cubics (nonreal, self-conjugate): {mod4_factorization_census(f, 3)}")
