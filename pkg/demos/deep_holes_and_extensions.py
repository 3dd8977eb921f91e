"""Deep holes of a [6,3,4] code over GF(11) and the MDS codes they extend to.

Run with ``python3 demos/deep_holes_and_extensions.py``.
"""

from collections import Counter

from ehzcodes import FieldSpec, EvalConfig, Polynomial, DeepHoleQuery, covering_radius, ehz
from ehzcodes import deephole as dh
from ehzcodes import mdsgen

F = FieldSpec(11)
S = [3, 4, 5, 6, 7]
code = ehz(EvalConfig.create(F, S), 3)
rho = covering_radius(code).rho
print(f"[{code.N},{code.K}] code over GF(11); covering radius {rho} by syndrome search")

f = Polynomial(F, [7, 10, 0, 4])
print("\nclass 1: g = 3x^2 + f with f = 4x^3 + 10x + 7, sweeping the last coordinate")
for p in range(F.q):
    q = DeepHoleQuery(code, 0, 3, f, p)
    rep = dh.class1_is_deep_hole(q)
    if rep.verdict:
        detail = f"delta {rep.certificate['delta']}" if "delta" in rep.certificate else "equal case"
        print(f"  last = {p:2d}: deep hole {rep.vector.tolist()} ({detail})")

print("\nextensions from this family")
for cert in mdsgen.algorithm2_enumerate(code, [0], [3], [f]):
    print(f"  {cert.branch:10s} last row {cert.child.G.data[-1].tolist()}")

print("\nfull enumeration, one representative per (f_k, product)")
counts = Counter(c.branch for c in mdsgen.algorithm2_enumerate(code))
for branch, n in sorted(counts.items()):
    print(f"  {branch:10s} {n}")
