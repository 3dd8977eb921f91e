"""Compare extended codes with Roth-Lempel codes up to monomial equivalence.

Run with ``python3 demos/equivalence_scan.py``.  Takes a few seconds.
"""

import numpy as np

from ehzcodes import FieldSpec, EvalConfig, FqMatrix, Polynomial, DeepHoleQuery, ehz
from ehzcodes import codes as cl
from ehzcodes import mdsgen

F = FieldSpec(11)
S = [3, 4, 5, 6, 7]
code = ehz(EvalConfig.create(F, S), 3)

queries = {
    "class 1, equal case": DeepHoleQuery(code, 0, 3, Polynomial(F, [7, 10, 0, 4]), 4),
    "class 1, delta = 8": DeepHoleQuery(code, 0, 3, Polynomial(F, [7, 10, 0, 4]), 3),
    "class 1, delta = 10": DeepHoleQuery(code, 0, 3, Polynomial(F, [7, 10, 0, 4]), 1),
    "class 1, delta = 9": DeepHoleQuery(code, 0, 3, Polynomial(F, [7, 10, 0, 4]), 8),
    "class 2": DeepHoleQuery(code, 2, 8, Polynomial(F, [2, 5, 0, 3]), 0),
}
for name, q in queries.items():
    cert = mdsgen.extend_with_deep_hole(code, q)
    scan = mdsgen.rl_equivalence_scan(cert.child, S, 4)
    hits = sorted(d for d, v in scan.items() if v == "Equivalent")
    print(f"{name:22s} equivalent to RL_(4,delta) for delta in {hits or 'none'}")

# a [7,4] code with two tail columns, over S = {1,2,5,6,9}
S2 = [1, 2, 5, 6, 9]
a = F.vector(S2)
body = np.vstack([F.pow(a, i) for i in range(4)])
tail = np.array([[0, 0], [0, 0], [1, 1], [0, 3]])
other = cl.generic_code(FqMatrix(F, np.hstack([body, tail])))
scan = mdsgen.rl_equivalence_scan(other, S2, 4)
print(f"\ntwo-tail code over {S2}: MDS = {cl.is_mds_minors(other)}, "
      f"equivalent for delta in {sorted(d for d, v in scan.items() if v == 'Equivalent')}")
