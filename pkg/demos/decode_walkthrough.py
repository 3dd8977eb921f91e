"""Decode a received word of a [9,3,7] code over GF(17) step by step.

Run with ``python3 demos/decode_walkthrough.py``.
"""

from ehzcodes import FieldSpec, EvalConfig, build_ecp, decode, ehz, syndrome, verify_ecp
from ehzcodes.codes import classify_ehz

F = FieldSpec(17)
code = ehz(EvalConfig.create(F, [1, 3, 5, 7, 10, 12, 14, 16]), 3)
print(f"code: [{code.N},{code.K}] over GF({F.q}), classified {classify_ehz(code)[0]}")

pair = build_ecp(code)
report = verify_ecp(pair, code)
print(f"pair: case {pair.case_tag}, corrects up to {pair.ell} errors")
print(f"  gamma = {pair.transform.gamma}, transformed points {list(pair.transform.S_prime)}")
print(f"  conditions: {report.as_dict()}")

y = [4, 6, 1, 14, 5, 7, 12, 15, 2]
print(f"received: {y}")
print(f"syndrome: {syndrome(code, y).tolist()}")

out = decode(code, y, pair)
print(f"locator kernel vector: {out.trace['s0'].tolist()}")
print(f"locator evaluations:   {out.trace['a'].tolist()}")
print(f"candidate positions:   {[i + 1 for i in out.trace['Z']]}")
print(f"outcome: {out.variant}")
print(f"error:    {out.error.tolist()}")
print(f"codeword: {out.codeword.tolist()}")
