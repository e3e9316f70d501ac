"""
From a short tree-like DNF proof back to a narrow Resolution proof
==================================================================

A tree-like Res(l) refutation with L leaves of a k-CNF becomes a Resolution
refutation of width at most l*ceil(log2 L) + max(k, l).
"""

from narrowres import check_res, expand, gen_chain, gen_php, gen_randk, narrow, narrow_bound, prove_bounded
from narrowres.semantics import is_satisfiable

cases = [("chain(8)", gen_chain(8)), ("php(3,2)", gen_php(3, 2)), ("php(4,3)", gen_php(4, 3))]
seed = 0
while len(cases) < 6:
    seed += 1
    f = gen_randk(4, 30, 3, seed)
    if not is_satisfiable(f):
        cases.append((f"randk seed {seed}", f))

print(f"{'formula':16} {'l':>2} {'L':>4} {'bound':>5} {'width':>5} {'lines':>6}")
for name, f in cases:
    t = expand(f, prove_bounded(f, f.num_vars))
    q = narrow(f, t)
    bound = narrow_bound(f, t)
    assert check_res(f, q, bound).valid
    print(f"{name:16} {t.bound:2} {t.leaves:4} {bound:5} {q.width:5} {len(q):6}")
