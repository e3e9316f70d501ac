"""
Formula families and the width-bounded prover
=============================================
"""

from narrowres import NoRefutationWithinWidth, gen_php, prove_bounded, serialize_dimacs
from narrowres.gen import acceptance_corpus

print(serialize_dimacs(gen_php(3, 2)), end="")

# the smallest budget at which saturation finds a refutation
print()
for p, h in [(2, 1), (3, 2), (4, 3)]:
    f = gen_php(p, h)
    for w in range(f.num_vars + 1):
        try:
            proof = prove_bounded(f, w)
        except NoRefutationWithinWidth:
            continue
        print(f"php({p},{h}): refuted at derived width {w}, {len(proof)} lines")
        break

print()
print("acceptance corpus:", ", ".join(name for name, _ in acceptance_corpus()))
