"""
Restricting tree-like proofs
============================

Fixing a variable turns a refutation of F into a refutation of F restricted
by that assignment, with no more leaves than before.  This is the tool the
narrowing step uses on both sides of a cut.
"""

from narrowres import (
    check_tree_dnf, expand, gen_php, prove_bounded, restrict_cnf, restrict_tree_proof,
    serialize_dnf_proof,
)
from narrowres.formats import parse_dnf_proof
from narrowres.core import Cnf

# the 5-node proof of (x) and (not x), with x set to true
f = Cnf.from_lists([[1], [-1]])
t = parse_dnf_proof("p dnft 1\n1 A 1 0\n2 L 2\n3 C 1 2 1 0\n4 L 1\n5 C 3 4 -1 0\n")
g = restrict_cnf(f, {1: True})
print("restricted CNF:", [list(c.literals) for c in g.clauses])
print(serialize_dnf_proof(restrict_tree_proof(f, t, {1: True})), end="")

# every single-variable restriction of the php(3,2) expansion
print()
f = gen_php(3, 2)
t = expand(f, prove_bounded(f, 6))
print(f"php(3,2) expansion: {t.leaves} leaves")
for v in range(1, f.num_vars + 1):
    for val in (False, True):
        rho = {v: val}
        q = restrict_tree_proof(f, t, rho)
        ok = check_tree_dnf(restrict_cnf(f, rho), q).valid
        print(f"  x{v}={int(val)}: {q.leaves:3} leaves, valid={ok}")
