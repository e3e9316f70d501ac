"""
From a narrow Resolution proof to a short tree-like DNF proof
=============================================================

The expansion walks a width-w refutation backwards and produces a tree-like
Res(w) refutation whose size is linear in the number of lines.
"""

from narrowres import (
    check_tree_dnf, expand, gen_chain, gen_php, parse_dimacs, parse_res_proof,
    prove_bounded, serialize_dnf_proof,
)

f = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")
p = parse_res_proof("1 i 1 0\n2 i -1 0\n3 r 1 2 1 0\n")
t = expand(f, p)
print(serialize_dnf_proof(t), end="")
print(check_tree_dnf(f, t).render())

# node count against 4S + 2m + 1 on a few real refutations
print()
print(f"{'formula':12} {'S':>4} {'w':>2} {'nodes':>6} {'4S+2m+1':>8} {'terms':>6} {'S(S+2w+2)':>10}")
for name, g in [("chain(6)", gen_chain(6)), ("php(3,2)", gen_php(3, 2)), ("php(4,3)", gen_php(4, 3))]:
    q = prove_bounded(g, g.num_vars)
    tree = expand(g, q)
    r = check_tree_dnf(g, tree)
    S, w = len(q), q.width
    print(f"{name:12} {S:4} {w:2} {len(tree):6} {4 * S + 2 * len(g) + 1:8} "
          f"{r.stats.term_occurrences:6} {S * (S + 2 * w + 2):10}")
