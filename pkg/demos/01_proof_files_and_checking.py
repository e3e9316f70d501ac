"""
Proof files and the checker
===========================

Read a CNF and a Resolution proof, check it, then break it on purpose.
"""

from narrowres import check_res, parse_dimacs, parse_res_proof, serialize_res_proof

# (x) and (not x), refuted in three lines
f = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")
p = parse_res_proof("1 i 1 0\n2 i -1 0\n3 r 1 2 1 0\n")
print(check_res(f, p).render())

# serialization is canonical, so parse/serialize is a fixed point
assert serialize_res_proof(p) == "1 i 1 0\n2 i -1 0\n3 r 1 2 1 0\n"

# a wrong resolvent on line 3
bad = parse_res_proof("1 i 1 0\n2 i -1 0\n3 r 1 2 1 2 0\n")
print()
print(check_res(f, bad).render())

# width limits apply to every line unless derived_only is set
print()
print(check_res(f, p, max_width=0).render())
