"""Formula families and a width-bounded saturation prover."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .core import Clause, Cnf
from .formats import INITIAL, RESOLVE, ResLine, ResProof


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    def build(self) -> Cnf:
        fn = {"php": gen_php, "chain": gen_chain, "randk": gen_randk}.get(self.family)
        if fn is None:
            raise ValueError(f"unknown family {self.family!r}")
        return fn(*self.params)

    @property
    def name(self) -> str:
        return f"{self.family}({','.join(map(str, self.params))})"


def gen_php(pigeons: int, holes: int) -> Cnf:
    """Pigeonhole formula; variable (i-1)*holes + j says pigeon i sits in hole j."""
    if pigeons < 1 or holes < 1:
        raise ValueError("need at least one pigeon and one hole")

    def var(i, j):
        return (i - 1) * holes + j

    clauses = [[var(i, j) for j in range(1, holes + 1)] for i in range(1, pigeons + 1)]
    for j in range(1, holes + 1):
        for i, k in combinations(range(1, pigeons + 1), 2):
            clauses.append([-var(i, j), -var(k, j)])
    return Cnf.from_lists(clauses, pigeons * holes)


def gen_chain(q: int) -> Cnf:
    """x1, x1 -> x2, ..., x(q-1) -> xq, not xq."""
    if q < 1:
        raise ValueError("chain length must be positive")
    clauses = [[1]] + [[-i, i + 1] for i in range(1, q)] + [[-q]]
    return Cnf.from_lists(clauses, q)


def gen_randk(n: int, m: int, width: int, seed: int) -> Cnf:
    """``m`` random clauses over ``width`` distinct variables each."""
    if not 1 <= width <= n or m < 1:
        raise ValueError("need 1 <= width <= n and m >= 1")
    rng = random.Random(seed)
    clauses = []
    for _ in range(m):
        vs = rng.sample(range(1, n + 1), width)
        clauses.append([v if rng.getrandbits(1) else -v for v in vs])
    return Cnf.from_lists(clauses, n)


class NoRefutationWithinWidth(Exception):
    pass


def _saturate(f: Cnf, W: int) -> ResProof | None:
    clauses: list[Clause] = []
    parents: list[tuple[int, int, int] | None] = []
    index: dict[Clause, int] = {}
    occ: dict[int, list[int]] = {}

    def add(c, par):
        index[c] = len(clauses)
        clauses.append(c)
        parents.append(par)
        for x in c:
            occ.setdefault(x, []).append(index[c])
        return not c

    for c in f.clauses:
        if c not in index and add(c, None):
            return _extract(clauses, parents, index[c])
    lo = 0
    while lo < len(clauses):
        hi = len(clauses)
        found: dict[Clause, tuple[int, int, int]] = {}
        for i in range(lo, hi):
            ci = clauses[i]
            for x in ci.literals:
                for j in occ.get(-x, ()):
                    if j >= i:
                        break
                    r = (ci - {x}) | (clauses[j] - {-x})
                    if len(r) > W or r in index or r in found:
                        continue
                    r = Clause(r)
                    if r.is_tautology:
                        continue
                    found[r] = (j, i, abs(x))
        for r in sorted(found, key=Clause.sort_key):
            if add(r, found[r]):
                return _extract(clauses, parents, index[r])
        lo = hi
    return None


def _extract(clauses, parents, root) -> ResProof:
    keep = {root}
    todo = [root]
    while todo:
        par = parents[todo.pop()]
        if par:
            for a in par[:2]:
                if a not in keep:
                    keep.add(a)
                    todo.append(a)
    order = sorted(keep)
    new_id = {old: k for k, old in enumerate(order, 1)}
    lines = []
    for old in order:
        par = parents[old]
        if par is None:
            lines.append(ResLine(new_id[old], INITIAL, clauses[old]))
        else:
            a, b, v = par
            lines.append(ResLine(new_id[old], RESOLVE, clauses[old], (new_id[a], new_id[b]), v))
    return ResProof(tuple(lines))


def prove_bounded(f: Cnf, max_width: int) -> ResProof:
    """Refute ``f`` deriving only clauses of width <= ``max_width``.

    Budgets 0, 1, ..., max_width are tried in turn, so the proof returned is
    the one found at the smallest sufficient budget.  Initial clauses are
    admitted whatever their width.
    """
    for w in range(max_width + 1):
        p = _saturate(f, w)
        if p is not None:
            return p
    raise NoRefutationWithinWidth(f"no refutation with derived width <= {max_width}")


def acceptance_corpus() -> list[tuple[str, Cnf]]:
    """chain(1..8), php(n+1, n) for n = 1..3, and the first ten unsatisfiable
    randk(4, 30, 3) instances by increasing seed."""
    from .semantics import is_satisfiable

    out = [(f"chain({q})", gen_chain(q)) for q in range(1, 9)]
    out += [(f"php({n + 1},{n})", gen_php(n + 1, n)) for n in range(1, 4)]
    seed, found = 0, 0
    while found < 10:
        seed += 1
        f = gen_randk(4, 30, 3, seed)
        if not is_satisfiable(f):
            out.append((f"randk(4,30,3,seed={seed})", f))
            found += 1
    return out
