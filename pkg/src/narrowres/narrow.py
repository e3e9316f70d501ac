"""Tree-like Res(l) refutations with few leaves to narrow Resolution refutations.

The root of a tree-like refutation cuts a proof of a single term
``l_1 ... l_s`` (the conjunction side) against a proof of the clause
``-l_1 v ... v -l_s`` (the disjunction side).  Whichever side has at most
half the leaves is refuted recursively under a restriction, which costs
``l`` extra width per halving; the other side is handled with the same
width budget.  This gives width ``l * ceil(log2 L) + max(k, l)``.

Recursion runs on an explicit stack of generators: a step ``yield``s a
subproblem and receives its refutation back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Generator, Iterable

from .checker import check_tree_dnf
from .core import (
    Clause, Cnf, Term, assignment_from_literals, negate_clause, negate_term, restrict_clause,
    restrict_cnf, restrict_term,
)
from .formats import (
    AXIOM, CUT, INITIAL, LEAF, RESOLVE,
    ResBuilder, ResLine, ResProof, TreeBuilder, TreeDnfProof,
    axiom_line, cut_line, leaf_line, tree_lines,
)


class InvalidInput(ValueError):
    pass


class RootBecameTrue(AssertionError):
    pass


class RootTermMismatch(ValueError):
    pass


class ProvenanceMiss(ValueError):
    pass


class BudgetExceeded(AssertionError):
    pass


def trampoline(gen: Generator):
    """Run a generator-based recursion without using the Python call stack."""
    stack = [gen]
    value = None
    while stack:
        try:
            child = stack[-1].send(value)
        except StopIteration as stop:
            stack.pop()
            value = stop.value
            continue
        stack.append(child)
        value = None
    return value


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length() if n > 1 else 0


@dataclass(frozen=True)
class NarrowBudget:
    l: int
    k: int
    L: int

    @property
    def width(self) -> int:
        return self.l * ceil_log2(self.L) + max(self.k, self.l)


# ------------------------------------------------------------ proof surgery

def _subproof(p: TreeDnfProof, root_id: int, renumber: bool = True):
    by = p.by_id()
    keep = {root_id}
    todo = [root_id]
    while todo:
        for a in by[todo.pop()].premises:
            keep.add(a)
            todo.append(a)
    nodes = [n for n in p.nodes if n.id in keep]
    return _renumber(p.bound, nodes) if renumber else nodes


def _renumber(bound: int, nodes) -> TreeDnfProof:
    new_id = {n.id: k for k, n in enumerate(nodes, 1)}
    out = TreeBuilder(bound)
    for n in nodes:
        if n.kind == LEAF:
            out.leaf(n.clause_index)
        elif n.kind == AXIOM:
            out.axiom(n.literals)
        else:
            a, b = n.premises
            out.cut(new_id[a], new_id[b], n.literals)
    return out.proof()


def _rewrite(
    f: Cnf,
    p: TreeDnfProof,
    rho: dict[int, bool],
    leaf_index: Callable[[int], int],
    sub_term: Term | None = None,
    sub_index: int | None = None,
) -> TreeDnfProof:
    """Restrict ``p`` by ``rho`` and replace axioms on ``sub_term`` by a leaf.

    Each node is mapped to either ``None`` (its restricted line contains the
    empty term) or an output node whose line is a sub-DNF of the restricted
    line, after applying the pending term-shrink demands.  A cut whose term
    or clause part went missing is skipped by passing a premise through.  When
    the clause side lost only some singletons, the term side is rebuilt with a
    demand to shrink the cut term to the surviving part; the demand is met
    where the term is introduced, at its axioms.
    """
    by = p.by_id()
    out = TreeBuilder(p.bound)
    origin: list[int] = []  # output node id - 1 -> input node it came from

    def made(nid: int, new_id: int) -> int:
        origin.append(nid)
        return new_id

    def visit(nid: int, demand: dict[Term, Term]):
        n = by[nid]
        if n.kind == LEAF:
            c = restrict_clause(f.clause(n.clause_index), rho)
            if c is None:
                return None
            return made(nid, out.leaf(leaf_index(n.clause_index))), leaf_line(c)
        if n.kind == AXIOM:
            if any(rho.get(abs(x)) == (x < 0) for x in n.literals):
                return None
            t = restrict_term(n.literals, rho)
            if not t:
                return None
            t = demand.get(t, t)
            # an axiom on a single literal also introduces its negation
            if t == sub_term or (len(t) == 1 and negate_clause(t) == sub_term):
                return made(nid, out.leaf(sub_index)), leaf_line(negate_term(sub_term))
            return made(nid, out.axiom(t)), axiom_line(t)

        a, b = n.premises
        t = restrict_term(n.literals, rho)
        if t is None:
            return (yield visit(a, demand))
        if not t:
            return (yield visit(b, demand))
        rb = yield visit(b, demand)
        if rb is None:
            return None
        node_b, line_b = rb
        kept = Term(x for x in t if Term([-x]) in line_b)
        if not kept:
            return rb
        demand_a = {k: v for k, v in demand.items() if k != t}
        if kept != t:
            demand_a[t] = kept
        ra = yield visit(a, demand_a)
        if ra is None:
            return None
        node_a, line_a = ra
        if kept not in line_a:
            return ra
        return made(nid, out.cut(node_a, node_b, kept)), cut_line(line_a, line_b, kept)

    root = trampoline(visit(p.root.id, {}))
    if root is None:
        raise RootBecameTrue("the restriction satisfied the root line")
    # lay the output out in input order, so an empty restriction is the identity
    cone = _subproof(out.proof(), root[0], renumber=False)
    result = _renumber(p.bound, sorted(cone, key=lambda n: (origin[n.id - 1], n.id)))
    if result.leaves > p.leaves:
        raise AssertionError("rewriting increased the number of leaves")
    return result


def restrict_tree_proof(f: Cnf, p: TreeDnfProof, rho: dict[int, bool]) -> TreeDnfProof:
    """``p`` restricted by ``rho``, as a proof over ``restrict_cnf(f, rho)``.

    The root line of the result is a sub-DNF of the restricted root line and
    it has no more leaves than ``p``.
    """
    g = restrict_cnf(f, rho)
    new_index = {old: new for new, old in enumerate(g.provenance, 1)}
    return _rewrite(f, p, dict(rho), new_index.__getitem__)


def substitute_axiom(f: Cnf, p: TreeDnfProof, lits: Iterable[int]) -> TreeDnfProof:
    """Turn a proof of the single term ``lits`` into a refutation of
    ``f.extend(negate_term(lits))`` by replacing the axioms that introduce
    that term with leaves of the new clause."""
    t = Term(lits)
    root_line = tree_lines(f, p)[p.root.id]
    if root_line != frozenset([t]):
        raise RootTermMismatch(f"root line is not the single term {list(t.literals)}")
    q = _rewrite(f, p, {}, lambda i: i, t, len(f) + 1)
    g = f.extend(negate_term(t))
    if tree_lines(g, q)[q.root.id]:
        raise RootTermMismatch("term also arises outside axioms; substitution left a non-empty root")
    return q


# --------------------------------------------------------- Resolution side

def _finish(b: ResBuilder, root: int) -> ResProof:
    """Cone of line ``root`` renumbered 1..n, ending at ``root``."""
    keep = {root}
    todo = [root]
    while todo:
        for a in b.lines[todo.pop() - 1].premises:
            if a not in keep:
                keep.add(a)
                todo.append(a)
    order = sorted(keep)
    new_id = {old: k for k, old in enumerate(order, 1)}
    lines = []
    for old in order:
        ln = b.lines[old - 1]
        lines.append(ResLine(new_id[old], ln.rule, ln.clause,
                             tuple(new_id[a] for a in ln.premises), ln.pivot))
    return ResProof(tuple(lines))


def _embed(out: ResBuilder, q: ResProof, anchor: Callable[[Clause], int]) -> int:
    """Append ``q`` to ``out``; initial lines of ``q`` become ``anchor(clause)``."""
    ids: dict[int, int] = {}
    for ln in q.lines:
        if ln.rule == INITIAL:
            ids[ln.id] = anchor(ln.clause)
        elif ln.rule == RESOLVE:
            ids[ln.id] = out.resolve(ids[ln.premises[0]], ids[ln.premises[1]], ln.pivot)
        else:
            ids[ln.id] = out.weaken(ids[ln.premises[0]], ln.clause)
        if out.clause_of(ids[ln.id]) != ln.clause:
            raise AssertionError(f"embedding changed line {ln.id}")
    return ids[q.lines[-1].id]


def lift_refutation(f: Cnf, q: ResProof, lits: int | Iterable[int]) -> ResProof:
    """Derive the clause ``lits`` from ``f``, given a refutation ``q`` of ``f``
    restricted by the assignment falsifying every literal in ``lits``.

    Every line of ``q`` gains the literals of ``lits``; initial lines are
    obtained from the original clause they were restricted from, weakened
    when it lacks some of those literals.
    """
    extra = Clause([lits] if isinstance(lits, int) else lits)
    rho = assignment_from_literals(-x for x in extra)
    origin: dict[Clause, Clause] = {}
    for g in f.clauses:
        r = restrict_clause(g, rho)
        if r is not None:
            origin.setdefault(r, g)
    out = ResBuilder()
    ids: dict[int, int] = {}
    for ln in q.lines:
        target = Clause(ln.clause | extra)
        if ln.rule == INITIAL:
            g = origin.get(ln.clause)
            if g is None:
                raise ProvenanceMiss(f"{list(ln.clause.literals)} is not a restricted clause of the formula")
            ids[ln.id] = out.weaken(out.initial(g), target)
        elif ln.rule == RESOLVE:
            if ln.pivot in rho:
                raise InvalidInput(f"pivot {ln.pivot} is fixed by the restriction")
            ids[ln.id] = out.resolve(ids[ln.premises[0]], ids[ln.premises[1]], ln.pivot)
        else:
            ids[ln.id] = out.weaken(ids[ln.premises[0]], target)
        if out.clause_of(ids[ln.id]) != target:
            raise AssertionError(f"lifted line {ln.id} is not the expected clause")
    result = _finish(out, ids[q.lines[-1].id])
    if result.lines[-1].clause != extra:
        raise AssertionError("lifted derivation does not end in the lifted clause")
    return result


def _narrow_step(g: Cnf, p: TreeDnfProof):
    L = p.leaves
    budget = NarrowBudget(p.bound, g.width, L)
    root = p.root
    if root.kind != CUT:
        if root.kind != LEAF or g.clause(root.clause_index):
            raise InvalidInput("a one-leaf refutation must be a leaf of the empty clause")
        return ResProof((ResLine(1, INITIAL, Clause()),))

    a, b = root.premises
    term = root.literals
    conj, disj = _subproof(p, a), _subproof(p, b)
    if len(term) == 1 and disj.leaves < conj.leaves:
        conj, disj, term = disj, conj, Term([-next(iter(term))])
    LC = conj.leaves
    out = ResBuilder()

    def child(sub_g, sub_p, halved):
        if sub_p.leaves >= L:
            raise AssertionError("recursion measure did not decrease")
        if halved and L > 1 and ceil_log2(sub_p.leaves) > ceil_log2(L) - 1:
            raise AssertionError("halved branch did not halve")
        return _narrow_step(sub_g, sub_p)

    true_all = assignment_from_literals(term)
    g1 = restrict_cnf(g, true_all)
    disj1 = restrict_tree_proof(g, disj, true_all)

    if 2 * LC <= L:
        units: dict[int, int] = {}
        for x in term.literals:
            rho = {abs(x): x < 0}
            q = yield child(restrict_cnf(g, rho), restrict_tree_proof(g, conj, rho), True)
            units[x] = _embed(out, lift_refutation(g, q, x), lambda c: out.initial(c))
        r = yield child(g1, disj1, False)
        source = {}
        for c_new, j in zip(g1.clauses, g1.provenance):
            source.setdefault(c_new, g.clause(j))

        def anchor(c):
            orig = source[c]
            cur = out.initial(orig)
            for x in term.literals:
                if -x in orig:
                    cur = out.resolve(cur, units[x], abs(x))
            return cur

        end = _embed(out, r, anchor)
    else:
        r = yield child(g1, disj1, True)
        neg = negate_term(term)
        n_id = _embed(out, lift_refutation(g, r, neg), lambda c: out.initial(c))
        g2 = g.extend(neg)
        conj2 = substitute_axiom(g, conj, term)
        known = set(g.clauses)
        r2 = yield child(g2, conj2, False)
        end = _embed(out, r2, lambda c: out.initial(c) if c in known else n_id)

    result = _finish(out, end)
    if result.lines[-1].clause:
        raise AssertionError("composed proof does not end in the empty clause")
    if result.width > budget.width:
        raise BudgetExceeded(f"width {result.width} > {budget.width} for L={L}")
    return result


def narrow(f: Cnf, p: TreeDnfProof) -> ResProof:
    """Resolution refutation of ``f`` of width at most ``l*ceil(log2 L) + max(k, l)``."""
    report = check_tree_dnf(f, p)
    if not report.valid:
        raise InvalidInput(f"input proof is invalid: {report.violations[0].kind}")
    return trampoline(_narrow_step(f, p))


def narrow_bound(f: Cnf, p: TreeDnfProof) -> int:
    return NarrowBudget(p.bound, f.width, p.leaves).width
