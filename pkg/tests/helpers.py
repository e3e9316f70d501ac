"""Shared test machinery: small-CNF enumeration, mutation operators and the
truth-table entailment check."""

from __future__ import annotations

import itertools
from dataclasses import replace

from narrowres.core import Clause, Cnf, Term, resolve
from narrowres.formats import AXIOM, CUT, INITIAL, RESOLVE, ResProof, TreeDnfProof, tree_lines
from narrowres.semantics import Models


def small_unsat_cnfs(n: int = 3, max_clauses: int = 6, with_empty: bool = True) -> list[Cnf]:
    """One representative per symmetry class (variable permutation and
    polarity flips) of the unsatisfiable sets of at most ``max_clauses``
    distinct non-tautological clauses over ``n`` variables."""
    clauses = []
    for signs in itertools.product((0, 1, -1), repeat=n):
        c = tuple(s * (v + 1) for v, s in enumerate(signs) if s)
        if c or with_empty:
            clauses.append(frozenset(c))
    full = (1 << (2 ** n)) - 1

    def falsified(c):
        m = 0
        for a in range(2 ** n):
            if not any(((a >> (abs(x) - 1)) & 1) == (x > 0) for x in c):
                m |= 1 << a
        return m

    masks = [falsified(c) for c in clauses]
    index = {c: i for i, c in enumerate(clauses)}
    syms = []
    for perm in itertools.permutations(range(n)):
        for flip in itertools.product((1, -1), repeat=n):
            syms.append([
                index[frozenset(flip[abs(x) - 1] * (1 if x > 0 else -1) * (perm[abs(x) - 1] + 1) for x in c)]
                for c in clauses
            ])
    reps = set()
    for size in range(1, max_clauses + 1):
        for comb in itertools.combinations(range(len(clauses)), size):
            m = 0
            for i in comb:
                m |= masks[i]
            if m != full:
                continue
            reps.add(min(tuple(sorted(s[i] for i in comb)) for s in syms))
    return [Cnf(n, tuple(Clause(clauses[i]) for i in rep)) for rep in sorted(reps)]


# ------------------------------------------------------------------ mutation

def _set_line(p: ResProof, k: int, **kw) -> ResProof:
    lines = list(p.lines)
    lines[k] = replace(lines[k], **kw)
    return ResProof(tuple(lines))


def _same_resolvent(clause_at, prem, pivot, claimed) -> bool:
    try:
        return resolve(clause_at[prem[0]], clause_at[prem[1]], pivot) == claimed
    except ValueError:
        return False


def res_mutants(p: ResProof):
    """Yield (kind, mutant) single-point mutations of a Resolution proof."""
    for k, ln in enumerate(p.lines):
        for x in ln.clause.literals:
            yield "literal-flip", _set_line(p, k, clause=Clause((ln.clause - {x}) | {-x}))
        if ln.rule == RESOLVE:
            clause_at = {q.id: q.clause for q in p.lines[:k]}
            for slot in (0, 1):
                # first earlier line that really changes the step; swapping in
                # a line with the same resolvent is an equivalent mutant
                for j in sorted(clause_at):
                    prem = list(ln.premises)
                    prem[slot] = j
                    if _same_resolvent(clause_at, prem, ln.pivot, ln.clause):
                        continue
                    yield "premise-change", _set_line(p, k, premises=tuple(prem))
                    break
            others = sorted({abs(x) for q in p.lines for x in q.clause} - {ln.pivot})
            if others:
                yield "pivot-change", _set_line(p, k, pivot=others[0])


def _set_node(p: TreeDnfProof, k: int, **kw) -> TreeDnfProof:
    nodes = list(p.nodes)
    nodes[k] = replace(nodes[k], **kw)
    return TreeDnfProof(p.bound, tuple(nodes))


def tree_mutants(p: TreeDnfProof):
    """Yield (kind, mutant) single-point mutations of a tree-like proof."""
    for k, n in enumerate(p.nodes):
        # {x} or {not x} is the same axiom line, so that flip changes nothing
        if not (n.kind == AXIOM and len(n.literals) == 1):
            for x in n.literals.literals:
                yield "literal-flip", _set_node(p, k, literals=Term((n.literals - {x}) | {-x}))
        if n.kind == CUT:
            yield "premise-swap", _set_node(p, k, premises=n.premises[::-1])
            for x in n.literals.literals:
                yield "cut-literal-deletion", _set_node(p, k, literals=Term(n.literals - {x}))


# ------------------------------------------------------------------ oracle

def res_lines_entailed(f: Cnf, p: ResProof, models: Models | None = None) -> bool:
    m = models or Models(f)
    return all(m.entails_clause(ln.clause) for ln in p.lines)


def tree_lines_entailed(f: Cnf, p: TreeDnfProof, models: Models | None = None) -> bool:
    m = models or Models(f)
    return all(m.entails_dnf(line) for line in tree_lines(f, p).values())


def initial_lines_are_clauses(f: Cnf, p: ResProof) -> bool:
    return all(ln.clause in set(f.clauses) for ln in p.lines if ln.rule == INITIAL)
