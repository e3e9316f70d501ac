"""Narrow Resolution refutations to short tree-like Res(w) refutations.

Given a Resolution refutation D_1..D_S of width w, walk it backwards keeping
a single DNF line E_t whose terms are negations of clauses D_i with i <= t.
Each step removes the term for D_t, either against a leaf (initial clause)
or by trading it for the negations of D_t's two premises.  Each step consumes
the previous line once, so the output is tree-like and linear in S.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .checker import check_res
from .core import Clause, Cnf, Term, negate_clause, resolve
from .formats import INITIAL, RESOLVE, WEAKEN, ResLine, ResProof, TreeBuilder, TreeDnfProof


class InvalidInput(ValueError):
    pass


class HasWeakening(InvalidInput):
    pass


class InternalBoundViolated(AssertionError):
    pass


_TOP = None  # marker for a line replaced by "true" (a dropped tautology)


def eliminate_weakening(f: Cnf, p: ResProof) -> ResProof:
    """Remove weakening steps and tautological lines.

    Each line is replaced by a subclause of itself that is derivable by plain
    resolution.  A resolution step whose replaced premise no longer contains
    the pivot is bypassed, reusing that premise.  Line ids are kept and the
    output ends at the first line that becomes empty.
    """
    report = check_res(f, p)
    if not report.valid:
        raise InvalidInput(f"input proof is invalid: {report.violations[0].kind}")
    rep: dict[int, int | None] = {}  # line id -> id of its replacement line, or _TOP
    clause_of: dict[int, Clause] = {}
    out: list[ResLine] = []

    for ln in p.lines:
        c = ln.clause
        if ln.rule == INITIAL:
            if c.is_tautology:
                rep[ln.id] = _TOP
            else:
                out.append(ln)
                rep[ln.id] = ln.id
                clause_of[ln.id] = c
                if not c:
                    break
            continue
        if ln.rule == WEAKEN:
            rep[ln.id] = rep[ln.premises[0]]
            continue
        ra, rb = (rep[x] for x in ln.premises)
        x = ln.pivot
        if ra is _TOP or rb is _TOP:
            other = rb if ra is _TOP else ra
            if other is not _TOP and clause_of[other] <= c:
                rep[ln.id] = other
            else:
                rep[ln.id] = _TOP
            continue
        a, b = clause_of[ra], clause_of[rb]
        if (x in a and -x in b) or (x in b and -x in a):
            r = resolve(a, b, x)
            if r.is_tautology:
                rep[ln.id] = _TOP
                continue
            out.append(ResLine(ln.id, RESOLVE, r, (ra, rb), x))
            rep[ln.id] = ln.id
            clause_of[ln.id] = r
            if not r:
                break
        elif x not in a and -x not in a:
            rep[ln.id] = ra
        else:
            rep[ln.id] = rb

    # stop at the first empty clause: whatever follows it is not needed
    if not out or out[-1].clause:
        raise InternalBoundViolated("normalised proof does not end in the empty clause")
    return ResProof(tuple(out))


@dataclass
class ExpandState:
    """The current line E_t: term -> index of the proof line it negates."""

    t: int
    origin: dict[Term, int] = field(default_factory=dict)
    node: int = 0

    def check_subset(self, negations: dict[int, Term]) -> None:
        for term, i in self.origin.items():
            if i > self.t or negations[i] != term:
                raise InternalBoundViolated(f"term {list(term.literals)} is not the negation of a line <= {self.t}")


def _prepare(p: ResProof) -> list[ResLine]:
    """Cone of the first empty clause, with duplicate clauses merged onto their
    first occurrence, renumbered 1..S."""
    first_empty = next((ln for ln in p.lines if not ln.clause), None)
    if first_empty is None:
        raise InvalidInput("proof never derives the empty clause")
    by_id = p.by_id()
    alias: dict[int, int] = {}
    first_of: dict[Clause, int] = {}
    for ln in p.lines:
        alias[ln.id] = first_of.setdefault(ln.clause, ln.id)
        if ln.id == first_empty.id:
            break
    keep: set[int] = set()
    todo = [first_empty.id]
    while todo:
        i = todo.pop()
        if i in keep:
            continue
        keep.add(i)
        todo.extend(alias[a] for a in by_id[i].premises)
    order = [ln.id for ln in p.lines if ln.id in keep]
    renum = {old: new for new, old in enumerate(order, 1)}
    return [
        ResLine(renum[i], by_id[i].rule, by_id[i].clause,
                tuple(renum[alias[a]] for a in by_id[i].premises), by_id[i].pivot)
        for i in order
    ]


def expand(f: Cnf, p: ResProof) -> TreeDnfProof:
    """Tree-like Res(max(w, 1)) refutation of ``f`` from the width-w refutation ``p``.

    ``p`` must be valid and free of weakening; see :func:`eliminate_weakening`.
    """
    report = check_res(f, p)
    if not report.valid:
        raise InvalidInput(f"input proof is invalid: {report.violations[0].kind}")
    if p.has_weakening:
        raise HasWeakening("run eliminate_weakening first")
    lines = _prepare(p)
    if any(ln.clause.is_tautology for ln in lines):
        raise InvalidInput("tautological line in the refutation; run eliminate_weakening first")
    S = len(lines)
    w = max(len(ln.clause) for ln in lines)
    out = TreeBuilder(max(w, 1))
    D = {ln.id: ln for ln in lines}
    neg = {ln.id: negate_clause(ln.clause) for ln in lines}

    last = D[S]
    if last.rule == INITIAL:
        out.leaf(f.index_of(last.clause))
        return out.proof()

    a, b = last.premises
    x = last.pivot if last.pivot in D[a].clause else -last.pivot
    st = ExpandState(S - 1)
    st.node = out.axiom([x])
    st.origin = {neg[a]: a, neg[b]: b}
    st.check_subset(neg)

    for t in range(S - 1, 0, -1):
        st.t = t
        term = neg[t]
        if st.origin.get(term) != t:
            st.check_subset(neg)
            continue
        line = D[t]
        del st.origin[term]
        if line.rule == INITIAL:
            leaf = out.leaf(f.index_of(line.clause))
            st.node = out.cut(st.node, leaf, term)
        else:
            pa, pb = line.premises
            if line.pivot not in D[pa].clause:
                pa, pb = pb, pa
            piv = line.pivot
            ax_a = out.axiom(neg[pa])
            ax_b = out.axiom(neg[pb])
            mid = out.cut(ax_a, ax_b, [piv])
            st.node = out.cut(st.node, mid, term)
            for i in (pa, pb):
                st.origin.setdefault(neg[i], i)
        st.check_subset(neg)

    if st.origin:
        raise InternalBoundViolated(f"{len(st.origin)} terms left after the last step")
    proof = out.proof()
    m = len(f)
    if len(proof) > 4 * S + 2 * m + 1:
        raise InternalBoundViolated(f"{len(proof)} nodes exceed 4S+2m+1={4 * S + 2 * m + 1}")
    return proof
