"""Verification of RES and DNFT proofs against a CNF."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import Clause, Cnf, PivotAbsent, PivotBothPolarities, negate_term, resolve
from .formats import (
    AXIOM, CUT, INITIAL, LEAF, RESOLVE, WEAKEN,
    ProofStats, ResProof, TreeDnfProof, axiom_line, cut_line, leaf_line, stats,
)


@dataclass(frozen=True)
class Issue:
    node: int
    kind: str
    detail: str

    def as_dict(self) -> dict:
        return {"node": self.node, "kind": self.kind, "detail": self.detail}


@dataclass
class CheckReport:
    stats: ProofStats
    violations: list[Issue] = field(default_factory=list)
    warnings: list[Issue] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def as_dict(self) -> dict:
        return {
            "valid": self.valid,
            "stats": self.stats.as_dict(),
            "violations": [v.as_dict() for v in self.violations],
            "warnings": [w.as_dict() for w in self.warnings],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def render(self) -> str:
        s = self.stats
        head = "valid" if self.valid else "INVALID"
        out = [f"{head}, width={s.width}, lines={s.lines}, leaves={s.leaves}, depth={s.depth}"]
        out += [f"violation at {v.node}: {v.kind}: {v.detail}" for v in self.violations]
        out += [f"warning at {w.node}: {w.kind}: {w.detail}" for w in self.warnings]
        return "\n".join(out)


def check_res(
    f: Cnf,
    p: ResProof,
    max_width: int | None = None,
    *,
    derived_only: bool = False,
    goal: Clause = Clause(),
) -> CheckReport:
    """Check a dag-like Resolution derivation of ``goal`` (the empty clause by default).

    With ``derived_only`` the width bound is not applied to initial lines.
    """
    bad: list[Issue] = []
    warn: list[Issue] = []
    initial = set(f.clauses)
    seen: dict[int, Clause] = {}
    used: set[int] = set()
    last_id = 0
    for ln in p.lines:
        c = ln.clause
        if ln.id <= last_id:
            bad.append(Issue(ln.id, "NonMonotoneId", f"id follows {last_id}"))
        last_id = max(last_id, ln.id)
        missing = [a for a in ln.premises if a not in seen]
        if missing:
            bad.append(Issue(ln.id, "BadPremise", f"premises {missing} are not earlier lines"))
        elif ln.rule == INITIAL:
            if c not in initial:
                bad.append(Issue(ln.id, "NotAnInitialClause", f"{list(c.literals)} is not a clause of the CNF"))
        elif ln.rule == RESOLVE:
            a, b = (seen[x] for x in ln.premises)
            try:
                r = resolve(a, b, ln.pivot)
            except PivotBothPolarities as e:
                bad.append(Issue(ln.id, "PivotBothPolarities", str(e)))
            except PivotAbsent as e:
                bad.append(Issue(ln.id, "PivotAbsent", str(e)))
            else:
                if r != c:
                    bad.append(Issue(ln.id, "ResolventMismatch",
                                     f"resolvent is {list(r.literals)}, line claims {list(c.literals)}"))
        elif ln.rule == WEAKEN:
            a = seen[ln.premises[0]]
            if not a <= c:
                bad.append(Issue(ln.id, "WeakeningShrinks", f"drops {sorted(a - c)}"))
        else:
            bad.append(Issue(ln.id, "UnknownRule", repr(ln.rule)))
        used.update(ln.premises)
        if max_width is not None and len(c) > max_width and not (derived_only and ln.rule == INITIAL):
            bad.append(Issue(ln.id, "WidthExceeded", f"width {len(c)} > {max_width}"))
        if c.is_tautology:
            warn.append(Issue(ln.id, "Tautology", "line contains a complementary pair"))
        if ln.had_duplicates:
            warn.append(Issue(ln.id, "DuplicateLiteral", "duplicate literal merged"))
        if not c and ln is not p.lines[-1]:
            warn.append(Issue(ln.id, "EarlyEmpty", "empty clause before the last line"))
        seen[ln.id] = c
    if not p.lines:
        bad.append(Issue(0, "LastLineNotEmpty", "proof has no lines"))
    else:
        end = p.lines[-1]
        if end.clause != goal:
            kind = "LastLineNotEmpty" if not goal else "GoalMismatch"
            bad.append(Issue(end.id, kind, f"last line is {list(end.clause.literals)}"))
        for ln in p.lines[:-1]:
            if ln.id not in used:
                warn.append(Issue(ln.id, "UnusedLine", "never used as a premise"))
    return CheckReport(stats(p), bad, warn)


def check_tree_dnf(f: Cnf, p: TreeDnfProof, *, goal: frozenset = frozenset()) -> CheckReport:
    """Check a tree-like Res(l) proof; ``goal`` is the required root line."""
    bad: list[Issue] = []
    l = p.bound
    lines: dict[int, frozenset] = {}
    parent: dict[int, int] = {}
    if l < 1:
        bad.append(Issue(0, "BadBound", f"term bound {l} < 1"))
    last_id = 0
    for n in p.nodes:
        if n.id <= last_id:
            bad.append(Issue(n.id, "NonMonotoneId", f"id follows {last_id}"))
        last_id = max(last_id, n.id)
        line = frozenset()
        if n.kind == LEAF:
            if n.clause_index is None or not 1 <= n.clause_index <= len(f):
                bad.append(Issue(n.id, "BadClauseIndex", f"no clause {n.clause_index}"))
            else:
                line = leaf_line(f.clause(n.clause_index))
        elif n.kind in (AXIOM, CUT):
            t = n.literals
            if not t:
                bad.append(Issue(n.id, "EmptyTerm", "rule needs 1 <= s literals"))
            if len(t) > l:
                bad.append(Issue(n.id, "TermWidthExceeded", f"s={len(t)} > l={l}"))
            if t.is_contradictory:
                bad.append(Issue(n.id, "ContradictoryTerm", f"{list(t.literals)}"))
            if n.kind == AXIOM:
                line = axiom_line(t)
            else:
                prem_ok = True
                for x in n.premises:
                    if x not in lines:
                        bad.append(Issue(n.id, "BadPremise", f"{x} is not an earlier node"))
                        prem_ok = False
                    elif x in parent:
                        bad.append(Issue(n.id, "PremiseReused", f"{x} already used by {parent[x]}"))
                    else:
                        parent[x] = n.id
                if len(n.premises) != 2 or n.premises[0] == n.premises[1]:
                    bad.append(Issue(n.id, "BadPremise", "cut needs two distinct premises"))
                    prem_ok = False
                if prem_ok:
                    a, b = (lines[x] for x in n.premises)
                    if t not in a:
                        bad.append(Issue(n.id, "CutTermAbsent",
                                         f"premise {n.premises[0]} lacks term {list(t.literals)}"))
                    missing = leaf_line(negate_term(t)) - b
                    if missing:
                        bad.append(Issue(n.id, "CutClausePartAbsent",
                                         f"premise {n.premises[1]} lacks {sorted(next(iter(m)) for m in missing)}"))
                    line = cut_line(a, b, t)
        else:
            bad.append(Issue(n.id, "UnknownRule", repr(n.kind)))
        for term in line:
            if len(term) > l:
                bad.append(Issue(n.id, "TermWidthExceeded", f"term of width {len(term)}"))
                break
        lines[n.id] = line
    if not p.nodes:
        bad.append(Issue(0, "RootNotEmpty", "proof has no nodes"))
    else:
        root = p.nodes[-1]
        if lines[root.id] != goal:
            bad.append(Issue(root.id, "RootNotEmpty" if not goal else "GoalMismatch",
                             f"root line has {len(lines[root.id])} terms"))
        for n in p.nodes[:-1]:
            if n.id not in parent:
                bad.append(Issue(n.id, "Unreachable", "not used as a premise"))
    st = stats(p)
    occ = sum(len(v) for v in lines.values())
    st = ProofStats(st.lines, st.leaves, st.width, st.depth, occ)
    return CheckReport(st, bad)
