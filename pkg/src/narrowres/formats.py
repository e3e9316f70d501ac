"""Proof data types and the DIMACS / RES / DNFT text formats.

RES (dag-like Resolution), one line per proof line::

    <id> i <lit>* 0
    <id> r <a> <b> <pivot> <lit>* 0
    <id> w <a> <lit>* 0

DNFT (tree-like Res(l)), a ``p dnft <l>`` header then one node per line::

    <id> L <clause-index>
    <id> A <lit>* 0
    <id> C <a> <b> <lit>* 0

The root of a DNFT proof is its highest id.  ``c`` lines are comments in
all three formats.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable

from .core import Clause, Cnf, Term, negate_term, resolve

INITIAL, RESOLVE, WEAKEN = "i", "r", "w"
LEAF, AXIOM, CUT = "L", "A", "C"


class ParseError(ValueError):
    """Malformed input; ``lineno`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, lineno: int = 0):
        super().__init__(f"line {lineno}: {message}" if lineno else message)
        self.lineno = lineno


class HeaderMismatch(ParseError):
    pass


class BadToken(ParseError):
    pass


class ZeroMissing(ParseError):
    pass


class UnknownRule(ParseError):
    pass


class ForwardReference(ParseError):
    pass


class NonMonotoneId(ParseError):
    pass


class ReusedPremise(ParseError):
    pass


class MissingRoot(ParseError):
    pass


class DuplicateLiteral(UserWarning):
    pass


@dataclass(frozen=True)
class ResLine:
    id: int
    rule: str
    clause: Clause
    premises: tuple[int, ...] = ()
    pivot: int | None = None
    had_duplicates: bool = field(default=False, compare=False)


@dataclass(frozen=True)
class ResProof:
    lines: tuple[ResLine, ...]

    def __len__(self) -> int:
        return len(self.lines)

    @property
    def width(self) -> int:
        return max((len(ln.clause) for ln in self.lines), default=0)

    @property
    def has_weakening(self) -> bool:
        return any(ln.rule == WEAKEN for ln in self.lines)

    def by_id(self) -> dict[int, ResLine]:
        return {ln.id: ln for ln in self.lines}


class ResBuilder:
    """Append-only construction of a ResProof with consecutive ids.

    Identical clauses are shared: asking for a clause that is already on a
    line returns that line's id.
    """

    def __init__(self):
        self.lines: list[ResLine] = []
        self._seen: dict[Clause, int] = {}

    def clause_of(self, i: int) -> Clause:
        return self.lines[i - 1].clause

    def _add(self, rule, clause, premises=(), pivot=None) -> int:
        known = self._seen.get(clause)
        if known is not None:
            return known
        i = len(self.lines) + 1
        self.lines.append(ResLine(i, rule, clause, tuple(premises), pivot))
        self._seen[clause] = i
        return i

    def initial(self, clause: Iterable[int]) -> int:
        return self._add(INITIAL, Clause(clause))

    def resolve(self, a: int, b: int, pivot: int) -> int:
        c = resolve(self.clause_of(a), self.clause_of(b), pivot)
        return self._add(RESOLVE, c, (a, b), abs(pivot))

    def weaken(self, a: int, clause: Iterable[int]) -> int:
        c = Clause(clause)
        if c == self.clause_of(a):
            return a
        if not self.clause_of(a) <= c:
            raise ValueError("weakening must not drop literals")
        return self._add(WEAKEN, c, (a,))

    def proof(self) -> ResProof:
        return ResProof(tuple(self.lines))


@dataclass(frozen=True)
class DnfNode:
    id: int
    kind: str
    literals: Term = Term()
    premises: tuple[int, ...] = ()
    clause_index: int | None = None


@dataclass(frozen=True)
class TreeDnfProof:
    bound: int
    nodes: tuple[DnfNode, ...]

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def root(self) -> DnfNode:
        if not self.nodes:
            raise MissingRoot("proof has no nodes")
        return self.nodes[-1]

    def by_id(self) -> dict[int, DnfNode]:
        return {n.id: n for n in self.nodes}

    @property
    def leaves(self) -> int:
        return sum(1 for n in self.nodes if n.kind != CUT)


class TreeBuilder:
    """Append-only construction of a TreeDnfProof with consecutive ids."""

    def __init__(self, bound: int):
        self.bound = bound
        self.nodes: list[DnfNode] = []

    def _add(self, **kw) -> int:
        i = len(self.nodes) + 1
        self.nodes.append(DnfNode(id=i, **kw))
        return i

    def leaf(self, clause_index: int) -> int:
        return self._add(kind=LEAF, clause_index=clause_index)

    def axiom(self, lits: Iterable[int]) -> int:
        return self._add(kind=AXIOM, literals=Term(lits))

    def cut(self, a: int, b: int, lits: Iterable[int]) -> int:
        return self._add(kind=CUT, literals=Term(lits), premises=(a, b))

    def proof(self) -> TreeDnfProof:
        return TreeDnfProof(self.bound, tuple(self.nodes))


def leaf_line(c: Clause) -> frozenset:
    return frozenset(Term([x]) for x in c)


def axiom_line(t: Term) -> frozenset:
    return frozenset([t]) | leaf_line(negate_term(t))


def cut_line(a: frozenset, b: frozenset, t: Term) -> frozenset:
    return (a - {t}) | (b - leaf_line(negate_term(t)))


# ---------------------------------------------------------------- tokenizing

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("c"):
            continue
        yield lineno, s.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise BadToken(f"not an integer: {tok!r}", lineno) from None


def _lits(toks: list[str], lineno: int) -> tuple[int, ...]:
    vals = [_int(t, lineno) for t in toks]
    if not vals or vals[-1] != 0:
        raise ZeroMissing("literal list must end with 0", lineno)
    body = vals[:-1]
    if 0 in body:
        raise BadToken("0 inside literal list", lineno)
    return tuple(body)


def _clause(lits: tuple[int, ...], lineno: int) -> tuple[Clause, bool]:
    c = Clause(lits)
    dup = len(c) != len(lits)
    if dup:
        warnings.warn(f"line {lineno}: duplicate literal merged", DuplicateLiteral, stacklevel=3)
    return c, dup


def _fmt(lits: Iterable[int]) -> str:
    return " ".join(str(x) for x in (*lits, 0))


# -------------------------------------------------------------------- DIMACS

def parse_dimacs(text: str) -> Cnf:
    header = None
    clauses: list[Clause] = []
    pending: list[int] = []
    for lineno, toks in _content_lines(text):
        if toks[0] == "p":
            if header is not None:
                raise BadToken("second header", lineno)
            if len(toks) != 4 or toks[1] != "cnf":
                raise BadToken("expected 'p cnf <vars> <clauses>'", lineno)
            header = (_int(toks[2], lineno), _int(toks[3], lineno), lineno)
            continue
        if header is None:
            raise BadToken("clause before header", lineno)
        for t in toks:
            v = _int(t, lineno)
            if v == 0:
                c, _ = _clause(tuple(pending), lineno)
                clauses.append(c)
                pending = []
            else:
                if abs(v) > header[0]:
                    raise HeaderMismatch(f"literal {v} exceeds declared {header[0]} variables", lineno)
                pending.append(v)
    if header is None:
        raise BadToken("missing 'p cnf' header")
    if pending:
        raise ZeroMissing("last clause not terminated by 0")
    n, m, hline = header
    if len(clauses) != m:
        raise HeaderMismatch(f"header declares {m} clauses, found {len(clauses)}", hline)
    return Cnf(n, tuple(clauses))


def serialize_dimacs(f: Cnf) -> str:
    out = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    out += [_fmt(c.literals) for c in f.clauses]
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------- RES

def parse_res_proof(text: str) -> ResProof:
    lines: list[ResLine] = []
    known: set[int] = set()
    last = 0
    for lineno, toks in _content_lines(text):
        if len(toks) < 2:
            raise BadToken("expected '<id> <rule> ...'", lineno)
        i = _int(toks[0], lineno)
        if i <= last:
            raise NonMonotoneId(f"id {i} does not exceed previous id {last}", lineno)
        rule, rest = toks[1], toks[2:]
        nprem = {INITIAL: 0, RESOLVE: 2, WEAKEN: 1}.get(rule)
        if nprem is None:
            raise UnknownRule(f"unknown rule {rule!r}", lineno)
        head = nprem + (1 if rule == RESOLVE else 0)
        if len(rest) < head:
            raise BadToken("too few fields", lineno)
        prem = tuple(_int(t, lineno) for t in rest[:nprem])
        for a in prem:
            if a not in known:
                raise ForwardReference(f"premise {a} is not an earlier line", lineno)
        pivot = None
        if rule == RESOLVE:
            pivot = _int(rest[2], lineno)
            if pivot <= 0:
                raise BadToken("pivot must be a positive variable index", lineno)
        c, dup = _clause(_lits(rest[head:], lineno), lineno)
        lines.append(ResLine(i, rule, c, prem, pivot, dup))
        known.add(i)
        last = i
    return ResProof(tuple(lines))


def serialize_res_proof(p: ResProof) -> str:
    out = []
    for ln in p.lines:
        head = [str(ln.id), ln.rule, *map(str, ln.premises)]
        if ln.rule == RESOLVE:
            head.append(str(ln.pivot))
        out.append(" ".join(head) + " " + _fmt(ln.clause.literals))
    return "".join(s + "\n" for s in out)


# ---------------------------------------------------------------------- DNFT

def parse_dnf_proof(text: str) -> TreeDnfProof:
    bound = None
    nodes: list[DnfNode] = []
    known: set[int] = set()
    used: dict[int, int] = {}
    last = 0
    for lineno, toks in _content_lines(text):
        if toks[0] == "p":
            if bound is not None or len(toks) != 3 or toks[1] != "dnft":
                raise BadToken("expected a single 'p dnft <l>' header", lineno)
            bound = _int(toks[2], lineno)
            continue
        if bound is None:
            raise BadToken("node before 'p dnft' header", lineno)
        if len(toks) < 2:
            raise BadToken("expected '<id> <kind> ...'", lineno)
        i = _int(toks[0], lineno)
        if i <= last:
            raise NonMonotoneId(f"id {i} does not exceed previous id {last}", lineno)
        kind, rest = toks[1], toks[2:]
        if kind == LEAF:
            if len(rest) != 1:
                raise BadToken("leaf takes exactly one clause index", lineno)
            node = DnfNode(i, LEAF, clause_index=_int(rest[0], lineno))
        elif kind == AXIOM:
            node = DnfNode(i, AXIOM, literals=Term(_lits(rest, lineno)))
        elif kind == CUT:
            if len(rest) < 3:
                raise BadToken("cut needs two premises and a literal list", lineno)
            a, b = _int(rest[0], lineno), _int(rest[1], lineno)
            for x in (a, b):
                if x not in known:
                    raise ForwardReference(f"premise {x} is not an earlier node", lineno)
                if x in used or a == b:
                    raise ReusedPremise(f"node {x} is already a premise of node {used.get(x, i)}", lineno)
                used[x] = i
            node = DnfNode(i, CUT, literals=Term(_lits(rest[2:], lineno)), premises=(a, b))
        else:
            raise UnknownRule(f"unknown node kind {kind!r}", lineno)
        nodes.append(node)
        known.add(i)
        last = i
    if bound is None:
        raise BadToken("missing 'p dnft' header")
    if not nodes:
        raise MissingRoot("proof has no nodes")
    return TreeDnfProof(bound, tuple(nodes))


def serialize_dnf_proof(p: TreeDnfProof) -> str:
    out = [f"p dnft {p.bound}"]
    for n in p.nodes:
        if n.kind == LEAF:
            out.append(f"{n.id} L {n.clause_index}")
        elif n.kind == AXIOM:
            out.append(f"{n.id} A {_fmt(n.literals.literals)}")
        else:
            a, b = n.premises
            out.append(f"{n.id} C {a} {b} {_fmt(n.literals.literals)}")
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------- stats

@dataclass(frozen=True)
class ProofStats:
    """Size measures.  ``width`` is clause width for RES and term width for DNFT.

    ``term_occurrences`` sums the number of terms over all DNFT lines (it needs
    the CNF to expand leaves); for RES it sums clause widths.
    """

    lines: int
    leaves: int
    width: int
    depth: int
    term_occurrences: int | None = None

    def as_dict(self) -> dict:
        return {
            "lines": self.lines,
            "leaves": self.leaves,
            "width": self.width,
            "depth": self.depth,
            "term_occurrences": self.term_occurrences,
        }


def _depths(items, premises_of) -> int:
    depth: dict[int, int] = {}
    for key in items:
        prem = premises_of(key)
        depth[key] = 1 + max((depth.get(a, 0) for a in prem), default=-1)
    return max(depth.values(), default=0)


def tree_lines(f: Cnf, p: TreeDnfProof) -> dict[int, frozenset]:
    """DNF line of every node, computed without checking the rule side conditions."""
    lines: dict[int, frozenset] = {}
    for n in p.nodes:
        if n.kind == LEAF:
            lines[n.id] = leaf_line(f.clause(n.clause_index))
        elif n.kind == AXIOM:
            lines[n.id] = axiom_line(n.literals)
        else:
            a, b = n.premises
            lines[n.id] = cut_line(lines[a], lines[b], n.literals)
    return lines


def stats(proof: ResProof | TreeDnfProof, cnf: Cnf | None = None) -> ProofStats:
    if isinstance(proof, ResProof):
        by = proof.by_id()
        return ProofStats(
            lines=len(proof),
            leaves=sum(1 for ln in proof.lines if ln.rule == INITIAL),
            width=proof.width,
            depth=_depths([ln.id for ln in proof.lines], lambda i: by[i].premises),
            term_occurrences=sum(len(ln.clause) for ln in proof.lines),
        )
    by = proof.by_id()
    width = 0
    for n in proof.nodes:
        width = max(width, len(n.literals) if n.kind != LEAF else 1)
    occ = None
    if cnf is not None:
        occ = sum(len(v) for v in tree_lines(cnf, proof).values())
    return ProofStats(
        lines=len(proof),
        leaves=proof.leaves,
        width=width,
        depth=_depths([n.id for n in proof.nodes], lambda i: by[i].premises),
        term_occurrences=occ,
    )
