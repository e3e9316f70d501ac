"""Literals, clauses, terms, DNF lines and CNFs.

Literals follow the DIMACS convention: a nonzero int whose magnitude is the
variable and whose sign is the polarity.  Clauses and terms are immutable
literal sets; a DNF line is a frozenset of terms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Assignment = Mapping[int, bool]


def lit_key(lit: int) -> tuple[int, bool]:
    """Canonical sort key: variable first, negative before positive."""
    return (abs(lit), lit > 0)


def _check_literals(lits: Iterable[int]) -> frozenset[int]:
    s = frozenset(lits)
    if 0 in s:
        raise ValueError("0 is not a literal")
    return s


class _LiteralSet(frozenset):
    __slots__ = ()

    def __new__(cls, lits: Iterable[int] = ()):
        return super().__new__(cls, _check_literals(lits))

    @property
    def literals(self) -> tuple[int, ...]:
        return tuple(sorted(self, key=lit_key))

    @property
    def width(self) -> int:
        return len(self)

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(abs(x) for x in self)

    def _clashing(self) -> bool:
        return any(-x in self for x in self if x > 0)

    def sort_key(self) -> tuple:
        return (len(self), tuple(lit_key(x) for x in self.literals))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.literals)})"


class Clause(_LiteralSet):
    """A disjunction of literals.  The empty clause is the contradiction."""

    __slots__ = ()

    @property
    def is_tautology(self) -> bool:
        return self._clashing()


class Term(_LiteralSet):
    """A conjunction of literals.  The empty term is the constant true."""

    __slots__ = ()

    @property
    def is_contradictory(self) -> bool:
        return self._clashing()


DnfLine = frozenset  # frozenset[Term]

EMPTY_CLAUSE = Clause()


class PivotAbsent(ValueError):
    pass


class PivotBothPolarities(ValueError):
    pass


def resolve(a: Clause, b: Clause, pivot: int) -> Clause:
    """Resolve ``a`` and ``b`` on variable ``pivot``; either orientation is accepted."""
    pivot = abs(pivot)
    for premise in (a, b):
        if pivot in premise and -pivot in premise:
            raise PivotBothPolarities(f"pivot {pivot} occurs with both signs in {premise!r}")
    if pivot in a and -pivot in b:
        pos, neg = a, b
    elif pivot in b and -pivot in a:
        pos, neg = b, a
    else:
        raise PivotAbsent(f"no complementary pair on variable {pivot}")
    return Clause((pos - {pivot}) | (neg - {-pivot}))


def negate_clause(c: Iterable[int]) -> Term:
    return Term(-x for x in c)


def negate_term(t: Iterable[int]) -> Clause:
    return Clause(-x for x in t)


def lit_value(lit: int, rho: Assignment) -> bool | None:
    v = rho.get(abs(lit))
    if v is None:
        return None
    return v if lit > 0 else not v


def restrict_clause(c: Clause, rho: Assignment) -> Clause | None:
    """Return ``None`` if ``rho`` satisfies ``c``, else ``c`` minus its falsified literals."""
    keep = []
    for x in c:
        v = lit_value(x, rho)
        if v is True:
            return None
        if v is None:
            keep.append(x)
    return Clause(keep)


def restrict_term(t: Term, rho: Assignment) -> Term | None:
    """Return ``None`` if ``rho`` falsifies ``t``, else ``t`` minus its satisfied literals."""
    keep = []
    for x in t:
        v = lit_value(x, rho)
        if v is False:
            return None
        if v is None:
            keep.append(x)
    return Term(keep)


def assignment_from_literals(lits: Iterable[int]) -> dict[int, bool]:
    """The assignment making every literal in ``lits`` true."""
    rho: dict[int, bool] = {}
    for x in lits:
        if rho.get(abs(x), x > 0) != (x > 0):
            raise ValueError(f"inconsistent literals on variable {abs(x)}")
        rho[abs(x)] = x > 0
    return rho


@dataclass(frozen=True)
class Cnf:
    """A CNF over variables 1..num_vars.  Clause indices are 1-based.

    ``provenance[j-1]`` is the index, in the formula this one was restricted
    from, of clause ``j``; it is empty for formulas built directly.
    """

    num_vars: int
    clauses: tuple[Clause, ...]
    provenance: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(Clause(c) for c in self.clauses))
        for c in self.clauses:
            for x in c:
                if abs(x) > self.num_vars:
                    raise ValueError(f"literal {x} exceeds num_vars={self.num_vars}")

    @classmethod
    def from_lists(cls, clauses: Sequence[Iterable[int]], num_vars: int | None = None) -> Cnf:
        cs = tuple(Clause(c) for c in clauses)
        if num_vars is None:
            num_vars = max((abs(x) for c in cs for x in c), default=0)
        return cls(num_vars, cs)

    @property
    def width(self) -> int:
        return max((len(c) for c in self.clauses), default=0)

    def __len__(self) -> int:
        return len(self.clauses)

    def clause(self, index: int) -> Clause:
        if not 1 <= index <= len(self.clauses):
            raise IndexError(f"clause index {index} out of range 1..{len(self.clauses)}")
        return self.clauses[index - 1]

    def index_of(self, c: Clause) -> int | None:
        """1-based index of the first clause equal to ``c`` as a set."""
        try:
            return self.clauses.index(c) + 1
        except ValueError:
            return None

    def extend(self, *extra: Iterable[int]) -> Cnf:
        new = tuple(Clause(c) for c in extra)
        n = max([self.num_vars] + [abs(x) for c in new for x in c])
        return Cnf(n, self.clauses + new)

    def contains_empty(self) -> bool:
        return EMPTY_CLAUSE in self.clauses


def restrict_cnf(f: Cnf, rho: Assignment) -> Cnf:
    """Apply ``rho``: satisfied clauses are dropped, the rest shrink.

    Empty clauses produced by the restriction are kept.  Variable numbering
    is unchanged; ``provenance`` maps survivors back to ``f``.
    """
    for v in rho:
        if not 1 <= v <= f.num_vars:
            raise ValueError(f"variable {v} outside 1..{f.num_vars}")
    out, prov = [], []
    for i, c in enumerate(f.clauses, 1):
        r = restrict_clause(c, rho)
        if r is not None:
            out.append(r)
            prov.append(i)
    return Cnf(f.num_vars, tuple(out), tuple(prov))
