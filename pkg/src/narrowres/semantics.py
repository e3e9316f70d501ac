"""Truth-table semantics over all assignments, vectorised with numpy.

Used as an independent oracle: nothing here shares code with the checker.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .core import Cnf

MAX_VARS = 20


def assignments(n: int) -> np.ndarray:
    """All 2**n assignments as a bool array; column v-1 holds variable v."""
    if n > MAX_VARS:
        raise ValueError(f"{n} variables is too many for a truth table")
    rows = np.arange(2 ** n, dtype=np.int64)[:, None]
    return ((rows >> np.arange(n, dtype=np.int64)) & 1).astype(bool)


def _lit_cols(table: np.ndarray, lits: Iterable[int]) -> np.ndarray:
    lits = list(lits)
    if not lits:
        return np.zeros((table.shape[0], 0), dtype=bool)
    idx = np.array([abs(x) - 1 for x in lits])
    pos = np.array([x > 0 for x in lits])
    return table[:, idx] == pos


def clause_values(table: np.ndarray, clause: Iterable[int]) -> np.ndarray:
    return _lit_cols(table, clause).any(axis=1)


def term_values(table: np.ndarray, term: Iterable[int]) -> np.ndarray:
    return _lit_cols(table, term).all(axis=1)


def dnf_values(table: np.ndarray, line: Iterable[Iterable[int]]) -> np.ndarray:
    out = np.zeros(table.shape[0], dtype=bool)
    for t in line:
        out |= term_values(table, t)
    return out


def cnf_values(table: np.ndarray, f: Cnf) -> np.ndarray:
    out = np.ones(table.shape[0], dtype=bool)
    for c in f.clauses:
        out &= clause_values(table, c)
    return out


def is_satisfiable(f: Cnf) -> bool:
    return bool(cnf_values(assignments(f.num_vars), f).any())


class Models:
    """The models of a CNF, for repeated entailment queries."""

    def __init__(self, f: Cnf, num_vars: int | None = None):
        n = max(f.num_vars, num_vars or 0)
        table = assignments(n)
        self.table = table[cnf_values(table, f)]

    def entails_clause(self, clause: Iterable[int]) -> bool:
        return bool(clause_values(self.table, clause).all())

    def entails_dnf(self, line: Iterable[Iterable[int]]) -> bool:
        return bool(dnf_values(self.table, line).all())
