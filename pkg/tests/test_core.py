import itertools

import pytest
from hypothesis import given, strategies as st

from narrowres.core import (
    Clause, Cnf, PivotAbsent, PivotBothPolarities, Term, assignment_from_literals,
    negate_clause, negate_term, resolve, restrict_clause, restrict_cnf, restrict_term,
)

literals = st.integers(1, 6).flatmap(lambda v: st.sampled_from([v, -v]))
lit_sets = st.frozensets(literals, max_size=6)
assignments = st.dictionaries(st.integers(1, 6), st.booleans())


def holds(lit, total):
    return total[abs(lit)] == (lit > 0)


def completions(rho, n=6):
    free = [v for v in range(1, n + 1) if v not in rho]
    for bits in itertools.product([False, True], repeat=len(free)):
        yield {**rho, **dict(zip(free, bits))}


@pytest.mark.parametrize("a, b, pivot, expected", [
    ([1, 2], [-1, 3], 1, [2, 3]),
    ([1], [-1], 1, []),
    ([1, 2], [-1, 2], 1, [2]),
    ([-1, 3], [1, 2], 1, [2, 3]),
])
def test_resolve_examples(a, b, pivot, expected):
    assert resolve(Clause(a), Clause(b), pivot) == Clause(expected)


def test_resolve_errors():
    with pytest.raises(PivotAbsent):
        resolve(Clause([1, 2]), Clause([2]), 1)
    with pytest.raises(PivotAbsent):
        resolve(Clause([1]), Clause([1]), 1)
    with pytest.raises(PivotBothPolarities):
        resolve(Clause([1, -1]), Clause([-1]), 1)


def test_zero_is_not_a_literal():
    with pytest.raises(ValueError):
        Clause([0])


def test_flags_and_canonical_order():
    assert Clause([1, -1]).is_tautology
    assert not Clause([1, 2]).is_tautology
    assert Term([2, -2]).is_contradictory
    assert Clause([3, -1, 1, 2]).literals == (-1, 1, 2, 3)
    assert Clause() == Clause([]) and len(Clause()) == 0


@pytest.mark.parametrize("c, rho, expected", [
    ([1, 2], {1: False}, [2]),
    ([1, 2], {1: True}, None),
    ([1], {1: False}, []),
])
def test_restrict_clause_examples(c, rho, expected):
    r = restrict_clause(Clause(c), rho)
    assert r == (None if expected is None else Clause(expected))


@pytest.mark.parametrize("t, rho, expected", [
    ([-1], {1: True}, None),
    ([1, 2], {1: True}, [2]),
    ([1], {1: True}, []),
])
def test_restrict_term_examples(t, rho, expected):
    r = restrict_term(Term(t), rho)
    assert r == (None if expected is None else Term(expected))


def test_negation_examples():
    assert negate_clause(Clause([1, -2])) == Term([-1, 2])
    assert negate_clause(Clause()) == Term()
    assert negate_term(negate_clause(Clause([3]))) == Clause([3])


def test_restrict_cnf_examples():
    g = restrict_cnf(Cnf.from_lists([[1], [-1]]), {1: True})
    assert g.clauses == (Clause(),) and g.provenance == (2,)
    assert restrict_cnf(Cnf.from_lists([[1, 2], [-1, 2]]), {2: True}).clauses == ()
    g = restrict_cnf(Cnf.from_lists([[1, 2], [-1, 3]]), {1: False})
    assert g.clauses == (Clause([2]),) and g.provenance == (1,)


def test_cnf_width_and_bounds():
    f = Cnf.from_lists([[1, -2, 3], [2]])
    assert f.width == 3 and f.num_vars == 3
    with pytest.raises(ValueError):
        Cnf(2, (Clause([3]),))
    with pytest.raises(ValueError):
        restrict_cnf(f, {4: True})


def test_assignment_from_literals():
    assert assignment_from_literals([1, -2]) == {1: True, 2: False}
    with pytest.raises(ValueError):
        assignment_from_literals([1, -1])


@given(lit_sets, lit_sets, st.integers(1, 6))
def test_resolve_is_sound(a, b, v):
    a, b = Clause((a | {v}) - {-v}), Clause((b | {-v}) - {v})
    r = resolve(a, b, v)
    for total in completions({}):
        if any(holds(x, total) for x in a) and any(holds(x, total) for x in b):
            assert any(holds(x, total) for x in r)


@given(lit_sets)
def test_negation_is_an_involution(s):
    assert negate_term(negate_clause(Clause(s))) == Clause(s)
    assert negate_clause(negate_term(Term(s))) == Term(s)


@given(lit_sets, assignments)
def test_restrict_clause_matches_truth_table(c, rho):
    c = Clause(c)
    r = restrict_clause(c, rho)
    for total in completions(rho):
        value = any(holds(x, total) for x in c)
        if r is None:
            assert value
        else:
            assert value == any(holds(x, total) for x in r)
            assert all(abs(x) not in rho for x in r)


@given(lit_sets, assignments)
def test_restrict_term_matches_truth_table(t, rho):
    t = Term(t)
    r = restrict_term(t, rho)
    for total in completions(rho):
        value = all(holds(x, total) for x in t)
        if r is None:
            assert not value
        else:
            assert value == all(holds(x, total) for x in r)


@given(st.lists(literals, max_size=8))
def test_literal_sets_never_hold_duplicates(lits):
    c = Clause(lits)
    assert len(c.literals) == len(set(lits))
    assert Clause(c.literals) == c
