from functools import lru_cache

import pytest

from lambek_brackets.enumeration import (
    EnumSpec, enumerate_formulas, enumerate_sequents, enumerate_structures,
)
from lambek_brackets.syntax import UNIT, Group, Sequent, Var, group_count, sequent_size, size
from lambek_brackets.textio import format_sequent, parse_sequent


# independent counters: trees by node count, structures as sequences of items


def formula_count(n, var_count, unit, brackets=True):
    @lru_cache(maxsize=None)
    def f(n):
        if n == 1:
            return var_count + unit
        total = 3 * sum(f(k) * f(n - 1 - k) for k in range(1, n - 1))
        return total + (2 * f(n - 1) if brackets else 0)
    return f(n)


def structure_count(n, g, var_count, unit, empty=True):
    @lru_cache(maxsize=None)
    def item(n, g):
        if g == 0:
            return formula_count(n, var_count, unit) if n >= 1 else 0
        if n == 0 and g == 1 and not empty:
            return 0
        return seq(n, g - 1)

    @lru_cache(maxsize=None)
    def seq(n, g):
        if n == 0 and g == 0:
            return 1
        return sum(item(k, h) * seq(n - k, g - h)
                   for k in range(n + 1) for h in range(g + 1) if (k, h) != (0, 0))
    return seq(n, g)


def sequent_count(max_size, var_count, unit, groups):
    return sum(formula_count(c, var_count, unit) * structure_count(t - c, g, var_count, unit)
               for t in range(1, max_size + 1) for c in range(1, t + 1) for g in range(groups + 1))


def test_formula_examples():
    assert enumerate_formulas(EnumSpec(1)) == [Var(1)]
    assert enumerate_formulas(EnumSpec(1, allow_unit=True)) == [Var(1), UNIT]
    # p1; <>p1, []^-1 p1; two unary-unary and three binary shapes at size 3
    assert len(enumerate_formulas(EnumSpec(3))) == 10 == sum(formula_count(n, 1, False) for n in (1, 2, 3))


@pytest.mark.parametrize("max_size, var_count, unit, brackets", [
    (5, 1, False, True), (5, 2, True, True), (6, 1, True, True), (5, 2, False, False),
])
def test_formula_counts(max_size, var_count, unit, brackets):
    fs = enumerate_formulas(EnumSpec(max_size, var_count, unit, brackets))
    assert len(fs) == sum(formula_count(n, var_count, unit, brackets) for n in range(1, max_size + 1))
    assert len(set(fs)) == len(fs)
    assert all(size(f) <= max_size for f in fs)


@pytest.mark.parametrize("max_size, var_count, unit, groups", [
    (4, 1, False, 0), (4, 1, True, 2), (4, 2, True, 1), (5, 1, True, 2), (3, 2, False, 3),
])
def test_sequent_counts(max_size, var_count, unit, groups):
    seqs = list(enumerate_sequents(EnumSpec(max_size, var_count, unit, True, groups)))
    assert len(seqs) == sequent_count(max_size, var_count, unit, groups)
    assert len(set(seqs)) == len(seqs)
    for s in seqs:
        assert sequent_size(s) <= max_size and group_count(s.antecedent) <= groups


def test_known_totals():
    totals = [sum(1 for _ in enumerate_sequents(EnumSpec(n, 1, True, True, 2))) for n in (2, 3, 4)]
    assert totals == [80, 680, 5448]


def test_small_sequents_present():
    seqs = set(enumerate_sequents(EnumSpec(2, 1, False, False, 0)))
    p1 = Var(1)
    assert Sequent((p1,), p1) in seqs
    for f in enumerate_formulas(EnumSpec(2, 1, False, False)):
        assert Sequent((), f) in seqs


@pytest.mark.parametrize("unit", [False, True])
def test_unit_goal_iff_allowed(unit):
    seqs = set(enumerate_sequents(EnumSpec(3, 1, unit, True, 1)))
    assert (Sequent((), UNIT) in seqs) is unit


def test_prefix_monotone():
    small = list(enumerate_sequents(EnumSpec(4, 1, True, True, 2)))
    big = list(enumerate_sequents(EnumSpec(5, 1, True, True, 2)))
    assert big[:len(small)] == small
    fs, gs = enumerate_formulas(EnumSpec(4, 2, True)), enumerate_formulas(EnumSpec(5, 2, True))
    assert gs[:len(fs)] == fs


def test_empty_groups_flag():
    with_empty = enumerate_structures(EnumSpec(1, 1, False, True, 1))
    without = enumerate_structures(EnumSpec(1, 1, False, True, 1, allow_empty_groups=False))
    assert (Group(()),) in with_empty and (Group(()),) not in without
    assert len(with_empty) == structure_count(0, 0, 1, 0) + structure_count(0, 1, 1, 0) \
        + structure_count(1, 0, 1, 0) + structure_count(1, 1, 1, 0)


def test_enumerated_sequents_round_trip():
    for s in enumerate_sequents(EnumSpec(4, 2, True, True, 2)):
        assert parse_sequent(format_sequent(s)) == s


def test_bad_spec():
    with pytest.raises(ValueError):
        EnumSpec(0)
