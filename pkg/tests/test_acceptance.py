"""Acceptance criteria 1-10, one test each.

Every test prints a single PASS/FAIL line with the number of checked
instances.  Run ``pytest tests/test_acceptance.py -v`` to see them, or run
this file directly.
"""

import time

import pytest

from lambek_brackets import verify
from lambek_brackets.calculus import Calculus, Derivation, Rule, check_derivation
from lambek_brackets.prover import Prover
from lambek_brackets.syntax import (
    UNIT, BracketInv, Diamond, Group, Over, Prod, Sequent, Under, Var,
)
from lambek_brackets.translate import tau_minus, tau_plus

LB, LB1, LB1P = Calculus.LBSTAR, Calculus.LBSTAR1, Calculus.LBSTAR1_PRIMED


@pytest.fixture(scope="module")
def prover():
    return Prover()


@pytest.fixture
def report(capsys):
    def emit(number, result, started):
        line = f"criterion {number}: {result.summary()} [{time.perf_counter() - started:.1f}s]"
        with capsys.disabled():
            print("\n" + line)
        assert result.passed, line
    return emit


def test_criterion_01_theorem1(prover, report):
    t = time.perf_counter()
    report(1, verify.theorem1(6, prover, max_groups=2), t)


def test_criterion_02_lemma1(prover, report):
    t = time.perf_counter()
    report(2, verify.lemma1(6, prover, max_groups=2), t)


def test_criterion_03_unit_left_admissible(prover, report):
    t = time.perf_counter()
    report(3, verify.unit_left_admissible(5, prover), t)


def test_criterion_04_conservativity(prover, report):
    t = time.perf_counter()
    report(4, verify.conservativity(6, prover), t)


def test_criterion_05_cut(prover, report):
    t = time.perf_counter()
    res = verify.cut_admissible(4, prover, LB1, var_count=1, max_groups=2)
    more = verify.cut_admissible(4, prover, LB, var_count=2, max_groups=2)
    res.name = "cut admissibility (lbstar1 one variable, lbstar two variables; size <= 4)"
    res.checked += more.checked
    res.failures += more.failures
    report(5, res, t)


def test_criterion_06_round_trip(prover, report):
    t = time.perf_counter()
    report(6, verify.round_trip(4, prover), t)


def test_criterion_07_linear_bounds(report):
    t = time.perf_counter()
    report(7, verify.linear_bounds(6), t)


def test_criterion_08_theorem2_pocket(report):
    t = time.perf_counter()
    report(8, verify.theorem2_pocket(), t)


# -- criterion 9 ---------------------------------------------------------------

Q = Var(2)
QQ = Under(Q, Q)
P = Var(1)


def _pad(f):
    return Prod(Prod(QQ, f), QQ)


def _checked(rule, conclusion, *premises):
    return Derivation(rule, conclusion, tuple(premises))


def _leaf(prover, sequent, cal=LB):
    d = prover.prove(sequent, cal)
    assert d is not None, sequent
    return d


def diamond_case(prover, k=2, m=1):
    """(qq)^k, [τ⁻Π], (qq)^m -> qq * <>τ⁺A * qq by two product-right steps over <>-right."""
    pi, a = (P,), P
    inner = Sequent(pi, tau_plus(a, 2))
    boxed = _checked(Rule.DiamondR, Sequent((Group(pi),), Diamond(tau_plus(a, 2))), _leaf(prover, inner))
    left = _leaf(prover, Sequent((QQ,) * k, QQ))
    right = _leaf(prover, Sequent((QQ,) * m, QQ))
    mid = _checked(Rule.ProdR, Sequent((QQ,) * k + (Group(pi),), Prod(QQ, Diamond(tau_plus(a, 2)))),
                   left, boxed)
    root = Sequent((QQ,) * k + (Group(pi),) + (QQ,) * m, _pad(Diamond(tau_plus(a, 2))))
    assert root.succedent == tau_plus(Diamond(a), 2)
    return _checked(Rule.ProdR, root, mid, right)


def bracket_case(prover, k=2, m=1):
    """[(qq)^k, τ⁻([]^-1 B), (qq)^m] -> C by /-left, then \\-left, then []^-1-left."""
    b, c = P, P
    f = tau_minus(BracketInv(b), 2)
    assert f == Over(Under(QQ, BracketInv(b)), QQ)
    core = _checked(Rule.BracketInvL, Sequent((Group((BracketInv(b),)),), c), _leaf(prover, Sequent((b,), c)))
    under = _checked(Rule.UnderL, Sequent((Group((QQ,) * k + (Under(QQ, BracketInv(b)),)),), c),
                     _leaf(prover, Sequent((QQ,) * k, QQ)), core)
    return _checked(Rule.OverL, Sequent((Group((QQ,) * k + (f,) + (QQ,) * m),), c),
                    _leaf(prover, Sequent((QQ,) * m, QQ)), under)


def display_regressions(prover):
    res = verify.SuiteResult("displayed derivations and unit-absorption sequents")
    ranges = (0, 1, 2)
    goals = [(Sequent((QQ,) * k, QQ), LB) for k in (0, 1, 2, 3)]
    goals += [(Sequent((QQ,) * k + (P,) + (QQ,) * m, _pad(P)), LB) for k in ranges for m in ranges]
    goals += [(Sequent((UNIT,) * k, UNIT), LB1P) for k in (0, 1, 2, 3)]
    goals += [(Sequent((UNIT,) * k + (P,) + (UNIT,) * m, P), LB1P) for k in ranges for m in ranges]
    for goal, cal in goals:
        res.checked += 1
        if not prover.derivable(goal, cal):
            res.fail(f"{goal} in {cal.value}")
    for build in (diamond_case, bracket_case):
        for k in ranges:
            for m in ranges:
                res.checked += 1
                if not check_derivation(build(prover, k, m), LB):
                    res.fail(f"{build.__name__} k={k} m={m}")
    return res


def test_criterion_09_display_regressions(prover, report):
    t = time.perf_counter()
    report(9, display_regressions(prover), t)


def test_criterion_10_parser_round_trip(report):
    t = time.perf_counter()
    report(10, verify.parser_round_trip(6), t)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-v"]))
