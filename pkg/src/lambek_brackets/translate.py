"""Elimination of the unit constant.

Every ``1`` becomes ``q\\q`` for a variable ``q`` that does not occur in the
input.  The positive translation additionally pads each variable and each
``<>`` with ``q\\q`` on both sides, and the negative translation pads each
``[]^-1`` with ``q\\q`` arguments on both sides, so that surplus units can be
absorbed wherever they may appear in a derivation.
"""

from __future__ import annotations

from .syntax import (
    UNIT, BracketInv, Diamond, Formula, Group, Over, Prod, Sequent, Structure,
    Under, Unit, Var, variables,
)


class NotFresh(ValueError):
    pass


def _qq(q: int) -> Formula:
    return Under(Var(q), Var(q))


def _pad(f: Formula, q: int) -> Formula:
    return Prod(Prod(_qq(q), f), _qq(q))


def _require_fresh(x, q: int) -> None:
    if q in variables(x):
        raise NotFresh(f"p{q} occurs in the input and cannot serve as q")


def tau_plus(a: Formula, q: int) -> Formula:
    """Translation of a formula in positive position (succedent)."""
    _require_fresh(a, q)
    return _plus(a, q)


def tau_minus(a: Formula, q: int) -> Formula:
    """Translation of a formula in negative position (antecedent)."""
    _require_fresh(a, q)
    return _minus(a, q)


def _plus(a: Formula, q: int) -> Formula:
    match a:
        case Unit():
            return _qq(q)
        case Var():
            return _pad(a, q)
        case Under(x, y):
            return Under(_minus(x, q), _plus(y, q))
        case Over(y, x):
            return Over(_plus(y, q), _minus(x, q))
        case Prod(x, y):
            return Prod(_plus(x, q), _plus(y, q))
        case Diamond(x):
            return _pad(Diamond(_plus(x, q)), q)
        case BracketInv(x):
            return BracketInv(_plus(x, q))
    raise TypeError(f"not a formula: {a!r}")


def _minus(a: Formula, q: int) -> Formula:
    match a:
        case Unit():
            return _qq(q)
        case Var():
            return a
        case Under(x, y):
            return Under(_plus(x, q), _minus(y, q))
        case Over(y, x):
            return Over(_minus(y, q), _plus(x, q))
        case Prod(x, y):
            return Prod(_minus(x, q), _minus(y, q))
        case Diamond(x):
            return Diamond(_minus(x, q))
        case BracketInv(x):
            return Over(Under(_qq(q), BracketInv(_minus(x, q))), _qq(q))
    raise TypeError(f"not a formula: {a!r}")


def tau_minus_structure(s: Structure, q: int) -> Structure:
    _require_fresh(s, q)
    return _minus_structure(s, q)


def _minus_structure(s: Structure, q: int) -> Structure:
    return tuple(
        Group(_minus_structure(it.items, q)) if isinstance(it, Group) else _minus(it, q)
        for it in s
    )


def fresh_q(s: Sequent) -> int:
    """Smallest variable index not occurring in ``s``."""
    used = variables(s)
    q = 1
    while q in used:
        q += 1
    return q


def translate_sequent(s: Sequent) -> tuple[Sequent, int]:
    q = fresh_q(s)
    return Sequent(_minus_structure(s.antecedent, q), _plus(s.succedent, q)), q


def substitute_unit_for_var(x, q: int):
    """Replace every ``p<q>`` by ``1`` in a formula, structure or sequent."""
    if isinstance(x, Sequent):
        return Sequent(substitute_unit_for_var(x.antecedent, q), substitute_unit_for_var(x.succedent, q))
    if isinstance(x, tuple):
        return tuple(
            Group(substitute_unit_for_var(it.items, q)) if isinstance(it, Group)
            else substitute_unit_for_var(it, q)
            for it in x
        )
    match x:
        case Var(n):
            return UNIT if n == q else x
        case Unit():
            return x
        case Under(a, b):
            return Under(substitute_unit_for_var(a, q), substitute_unit_for_var(b, q))
        case Over(a, b):
            return Over(substitute_unit_for_var(a, q), substitute_unit_for_var(b, q))
        case Prod(a, b):
            return Prod(substitute_unit_for_var(a, q), substitute_unit_for_var(b, q))
        case Diamond(a):
            return Diamond(substitute_unit_for_var(a, q))
        case BracketInv(a):
            return BracketInv(substitute_unit_for_var(a, q))
    raise TypeError(f"cannot substitute into {x!r}")
