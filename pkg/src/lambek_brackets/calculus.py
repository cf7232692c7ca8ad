"""Backward rule tables for Lb*, Lb*1 and the primed variant Lb*1'.

``backward_steps`` lists every rule instance whose conclusion is a given
sequent.  Both the prover and the derivation checker read from this single
table.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator

from .syntax import (
    BracketInv, Context, Diamond, Group, Over, Prod, Sequent,
    Under, Unit, Var, has_unit, plug,
)


class Calculus(Enum):
    LBSTAR = "lbstar"
    LBSTAR1 = "lbstar1"
    LBSTAR1_PRIMED = "lbstar1p"


class Rule(Enum):
    Ax = "ax"
    UnderL = "\\->"
    UnderR = "->\\"
    OverL = "/->"
    OverR = "->/"
    ProdL = "*->"
    ProdR = "->*"
    DiamondL = "<>->"
    DiamondR = "-><>"
    BracketInvL = "[]^-1->"
    BracketInvR = "->[]^-1"
    UnitL = "1->"
    UnitR = "->1"
    AxP = "ax'"
    UnitRP = "->1'"
    DiamondRP = "-><>'"
    BracketInvLP = "[]^-1->'"

    def __repr__(self) -> str:
        return self.name


BRACKET_RULES = frozenset({
    Rule.DiamondL, Rule.DiamondR, Rule.BracketInvL, Rule.BracketInvR,
    Rule.DiamondRP, Rule.BracketInvLP,
})


class InvalidInput(ValueError):
    pass


class InvalidCut(ValueError):
    pass


@dataclass(frozen=True)
class Derivation:
    rule: Rule
    conclusion: Sequent
    premises: tuple["Derivation", ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "premises", tuple(self.premises))

    def rules_used(self) -> set[Rule]:
        out = {self.rule}
        for p in self.premises:
            out |= p.rules_used()
        return out

    def height(self) -> int:
        return 1 + max((p.height() for p in self.premises), default=0)


Step = tuple[Rule, tuple[Sequent, ...]]
_Rebuild = Callable[[tuple], tuple]


def _levels(items: tuple, rebuild: _Rebuild) -> Iterator[tuple[tuple, _Rebuild]]:
    # each sequence level of a structure, outer before inner, left to right
    yield items, rebuild
    for j, it in enumerate(items):
        if isinstance(it, Group):
            def inner(new: tuple, j: int = j, items: tuple = items, rebuild: _Rebuild = rebuild) -> tuple:
                return rebuild(items[:j] + (Group(new),) + items[j + 1:])
            yield from _levels(it.items, inner)


def _identity(items: tuple) -> tuple:
    return items


def _units_only(items: tuple) -> bool:
    return all(isinstance(it, Unit) for it in items)


def _split_units(items: tuple, is_core: Callable[[object], bool]) -> object | None:
    """Return the single item matching ``is_core`` if all other items are units."""
    core = None
    for it in items:
        if isinstance(it, Unit):
            continue
        if core is not None or not is_core(it):
            return None
        core = it
    return core


def check_input(goal: Sequent, cal: Calculus) -> None:
    if cal is Calculus.LBSTAR and has_unit(goal):
        raise InvalidInput("the unit constant does not belong to Lb*")


def backward_steps(goal: Sequent, cal: Calculus) -> list[Step]:
    check_input(goal, cal)
    return _steps(goal, cal)


def _steps(goal: Sequent, cal: Calculus) -> list[Step]:
    return list(dict.fromkeys(iter_steps(goal, cal)))


def iter_steps(goal: Sequent, cal: Calculus) -> Iterator[Step]:
    """The backward rule instances for ``goal``, lazily and possibly repeated."""
    primed = cal is Calculus.LBSTAR1_PRIMED
    ante, succ = goal.antecedent, goal.succedent

    # axioms
    if isinstance(succ, Var):
        if primed:
            if _split_units(ante, lambda it: it == succ) is not None:
                yield Rule.AxP, ()
        elif ante == (succ,):
            yield Rule.Ax, ()
    elif isinstance(succ, Unit):
        if primed:
            if _units_only(ante):
                yield Rule.UnitRP, ()
        elif cal is Calculus.LBSTAR1 and not ante:
            yield Rule.UnitR, ()

    # right rules
    match succ:
        case Under(a, b):
            yield Rule.UnderR, (Sequent((a,) + ante, b),)
        case Over(b, a):
            yield Rule.OverR, (Sequent(ante + (a,), b),)
        case Prod(a, b):
            for i in range(len(ante) + 1):
                yield Rule.ProdR, (Sequent(ante[:i], a), Sequent(ante[i:], b))
        case Diamond(a):
            if primed:
                g = _split_units(ante, lambda it: isinstance(it, Group))
                if g is not None:
                    yield Rule.DiamondRP, (Sequent(g.items, a),)
            elif len(ante) == 1 and isinstance(ante[0], Group):
                yield Rule.DiamondR, (Sequent(ante[0].items, a),)
        case BracketInv(a):
            yield Rule.BracketInvR, (Sequent((Group(ante),), a),)

    # left rules, by occurrence
    for items, rebuild in _levels(ante, _identity):
        for j, it in enumerate(items):
            match it:
                case Under(a, b):
                    rest = items[j + 1:]
                    for i in range(j, -1, -1):
                        yield Rule.UnderL, (
                            Sequent(items[i:j], a),
                            Sequent(rebuild(items[:i] + (b,) + rest), succ),
                        )
                case Over(b, a):
                    head = items[:j]
                    for k in range(j + 1, len(items) + 1):
                        yield Rule.OverL, (
                            Sequent(items[j + 1:k], a),
                            Sequent(rebuild(head + (b,) + items[k:]), succ),
                        )
                case Prod(a, b):
                    yield Rule.ProdL, (
                        Sequent(rebuild(items[:j] + (a, b) + items[j + 1:]), succ),)
                case Diamond(a):
                    yield Rule.DiamondL, (
                        Sequent(rebuild(items[:j] + (Group((a,)),) + items[j + 1:]), succ),)
                case Unit():
                    if cal is Calculus.LBSTAR1:
                        yield Rule.UnitL, (
                            Sequent(rebuild(items[:j] + items[j + 1:]), succ),)
                case Group(inner):
                    if primed:
                        core = _split_units(inner, lambda x: isinstance(x, BracketInv))
                        rule = Rule.BracketInvLP
                    else:
                        core = inner[0] if len(inner) == 1 and isinstance(inner[0], BracketInv) else None
                        rule = Rule.BracketInvL
                    if core is not None:
                        yield rule, (
                            Sequent(rebuild(items[:j] + (core.body,) + items[j + 1:]), succ),)


def check_derivation(d: Derivation, cal: Calculus) -> bool:
    """True iff every node of ``d`` is a legal rule instance of ``cal``."""
    if cal is Calculus.LBSTAR and has_unit(d.conclusion):
        return False
    step = (d.rule, tuple(p.conclusion for p in d.premises))
    if step not in _steps(d.conclusion, cal):
        return False
    return all(check_derivation(p, cal) for p in d.premises)


def cut_compose(left: Sequent, right: Sequent, occ: Context) -> Sequent:
    """Conclusion of a cut of ``left = Π -> A`` into ``right = Δ(A) -> C`` at ``occ``."""
    if plug(occ, (left.succedent,)) != right.antecedent:
        raise InvalidCut("the cut formula does not occur at the designated position")
    return Sequent(plug(occ, left.antecedent), right.succedent)
