"""Exhaustive generators of formulas, structures and sequents by size.

Sizes count formula nodes only.  Structural brackets are free, so their
number is bounded separately by ``max_group_pairs``.  Output is ordered by
total size first, so the listing for ``max_size = n`` is a prefix of the
listing for ``n + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .syntax import UNIT, BracketInv, Diamond, Formula, Group, Over, Prod, Sequent, Under, Var

_UNARY = (Diamond, BracketInv)
_BINARY = (Under, Over, Prod)


@dataclass(frozen=True)
class EnumSpec:
    max_size: int
    var_count: int = 1
    allow_unit: bool = False
    allow_brackets: bool = True
    max_group_pairs: int = 0
    allow_empty_groups: bool = True

    def __post_init__(self) -> None:
        if self.max_size < 1 or self.var_count < 0 or self.max_group_pairs < 0:
            raise ValueError(f"bad enumeration bounds: {self}")


@lru_cache(maxsize=None)
def formulas_of_size(n: int, var_count: int, allow_unit: bool, allow_brackets: bool = True) -> tuple[Formula, ...]:
    """All formulas with exactly ``n`` nodes."""
    if n < 1:
        return ()
    if n == 1:
        atoms: list[Formula] = [Var(i) for i in range(1, var_count + 1)]
        if allow_unit:
            atoms.append(UNIT)
        return tuple(atoms)
    out: list[Formula] = []
    if allow_brackets:
        for op in _UNARY:
            out.extend(op(a) for a in formulas_of_size(n - 1, var_count, allow_unit, allow_brackets))
    for op in _BINARY:
        for k in range(1, n - 1):
            lefts = formulas_of_size(k, var_count, allow_unit, allow_brackets)
            rights = formulas_of_size(n - 1 - k, var_count, allow_unit, allow_brackets)
            out.extend(op(a, b) for a, b in product(lefts, rights))
    return tuple(out)


def enumerate_formulas(spec: EnumSpec) -> list[Formula]:
    out: list[Formula] = []
    for n in range(1, spec.max_size + 1):
        out.extend(formulas_of_size(n, spec.var_count, spec.allow_unit, spec.allow_brackets))
    return out


def structures(spec: EnumSpec, formula_size: int, groups: int) -> Iterator[tuple]:
    """Structures whose formulas total exactly ``formula_size`` nodes, with exactly ``groups`` groups."""
    yield from _structures(formula_size, groups, spec.var_count, spec.allow_unit,
                           spec.allow_brackets, spec.allow_empty_groups)


@lru_cache(maxsize=None)
def _structures(n: int, g: int, var_count: int, unit: bool, brackets: bool, empty: bool) -> tuple[tuple, ...]:
    if n == 0 and g == 0:
        return ((),)
    out: list[tuple] = []
    # first item a formula
    for k in range(1, n + 1):
        for f in formulas_of_size(k, var_count, unit, brackets):
            for rest in _structures(n - k, g, var_count, unit, brackets, empty):
                out.append((f,) + rest)
    # first item a group
    for k in range(0, n + 1):
        for h in range(0, g):
            if k == 0 and h == 0 and not empty:
                continue
            for inner in _structures(k, h, var_count, unit, brackets, empty):
                for rest in _structures(n - k, g - 1 - h, var_count, unit, brackets, empty):
                    out.append((Group(inner),) + rest)
    return tuple(out)


def enumerate_structures(spec: EnumSpec) -> list[tuple]:
    out: list[tuple] = []
    for n in range(0, spec.max_size + 1):
        for g in range(spec.max_group_pairs + 1):
            out.extend(structures(spec, n, g))
    return out


def enumerate_sequents(spec: EnumSpec) -> Iterator[Sequent]:
    """All sequents of total size at most ``spec.max_size``, smallest first."""
    for total in range(1, spec.max_size + 1):
        for c in range(1, total + 1):
            succs = formulas_of_size(c, spec.var_count, spec.allow_unit, spec.allow_brackets)
            for g in range(spec.max_group_pairs + 1):
                for ante in structures(spec, total - c, g):
                    for succ in succs:
                        yield Sequent(ante, succ)
