"""Formulas, bracketed structures, sequents and one-hole contexts.

A structure is a plain tuple of items, where an item is either a formula or a
``Group`` holding a nested structure.  Because comma is associative with the
empty structure as its unit, a flat tuple is already canonical: ``Γ, Λ`` and
``Γ`` are the same tuple, and equality and hashing are purely syntactic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union


_INTERNED: dict[tuple, "_Node"] = {}


class _Node:
    """Immutable, hash-consed tree node.

    Constructing a node equal to an existing one returns the existing object,
    so equality on the hot path of proof search is an identity test.
    """

    __slots__ = ("_hash",)
    __match_args__: tuple[str, ...] = ()

    def __new__(cls, *args, **kwargs):
        if kwargs:
            args = args + tuple(kwargs[n] for n in cls.__match_args__[len(args):])
        if len(args) == len(cls.__match_args__):
            hit = _INTERNED.get((cls, *_normal(args)))
            if hit is not None:
                return hit
        return object.__new__(cls)

    def __post_init__(self) -> None:
        if hasattr(self, "_hash"):
            return  # an interned node coming back through __init__
        fields = tuple(getattr(self, n) for n in self.__match_args__)
        object.__setattr__(self, "_hash", hash((type(self).__name__, *fields)))
        _INTERNED.setdefault((type(self), *fields), self)

    def __reduce__(self):
        return type(self), tuple(getattr(self, n) for n in self.__match_args__)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(self) is not type(other) or self._hash != other._hash:  # type: ignore[attr-defined]
            return False
        return all(getattr(self, n) == getattr(other, n) for n in self.__match_args__)

    def __ne__(self, other: object) -> bool:
        return not self == other


def _normal(args: tuple) -> tuple:
    return tuple(tuple(a) if isinstance(a, list) else a for a in args)


class Formula(_Node):
    __slots__ = ()


@dataclass(frozen=True, slots=True, eq=False)
class Var(Formula):
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"variable index must be positive, got {self.index}")
        _Node.__post_init__(self)


@dataclass(frozen=True, slots=True, eq=False)
class Unit(Formula):
    pass


@dataclass(frozen=True, slots=True, eq=False)
class Under(Formula):
    """``left \\ right``: consumes ``left`` on its left, yields ``right``."""

    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True, eq=False)
class Over(Formula):
    """``left / right``: consumes ``right`` on its right, yields ``left``."""

    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True, eq=False)
class Prod(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True, eq=False)
class Diamond(Formula):
    body: Formula


@dataclass(frozen=True, slots=True, eq=False)
class BracketInv(Formula):
    body: Formula


UNIT = Unit()


@dataclass(frozen=True, slots=True, eq=False)
class Group(_Node):
    """A bracketed sub-structure ``[ ... ]``; may be empty."""

    items: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", tuple(self.items))
        _Node.__post_init__(self)


Item = Union[Formula, Group]
Structure = tuple  # tuple[Item, ...]; () is the empty structure


@dataclass(frozen=True, slots=True)
class Sequent:
    antecedent: Structure
    succedent: Formula

    def __post_init__(self) -> None:
        object.__setattr__(self, "antecedent", tuple(self.antecedent))


class _HoleType:
    __slots__ = ()

    def __repr__(self) -> str:
        return "HOLE"


HOLE = _HoleType()


@dataclass(frozen=True, slots=True)
class Context:
    """A structure with exactly one ``HOLE`` item, possibly nested in groups."""

    items: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", tuple(self.items))
        if _count_holes(self.items) != 1:
            raise ValueError("a context must contain exactly one hole")


def _count_holes(items: tuple) -> int:
    n = 0
    for it in items:
        if it is HOLE:
            n += 1
        elif isinstance(it, Group):
            n += _count_holes(it.items)
    return n


# -- measures ---------------------------------------------------------------


def size(f: Formula) -> int:
    """Number of atom and connective occurrences in ``f``."""
    match f:
        case Var() | Unit():
            return 1
        case Under(a, b) | Over(a, b) | Prod(a, b):
            return 1 + size(a) + size(b)
        case Diamond(a) | BracketInv(a):
            return 1 + size(a)
    raise TypeError(f"not a formula: {f!r}")


def modality_depth(f: Formula) -> int:
    match f:
        case Var() | Unit():
            return 0
        case Under(a, b) | Over(a, b) | Prod(a, b):
            return max(modality_depth(a), modality_depth(b))
        case Diamond(a) | BracketInv(a):
            return 1 + modality_depth(a)
    raise TypeError(f"not a formula: {f!r}")


def structure_size(s: Structure) -> int:
    return sum(size(f) for f in yield_of(s))


def sequent_size(s: Sequent) -> int:
    return structure_size(s.antecedent) + size(s.succedent)


def group_count(s: Structure) -> int:
    n = 0
    for it in s:
        if isinstance(it, Group):
            n += 1 + group_count(it.items)
    return n


def yield_of(s: Structure) -> tuple[Formula, ...]:
    """The formulas of ``s`` in order, with all brackets erased."""
    out: list[Formula] = []

    def walk(items: tuple) -> None:
        for it in items:
            if isinstance(it, Group):
                walk(it.items)
            else:
                out.append(it)

    walk(s)
    return tuple(out)


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    match f:
        case Under(a, b) | Over(a, b) | Prod(a, b):
            yield from subformulas(a)
            yield from subformulas(b)
        case Diamond(a) | BracketInv(a):
            yield from subformulas(a)


def variables(x: Formula | Structure | Sequent) -> set[int]:
    if isinstance(x, Sequent):
        return variables(x.antecedent) | variables(x.succedent)
    if isinstance(x, Formula):
        return {g.index for g in subformulas(x) if isinstance(g, Var)}
    out: set[int] = set()
    for f in yield_of(x):
        out |= variables(f)
    return out


def has_unit(x: Formula | Structure | Sequent) -> bool:
    if isinstance(x, Sequent):
        return has_unit(x.antecedent) or has_unit(x.succedent)
    if isinstance(x, Formula):
        return _formula_has_unit(x)
    return any(_formula_has_unit(f) for f in yield_of(x))


@lru_cache(maxsize=None)
def _formula_has_unit(f: Formula) -> bool:
    return any(isinstance(g, Unit) for g in subformulas(f))


# -- contexts ---------------------------------------------------------------


def plug(c: Context, s: Structure) -> Structure:
    """Replace the hole of ``c`` by the items of ``s``; plugging ``()`` closes the gap."""
    return _plug(c.items, tuple(s))


def _plug(items: tuple, s: tuple) -> tuple:
    out: list = []
    for it in items:
        if it is HOLE:
            out.extend(s)
        elif isinstance(it, Group):
            out.append(Group(_plug(it.items, s)))
        else:
            out.append(it)
    return tuple(out)


def occurrences(s: Structure) -> list[tuple[Context, Item]]:
    """Every split of ``s`` into a context and a single item, leftmost-outermost first."""
    found: list[tuple[Context, Item]] = []

    def walk(items: tuple, wrap) -> None:
        for j, it in enumerate(items):
            found.append((Context(wrap(items[:j] + (HOLE,) + items[j + 1:])), it))
            if isinstance(it, Group):
                walk(it.items, lambda inner, j=j, items=items, wrap=wrap:
                     wrap(items[:j] + (Group(inner),) + items[j + 1:]))

    walk(tuple(s), lambda inner: inner)
    return found
