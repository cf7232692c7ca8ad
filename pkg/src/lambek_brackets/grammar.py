"""Categorial grammars with s-acceptance and t-acceptance.

A word is s-accepted when the bare sequence of its lexical types derives the
target, and t-accepted when some bracketing of that sequence does.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Iterator, Sequence

from .calculus import Calculus
from .prover import Prover, session
from .syntax import (
    BracketInv, Diamond, Formula, Group, Over, Prod, Sequent, Structure, Under,
    subformulas, variables,
)
from .textio import format_formula, parse_formula
from .translate import tau_minus, tau_plus


class UnknownSymbol(ValueError):
    pass


@dataclass(frozen=True)
class Grammar:
    alphabet: tuple[str, ...]
    lexicon: tuple[tuple[str, Formula], ...]
    target: Formula
    calculus: Calculus = Calculus.LBSTAR1

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "lexicon", tuple((a, f) for a, f in self.lexicon))
        for a, _ in self.lexicon:
            if a not in self.alphabet:
                raise UnknownSymbol(f"lexicon symbol {a!r} is not in the alphabet")

    def types_of(self, symbol: str) -> tuple[Formula, ...]:
        if symbol not in self.alphabet:
            raise UnknownSymbol(f"symbol {symbol!r} is not in the alphabet")
        return tuple(f for a, f in self.lexicon if a == symbol)

    def choices(self, word: Sequence[str]) -> Iterator[tuple[Formula, ...]]:
        """Every assignment of lexical types to the letters of ``word``."""
        yield from product(*(self.types_of(a) for a in word))


@dataclass(frozen=True)
class BracketBudget:
    max_pairs: int
    allow_empty_groups: bool = False


def modality_count(fs: Sequence[Formula]) -> int:
    return sum(_modalities(f) for f in fs)


@lru_cache(maxsize=None)
def _modalities(f: Formula) -> int:
    return sum(isinstance(g, (Diamond, BracketInv)) for g in subformulas(f))


def default_budget(types: Sequence[Formula], target: Formula) -> BracketBudget:
    return BracketBudget(modality_count([*types, target]))


@lru_cache(maxsize=None)
def _modal_balance(f: Formula) -> int:
    # <> counts +1, []^-1 counts -1; signs flip in the argument of a division
    match f:
        case Diamond(a):
            return _modal_balance(a) + 1
        case BracketInv(a):
            return _modal_balance(a) - 1
        case Under(a, b) | Over(b, a):
            return _modal_balance(b) - _modal_balance(a)
        case Prod(a, b):
            return _modal_balance(a) + _modal_balance(b)
    return 0


def _bracketings(formulas: tuple, groups: int, empty: bool) -> Iterator[Structure]:
    """Structures over ``formulas`` with exactly ``groups`` groups."""
    if not formulas and groups == 0:
        yield ()
        return
    if formulas:
        for rest in _bracketings(formulas[1:], groups, empty):
            yield (formulas[0],) + rest
    # first item is a group covering formulas[:j]
    for j in range(0 if empty else 1, len(formulas) + 1):
        for inner_groups in range(groups):
            if j == 0 and inner_groups == 0 and not empty:
                continue
            for inner in _bracketings(formulas[:j], inner_groups, empty):
                for rest in _bracketings(formulas[j:], groups - 1 - inner_groups, empty):
                    yield (Group(inner),) + rest


@lru_cache(maxsize=4096)
def _bracketings_cached(formulas: tuple, groups: int, empty: bool) -> tuple[Structure, ...]:
    return tuple(_bracketings(formulas, groups, empty))


def enumerate_bracketings(formulas: Sequence[Formula], budget: BracketBudget) -> list[Structure]:
    fs = tuple(formulas)
    out: list[Structure] = []
    for g in range(budget.max_pairs + 1):
        out.extend(_bracketings(fs, g, budget.allow_empty_groups))
    return out


def s_accepts(g: Grammar, word: Sequence[str], prover: Prover | None = None) -> bool:
    prover = prover or session()
    return any(prover.derivable(Sequent(types, g.target), g.calculus) for types in g.choices(word))


def t_accepts(g: Grammar, word: Sequence[str], budget: BracketBudget | None = None,
              prover: Prover | None = None) -> bool:
    prover = prover or session()
    for types in g.choices(word):
        b = budget or default_budget(types, g.target)
        # a derivable antecedent has exactly this many groups (see prover docs)
        need = _modal_balance(g.target) - sum(_modal_balance(f) for f in types)
        if not 0 <= need <= b.max_pairs:
            continue
        for pi in _bracketings_cached(types, need, b.allow_empty_groups):
            if prover.derivable(Sequent(pi, g.target), g.calculus):
                return True
    return False


def translate_grammar(g: Grammar) -> Grammar:
    """The unit-free grammar: negative translation on the lexicon, positive on the target."""
    if g.calculus is not Calculus.LBSTAR1:
        raise ValueError("only Lb*1 grammars are translated")
    used = variables(g.target)
    for _, f in g.lexicon:
        used |= variables(f)
    q = 1
    while q in used:
        q += 1
    return Grammar(
        g.alphabet,
        tuple((a, tau_minus(f, q)) for a, f in g.lexicon),
        tau_plus(g.target, q),
        Calculus.LBSTAR,
    )


_CALCULI = {"lbstar": Calculus.LBSTAR, "lbstar1": Calculus.LBSTAR1}


def grammar_from_json(data: dict) -> Grammar:
    try:
        symbols: dict[str, int] = {}
        alphabet = [str(a) for a in data["alphabet"]]
        lexicon = [(str(a), parse_formula(f, symbols)) for a, f in data["lexicon"]]
        target = parse_formula(data["target"], symbols)
        cal = _CALCULI[data.get("calculus", "lbstar1")]
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed grammar: {e}") from e
    return Grammar(tuple(alphabet), tuple(lexicon), target, cal)


def grammar_to_json(g: Grammar) -> dict:
    return {
        "alphabet": list(g.alphabet),
        "lexicon": [[a, format_formula(f)] for a, f in g.lexicon],
        "target": format_formula(g.target),
        "calculus": g.calculus.value,
    }


def load_grammar(path: str | Path) -> Grammar:
    return grammar_from_json(json.loads(Path(path).read_text()))
