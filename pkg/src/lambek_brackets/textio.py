"""ASCII syntax for formulas, structures and sequents.

Grammar (loosest binding first)::

    formula  := product (('\\' | '/') product)*        left-associative
    product  := unary ('*' unary)*                     left-associative
    unary    := '<>' unary | '[]^-1' unary | atom
    atom     := '1' | NAME | '(' formula ')'
    sequent  := [item (',' item)*] '->' formula
    item     := formula | '[' [item (',' item)*] ']'

Names ``p1``, ``p2``, ... denote variables with that index.  Any other name
(``q``, ``np``) is allocated the smallest index not taken by an explicit
``pN`` in the same input or by an earlier name in the shared symbol table.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .syntax import (
    UNIT, BracketInv, Diamond, Formula, Group, Over, Prod, Sequent, Structure,
    Under, Unit, Var,
)


class SyntaxError(ValueError):  # noqa: A001 - deliberately shadows the builtin inside this module
    def __init__(self, position: int, message: str) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.message = message


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<arrow>->)
  | (?P<binv>\[\]\^?-1)
  | (?P<dia><>)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<one>1(?![0-9]))
  | (?P<punct>[\\/*,()\[\]])
    """,
    re.VERBOSE,
)

_EXPLICIT = re.compile(r"p([0-9]+)")


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _lex(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SyntaxError(pos, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(m.group() if kind == "punct" else kind, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, symbols: dict[str, int] | None) -> None:
        self.toks = _lex(text)
        self.i = 0
        self.symbols = {} if symbols is None else symbols
        self._reserved = set(self.symbols.values())
        for t in self.toks:
            if t.kind == "name" and (m := _EXPLICIT.fullmatch(t.text)):
                self._reserved.add(int(m.group(1)))

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind: str) -> _Tok:
        t = self.tok
        if t.kind != kind:
            want = "end of input" if kind == "eof" else repr(kind)
            got = "end of input" if t.kind == "eof" else repr(t.text)
            raise SyntaxError(t.pos, f"expected {want}, found {got}")
        self.i += 1
        return t

    def variable(self, t: _Tok) -> Var:
        if m := _EXPLICIT.fullmatch(t.text):
            n = int(m.group(1))
            if n < 1:
                raise SyntaxError(t.pos, "variable index must be positive")
            return Var(n)
        if t.text not in self.symbols:
            n = 1
            while n in self._reserved:
                n += 1
            self.symbols[t.text] = n
            self._reserved.add(n)
        return Var(self.symbols[t.text])

    def formula(self) -> Formula:
        f = self.product()
        while self.tok.kind in ("\\", "/"):
            op = self.take(self.tok.kind).kind
            g = self.product()
            f = Under(f, g) if op == "\\" else Over(f, g)
        return f

    def product(self) -> Formula:
        f = self.unary()
        while self.tok.kind == "*":
            self.take("*")
            f = Prod(f, self.unary())
        return f

    def unary(self) -> Formula:
        t = self.tok
        if t.kind == "dia":
            self.i += 1
            return Diamond(self.unary())
        if t.kind == "binv":
            self.i += 1
            return BracketInv(self.unary())
        if t.kind == "one":
            self.i += 1
            return UNIT
        if t.kind == "name":
            self.i += 1
            return self.variable(t)
        if t.kind == "(":
            self.i += 1
            f = self.formula()
            self.take(")")
            return f
        got = "end of input" if t.kind == "eof" else repr(t.text)
        raise SyntaxError(t.pos, f"expected a formula, found {got}")

    def items(self, closer: str) -> Structure:
        out: list = []
        if self.tok.kind == closer:
            return ()
        while True:
            if self.tok.kind == "[":
                self.i += 1
                inner = self.items("]")
                self.take("]")
                out.append(Group(inner))
            else:
                out.append(self.formula())
            if self.tok.kind != ",":
                return tuple(out)
            self.take(",")

    def sequent(self) -> Sequent:
        ante = self.items("arrow")
        self.take("arrow")
        succ = self.formula()
        return Sequent(ante, succ)


def parse_formula(text: str, symbols: dict[str, int] | None = None) -> Formula:
    p = _Parser(text, symbols)
    f = p.formula()
    p.take("eof")
    return f


def parse_structure(text: str, symbols: dict[str, int] | None = None) -> Structure:
    p = _Parser(text, symbols)
    s = p.items("eof")
    p.take("eof")
    return s


def parse_sequent(text: str, symbols: dict[str, int] | None = None) -> Sequent:
    p = _Parser(text, symbols)
    s = p.sequent()
    p.take("eof")
    return s


# -- printing ---------------------------------------------------------------

_DIV, _PROD, _UNARY = 0, 1, 2


def _prec(f: Formula) -> int:
    match f:
        case Under() | Over():
            return _DIV
        case Prod():
            return _PROD
    return _UNARY


def _atomic(f: Formula) -> bool:
    return isinstance(f, (Var, Unit))


def format_formula(f: Formula, names: dict[int, str] | None = None) -> str:
    """Print ``f`` with the fewest parentheses the grammar allows, except that
    a division directly under another division is always parenthesized.

    ``names`` maps variable indices back to the identifiers they were parsed
    from; indices without an entry print as ``p<index>``.
    """

    def go(f: Formula) -> str:
        match f:
            case Var(n):
                return names.get(n, f"p{n}") if names else f"p{n}"
            case Unit():
                return "1"
            case Diamond(a):
                return "<>" + wrap(a, _UNARY)
            case BracketInv(a):
                return "[]^-1 " + wrap(a, _UNARY)
            case Prod(a, b):
                return f"{wrap(a, _PROD)} * {wrap(b, _UNARY)}"
            case Under(a, b) | Over(a, b):
                op = "\\" if isinstance(f, Under) else "/"
                sep = op if _atomic(a) and _atomic(b) else f" {op} "
                # nested divisions are always parenthesized for readability
                return wrap(a, _PROD) + sep + wrap(b, _PROD)
        raise TypeError(f"not a formula: {f!r}")

    def wrap(g: Formula, at_least: int) -> str:
        s = go(g)
        return s if _prec(g) >= at_least else f"({s})"

    return go(f)


def format_structure(s: Structure, names: dict[int, str] | None = None) -> str:
    parts = []
    for it in s:
        if isinstance(it, Group):
            parts.append("[" + format_structure(it.items, names) + "]")
        else:
            parts.append(format_formula(it, names))
    return ", ".join(parts)


def format_sequent(s: Sequent, names: dict[int, str] | None = None) -> str:
    ante = format_structure(s.antecedent, names)
    succ = format_formula(s.succedent, names)
    return f"{ante} -> {succ}" if ante else f"-> {succ}"


def names_from_symbols(symbols: dict[str, int]) -> dict[int, str]:
    return {n: name for name, n in symbols.items()}
