"""Exhaustive small-instance checks of the equivalence results.

Each suite enumerates every instance up to a size bound, decides the
relevant sequents with the prover and collects counterexamples.  The CLI
``selftest`` command and the acceptance tests both run these.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterator

import numpy as np

from .calculus import BRACKET_RULES, Calculus, cut_compose
from .grammar import Grammar, s_accepts, t_accepts, translate_grammar
from .enumeration import EnumSpec, enumerate_formulas, enumerate_sequents
from .prover import Prover
from .syntax import (
    UNIT, Formula, Group, Sequent, Structure, modality_depth, occurrences, size,
    variables,
)
from .textio import format_formula, format_sequent, parse_sequent
from .translate import fresh_q, substitute_unit_for_var, tau_minus, tau_plus, translate_sequent

LB, LB1, LB1P = Calculus.LBSTAR, Calculus.LBSTAR1, Calculus.LBSTAR1_PRIMED


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, what: str) -> None:
        self.failures.append(what)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failures"
        if self.failures:
            line += f"; first counterexample: {self.failures[0]}"
        return line


def theorem1(max_size: int, prover: Prover, max_groups: int = 2) -> SuiteResult:
    """Lb*1 derivability agrees with Lb* derivability of the translation."""
    res = SuiteResult(f"theorem1 (size <= {max_size})")
    for s in enumerate_sequents(EnumSpec(max_size, 1, True, True, max_groups)):
        res.checked += 1
        t, _ = translate_sequent(s)
        if prover.derivable(s, LB1) != prover.derivable(t, LB):
            res.fail(format_sequent(s))
    return res


def lemma1(max_size: int, prover: Prover, max_groups: int = 2) -> SuiteResult:
    """Lb*1 and Lb*1' derive the same sequents."""
    res = SuiteResult(f"lemma1 (size <= {max_size})")
    for s in enumerate_sequents(EnumSpec(max_size, 1, True, True, max_groups)):
        res.checked += 1
        if prover.derivable(s, LB1) != prover.derivable(s, LB1P):
            res.fail(format_sequent(s))
    return res


def unit_insertions(s: Structure) -> Iterator[Structure]:
    """``s`` with one extra ``1`` at each position of each sequence level."""
    items = tuple(s)
    for i in range(len(items) + 1):
        yield items[:i] + (UNIT,) + items[i:]
    for j, it in enumerate(items):
        if isinstance(it, Group):
            for inner in unit_insertions(it.items):
                yield items[:j] + (Group(inner),) + items[j + 1:]


def unit_left_admissible(max_size: int, prover: Prover, max_groups: int = 2) -> SuiteResult:
    """Adding a ``1`` anywhere to a derivable Lb*1' sequent keeps it derivable."""
    res = SuiteResult(f"unit-left admissibility in Lb*1' (size <= {max_size})")
    for s in enumerate_sequents(EnumSpec(max_size, 1, True, True, max_groups)):
        if not prover.derivable(s, LB1P):
            continue
        for ante in unit_insertions(s.antecedent):
            res.checked += 1
            bigger = Sequent(ante, s.succedent)
            if not prover.derivable(bigger, LB1P):
                res.fail(format_sequent(bigger))
    return res


def conservativity(max_size: int, prover: Prover, max_groups: int = 2) -> SuiteResult:
    """Unit-free sequents: Lb* and Lb*1 agree; the pure Lambek fragment needs no bracket rules."""
    res = SuiteResult(f"conservativity (size <= {max_size})")
    for s in enumerate_sequents(EnumSpec(max_size, 1, False, True, max_groups)):
        res.checked += 1
        if prover.derivable(s, LB) != prover.derivable(s, LB1):
            res.fail(format_sequent(s))
    for s in enumerate_sequents(EnumSpec(max_size, 1, False, False, 0)):
        for cal in (LB, LB1):
            d = prover.prove(s, cal)
            res.checked += 1
            if d is not None and d.rules_used() & BRACKET_RULES:
                res.fail(f"{format_sequent(s)} uses bracket rules in {cal.value}")
    return res


def cut_admissible(max_size: int, prover: Prover, cal: Calculus = LB1,
                   var_count: int = 1, max_groups: int = 1) -> SuiteResult:
    """Cutting two derivable sequents at a matching occurrence gives a derivable sequent."""
    res = SuiteResult(f"cut admissibility in {cal.value} (size <= {max_size})")
    spec = EnumSpec(max_size, var_count, cal is not LB, True, max_groups)
    good = [s for s in enumerate_sequents(spec) if prover.derivable(s, cal)]
    by_succedent: dict[Formula, list[Sequent]] = defaultdict(list)
    for s in good:
        by_succedent[s.succedent].append(s)
    for right in good:
        for ctx, item in occurrences(right.antecedent):
            if isinstance(item, Group):
                continue
            for left in by_succedent.get(item, ()):
                res.checked += 1
                c = cut_compose(left, right, ctx)
                if not prover.derivable(c, cal):
                    res.fail(f"{format_sequent(left)} ; {format_sequent(right)} => {format_sequent(c)}")
    return res


def round_trip(max_size: int, prover: Prover, var_count: int = 1) -> SuiteResult:
    """Substituting 1 for q turns each translation back into an equivalent formula."""
    res = SuiteResult(f"1-for-q round trip (size <= {max_size})")
    for b in enumerate_formulas(EnumSpec(max_size, var_count, True)):
        q = fresh_q(Sequent((), b))
        for tau in (tau_plus, tau_minus):
            back = substitute_unit_for_var(tau(b, q), q)
            for s in (Sequent((b,), back), Sequent((back,), b)):
                res.checked += 1
                if not prover.derivable(s, LB1):
                    res.fail(format_sequent(s))
    return res


def linear_bounds(max_size: int, var_count: int = 1) -> SuiteResult:
    res = SuiteResult(f"translation size/depth bounds (size <= {max_size})")
    for a in enumerate_formulas(EnumSpec(max_size, var_count, True)):
        q = fresh_q(Sequent((), a))
        for tau in (tau_plus, tau_minus):
            res.checked += 1
            t = tau(a, q)
            if size(t) > 9 * size(a) or modality_depth(t) != modality_depth(a):
                res.fail(f"{tau.__name__}({format_formula(a)})")
    return res


def parser_round_trip(max_size: int, var_count: int = 1, max_groups: int = 2) -> SuiteResult:
    res = SuiteResult(f"parse/format round trip (size <= {max_size})")
    for s in enumerate_sequents(EnumSpec(max_size, var_count, True, True, max_groups)):
        res.checked += 1
        text = format_sequent(s)
        if parse_sequent(text) != s:
            res.fail(text)
    return res


SELFTEST_SUITES: tuple[Callable[[int, Prover], SuiteResult], ...] = (
    theorem1, lemma1, conservativity, cut_admissible,
)


def selftest(max_size: int, prover: Prover | None = None) -> list[SuiteResult]:
    prover = prover or Prover()
    # cut conclusions grow to roughly twice the inputs, so that suite runs smaller
    sizes = {cut_admissible: max(2, max_size - 2)}
    return [suite(sizes.get(suite, max_size), prover) for suite in SELFTEST_SUITES]


def _lexicon_masks(pool_size: int, max_entries: int) -> "np.ndarray":
    rows = []
    for k in range(1, max_entries + 1):
        for combo in combinations(range(pool_size), k):
            row = np.zeros(pool_size, dtype=np.int64)
            row[list(combo)] = 1
            rows.append(row)
    return np.array(rows)


def _words(alphabet: str, max_len: int) -> list[str]:
    return ["".join(w) for n in range(max_len + 1) for w in product(alphabet, repeat=n)]


def theorem2_pocket(prover: Prover | None = None, max_formula: int = 3, max_target: int = 3,
                    max_entries: int = 2, max_word: int = 3, spot_checks: int = 200,
                    seed: int = 0) -> SuiteResult:
    """s- and t-acceptance agree between every pocket grammar and its translation.

    A grammar's verdict on a word is the disjunction, over lexical choices, of
    a verdict on one tuple of types.  Tuple verdicts are computed through the
    grammar API on one-entry-per-letter grammars, then combined over every
    lexicon (non-empty, at most ``max_entries`` types per letter) with einsum.
    Random whole grammars are also run end to end against the combined tables.
    Without an explicit ``prover`` each slice of a table gets a fresh one, which
    keeps the memo tables small.
    """
    pool = enumerate_formulas(EnumSpec(max_formula, 1, True))
    targets = enumerate_formulas(EnumSpec(max_target, 1, True))
    res = SuiteResult(f"theorem2 pocket grammars (types <= {max_formula}, words <= {max_word})")
    p1 = 1
    own = prover is None
    tables: dict[int, np.ndarray] = {}
    for n in range(max_word + 1):
        letters = tuple(f"x{i}" for i in range(n))
        table = np.zeros((len(pool),) * n + (len(targets), 4), dtype=bool)
        for idx in product(range(len(pool)), repeat=n):
            if prover is None or own and idx[1:] == (0,) * (n - 1):
                prover, own = Prover(), True
            types = [pool[i] for i in idx]
            for h, target in enumerate(targets):
                g = Grammar(letters, tuple(zip(letters, types)), target)
                tg = translate_grammar(g)
                verdict = (s_accepts(g, letters, prover), s_accepts(tg, letters, prover),
                           t_accepts(g, letters, None, prover), t_accepts(tg, letters, None, prover))
                if p1 not in variables(Sequent(tuple(types), target)):
                    # a grammar that mentions p1 elsewhere translates with q = p2
                    alt = Grammar(letters, tuple((a, tau_minus(f, 2)) for a, f in g.lexicon),
                                  tau_plus(target, 2), Calculus.LBSTAR)
                    if (s_accepts(alt, letters, prover), t_accepts(alt, letters, None, prover)) != verdict[1::2]:
                        res.fail(f"renaming q changes the verdict for {types} -> {target}")
                table[idx + (h,)] = verdict
        tables[n] = table

    masks = _lexicon_masks(len(pool), max_entries)
    letters_ab = "ab"
    combined: dict[str, np.ndarray] = {}
    for word in _words(letters_ab, max_word):
        n = len(word)
        t = tables[n].astype(np.int64)
        # operands: one lexicon mask per letter, indexed by that letter's lexicon
        ones = np.ones(len(masks), dtype=np.int64)
        subs_in = ["i", "j"]
        ops = [ones, ones]
        for pos, letter in enumerate(word):
            subs_in.append("ij"[letters_ab.index(letter)] + "klm"[pos])
            ops.append(masks)
        spec = ",".join(subs_in + ["klm"[:n] + "hv"]) + "->ijhv"
        acc = np.einsum(spec, *ops, t, optimize=True)
        combined[word] = acc > 0
        verdicts = combined[word]
        res.checked += verdicts.shape[0] * verdicts.shape[1] * verdicts.shape[2]
        bad = np.argwhere((verdicts[..., 0] != verdicts[..., 1]) | (verdicts[..., 2] != verdicts[..., 3]))
        for i, j, h in bad[:5]:
            res.fail(f"word {word!r}, lexicons #{i}/#{j}, target {format_formula(targets[h])}")

    rng = np.random.default_rng(seed)
    for _ in range(spot_checks):
        i, j = (int(x) for x in rng.integers(len(masks), size=2))
        h = int(rng.integers(len(targets)))
        lex = [("a", pool[k]) for k in np.flatnonzero(masks[i])] + [("b", pool[k]) for k in np.flatnonzero(masks[j])]
        g = Grammar(("a", "b"), tuple(lex), targets[h])
        tg = translate_grammar(g)
        for word in _words(letters_ab, max_word):
            got = (s_accepts(g, word, prover), s_accepts(tg, word, prover),
                   t_accepts(g, word, None, prover), t_accepts(tg, word, None, prover))
            if got != tuple(combined[word][i, j, h]):
                res.fail(f"combined table disagrees with the grammar API on {word!r}")
    return res
