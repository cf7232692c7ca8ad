"""Exhaustive cut-free backward proof search with memoization.

Every premise produced by ``backward_steps`` is strictly smaller than its
conclusion, so plain depth-first search terminates without a depth bound.

Two counting invariants prune goals before any rule is tried.  Both hold for
every derivable sequent of all three calculi (each rule preserves them), so
pruning never changes an answer:

* variable balance: for every variable, its signed occurrence count in the
  succedent equals the sum over the antecedent formulas;
* bracket balance: the number of structural groups in the antecedent equals
  the signed count of modalities (``<>`` positive, ``[]^-1`` negative) in the
  succedent minus the same count summed over the antecedent.

With unbounded depth the search is also focused: invertible rules are
applied eagerly and alone, and in Lb* and Lb*1 the remaining goals are
decomposed one formula at a time (see ``Prover._stable``).  Answers are the
same as for the plain rule table, which ``SearchConfig(focusing=False)``
selects; ``prove`` always reports derivations in rule-table order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .calculus import Calculus, Derivation, _identity, _levels, check_input, iter_steps
from .syntax import (
    BracketInv, Diamond, Formula, Group, Over, Prod, Sequent, Under, Unit, Var,
    group_count, yield_of,
)


@dataclass(frozen=True)
class SearchConfig:
    max_depth: int | None = None
    memo_enabled: bool = True
    prune: bool = True
    focusing: bool = True

    def __post_init__(self) -> None:
        if self.max_depth is not None and self.max_depth < 1:
            raise ValueError("max_depth must be positive")


DEFAULT = SearchConfig()


_LANE = 32  # bits per variable in a packed signature


def _signature(f: Formula, cache: dict) -> tuple[int, int]:
    """Signed variable counts packed into one integer, and the modality balance.

    Variable ``n`` occupies bits ``[32n, 32n + 32)``, so signatures add like
    vectors and a sum is zero exactly when every count is.
    """
    hit = cache.get(f)
    if hit is not None:
        return hit
    match f:
        case Var(n):
            out = (1 << (_LANE * n), 0)
        case Unit():
            out = (0, 0)
        case Under(a, b) | Over(b, a):
            (va, ba), (vb, bb) = _signature(a, cache), _signature(b, cache)
            out = (vb - va, bb - ba)
        case Prod(a, b):
            (va, ba), (vb, bb) = _signature(a, cache), _signature(b, cache)
            out = (va + vb, ba + bb)
        case Diamond(a):
            v, b = _signature(a, cache)
            out = (v, b + 1)
        case BracketInv(a):
            v, b = _signature(a, cache)
            out = (v, b - 1)
        case _:
            raise TypeError(f"not a formula: {f!r}")
    cache[f] = out
    return out


def _invertible_step(goal: Sequent, cal: Calculus) -> tuple[Sequent, ...] | None:
    """Premises of an invertible rule instance for ``goal``, if there is one.

    When such a rule applies the goal is derivable iff its premise is (cut is
    admissible and the inverse sequents are derivable), so no other rule
    needs to be tried.
    """
    ante, succ = goal.antecedent, goal.succedent
    match succ:
        case Under(a, b):
            return (Sequent((a,) + ante, b),)
        case Over(b, a):
            return (Sequent(ante + (a,), b),)
        case BracketInv(a):
            return (Sequent((Group(ante),), a),)
    unit_left = cal is Calculus.LBSTAR1
    for items, rebuild in _levels(ante, _identity):
        for j, it in enumerate(items):
            match it:
                case Prod(a, b):
                    return (Sequent(rebuild(items[:j] + (a, b) + items[j + 1:]), succ),)
                case Diamond(a):
                    return (Sequent(rebuild(items[:j] + (Group((a,)),) + items[j + 1:]), succ),)
                case Unit() if unit_left:
                    return (Sequent(rebuild(items[:j] + items[j + 1:]), succ),)
    return None


_FOCUSED = frozenset({Calculus.LBSTAR, Calculus.LBSTAR1})


def _positive(f: Formula) -> bool:
    return isinstance(f, (Var, Unit, Prod, Diamond))


def _paths(items: tuple, path: tuple) -> Iterator[tuple[tuple, tuple]]:
    # every sequence level with the group indices leading to it
    yield path, items
    for j, it in enumerate(items):
        if isinstance(it, Group):
            yield from _paths(it.items, path + (j,))


def _level(items: tuple, path: tuple) -> tuple:
    for j in path:
        items = items[j].items
    return items


def _replace(items: tuple, path: tuple, new: tuple) -> tuple:
    if not path:
        return new
    j = path[0]
    return items[:j] + (Group(_replace(items[j].items, path[1:], new)),) + items[j + 1:]


class Prover:
    """A decision procedure with a session-wide memo table.

    Results are cached per calculus, for derivable and underivable goals
    alike.  The table only ever grows by ``setdefault``, so sharing one
    ``Prover`` between threads is safe.
    """

    def __init__(self) -> None:
        self._memo: dict[tuple, bool] = {}
        self._sig: dict[Formula, tuple[int, int]] = {}

    def clear(self) -> None:
        self._memo.clear()

    def balanced(self, goal: Sequent) -> bool:
        """Necessary condition for derivability; see the module docstring."""
        v, b = _signature(goal.succedent, self._sig)
        for f in yield_of(goal.antecedent):
            vf, bf = _signature(f, self._sig)
            v -= vf
            b -= bf
        return v == 0 and b == group_count(goal.antecedent)

    def derivable(self, goal: Sequent, cal: Calculus, cfg: SearchConfig = DEFAULT) -> bool:
        check_input(goal, cal)
        return self._derivable(goal, cal, cfg, cfg.max_depth)

    def _derivable(self, goal: Sequent, cal: Calculus, cfg: SearchConfig, depth: int | None) -> bool:
        if depth is not None and depth <= 0:
            return False
        key = (cal, cfg.prune, cfg.focusing, depth, goal)
        if cfg.memo_enabled:
            hit = self._memo.get(key)
            if hit is not None:
                return hit
        if cfg.prune and not self.balanced(goal):
            result = False
        else:
            below = None if depth is None else depth - 1
            steps = iter_steps(goal, cal)
            inv = None
            if cfg.focusing and depth is None:
                inv = _invertible_step(goal, cal)
                if inv is not None:
                    steps = iter(((None, inv),))
            if inv is None and cfg.focusing and depth is None and cal in _FOCUSED:
                result = self._stable(goal, cal, cfg)
            else:
                result = any(
                    all(self._derivable(p, cal, cfg, below) for p in premises)
                    for _, premises in steps
                )
        if cfg.memo_enabled:
            self._memo.setdefault(key, result)
        return result

    # -- focused phases (Lb* and Lb*1, unbounded depth) -----------------------
    #
    # Atoms, products, diamonds and the unit are positive; divisions and
    # []^-1 are negative.  Once no invertible rule applies, a derivation can
    # be taken to continue either by decomposing a positive succedent to the
    # end (right focus) or by decomposing one negative antecedent formula to
    # the end (left focus).  Under right focus an atom must close by an axiom,
    # which is what keeps padding like (q\q) from being tried everywhere.

    def _stable(self, goal: Sequent, cal: Calculus, cfg: SearchConfig) -> bool:
        ante, succ = goal.antecedent, goal.succedent
        if _positive(succ) and self._rfocus(ante, succ, cal, cfg):
            return True
        for path, level in _paths(ante, ()):
            for j, it in enumerate(level):
                if isinstance(it, (Under, Over, BracketInv)) and self._lfocus(ante, path, j, succ, cal, cfg):
                    return True
        return False

    def _rfocus(self, ante: tuple, c: Formula, cal: Calculus, cfg: SearchConfig) -> bool:
        if not _positive(c):
            return self._derivable(Sequent(ante, c), cal, cfg, None)
        key = ("R", cal, cfg.prune, ante, c)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if cfg.prune and not self.balanced(Sequent(ante, c)):
            result = False
        else:
            match c:
                case Var() | Unit():
                    result = ante == (c,) if isinstance(c, Var) else ante == ()
                case Prod(a, b):
                    result = any(self._rfocus(ante[:i], a, cal, cfg) and self._rfocus(ante[i:], b, cal, cfg)
                                 for i in range(len(ante) + 1))
                case Diamond(a):
                    result = (len(ante) == 1 and isinstance(ante[0], Group)
                              and self._rfocus(ante[0].items, a, cal, cfg))
        self._memo.setdefault(key, result)
        return result

    def _lfocus(self, ante: tuple, path: tuple, j: int, succ: Formula,
                cal: Calculus, cfg: SearchConfig) -> bool:
        level = _level(ante, path)
        f = level[j]
        if _positive(f):
            return self._derivable(Sequent(ante, succ), cal, cfg, None)
        key = ("L", cal, cfg.prune, ante, path, j, succ)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        result = False
        match f:
            case Under(a, b):
                for i in range(j, -1, -1):
                    if self._rfocus(level[i:j], a, cal, cfg):
                        rest = _replace(ante, path, level[:i] + (b,) + level[j + 1:])
                        if self._lfocus(rest, path, i, succ, cal, cfg):
                            result = True
                            break
            case Over(b, a):
                for k in range(j + 1, len(level) + 1):
                    if self._rfocus(level[j + 1:k], a, cal, cfg):
                        rest = _replace(ante, path, level[:j] + (b,) + level[k:])
                        if self._lfocus(rest, path, j, succ, cal, cfg):
                            result = True
                            break
            case BracketInv(a):
                if path and len(level) == 1:
                    up, idx = path[:-1], path[-1]
                    outer = _level(ante, up)
                    rest = _replace(ante, up, outer[:idx] + (a,) + outer[idx + 1:])
                    result = self._lfocus(rest, up, idx, succ, cal, cfg)
        self._memo.setdefault(key, result)
        return result

    def prove(self, goal: Sequent, cal: Calculus, cfg: SearchConfig = DEFAULT) -> Derivation | None:
        """The first derivation of ``goal`` in rule-table order, or None."""
        check_input(goal, cal)
        return self._prove(goal, cal, cfg, cfg.max_depth)

    def _prove(self, goal: Sequent, cal: Calculus, cfg: SearchConfig, depth: int | None) -> Derivation | None:
        if not self._derivable(goal, cal, cfg, depth):
            return None
        below = None if depth is None else depth - 1
        for rule, premises in iter_steps(goal, cal):
            if all(self._derivable(p, cal, cfg, below) for p in premises):
                subs = [self._prove(p, cal, cfg, below) for p in premises]
                return Derivation(rule, goal, tuple(subs))  # type: ignore[arg-type]
        raise AssertionError("memo table disagrees with the rule table")  # pragma: no cover


_session = Prover()


def derivable(goal: Sequent, cal: Calculus, cfg: SearchConfig = DEFAULT) -> bool:
    return _session.derivable(goal, cal, cfg)


def prove(goal: Sequent, cal: Calculus, cfg: SearchConfig = DEFAULT) -> Derivation | None:
    return _session.prove(goal, cal, cfg)


def session() -> Prover:
    return _session
