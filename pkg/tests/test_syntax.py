import pytest
from hypothesis import given

from conftest import formulas, structures
from lambek_brackets.syntax import (
    HOLE, BracketInv, Context, Diamond, Group, Prod, Sequent, Under, Var, UNIT,
    modality_depth, occurrences, plug, size, subformulas, yield_of,
)
from lambek_brackets.translate import tau_minus, tau_plus

p1, p2, p3 = Var(1), Var(2), Var(3)
qq = Under(p2, p2)


def count_nodes(f):
    # independent of size(): walk the subformula listing
    return sum(1 for _ in subformulas(f))


def test_size_examples():
    assert size(p1) == 1
    assert size(Under(p1, p1)) == 3
    padded = tau_plus(p1, 2)
    assert padded == Prod(Prod(qq, p1), qq)
    assert size(padded) == count_nodes(padded) == 9


def test_modality_depth_examples():
    assert modality_depth(p1) == 0
    assert modality_depth(Diamond(Diamond(p1))) == 2
    assert modality_depth(tau_minus(BracketInv(p1), 2)) == 1


def test_yield_examples():
    assert yield_of(()) == ()
    assert yield_of((Group((p1,)), p2)) == (p1, p2)
    assert yield_of((Group((Group((p1, Group((p2,)))), p3)),)) == (p1, p2, p3)


def test_plug_examples():
    assert plug(Context((HOLE,)), (p1,)) == (p1,)
    assert plug(Context((Group((HOLE, p2)),)), ()) == (Group((p2,)),)
    assert plug(Context((p1, HOLE)), (p2, Group((p3,)))) == (p1, p2, Group((p3,)))


def test_context_needs_one_hole():
    with pytest.raises(ValueError):
        Context((p1,))
    with pytest.raises(ValueError):
        Context((HOLE, Group((HOLE,))))


def test_occurrence_examples():
    assert occurrences((p1,)) == [(Context((HOLE,)), p1)]
    assert len(occurrences((p1, p2))) == 2
    occ = occurrences((Group((p1,)),))
    assert [it for _, it in occ] == [Group((p1,)), p1]
    assert occ[1][0] == Context((Group((HOLE,)),))


def _count_items(s):
    return sum(1 + (_count_items(it.items) if isinstance(it, Group) else 0) for it in s)


@given(structures)
def test_plug_inverts_occurrences(s):
    occ = occurrences(s)
    assert len(occ) == _count_items(s)
    for ctx, item in occ:
        assert plug(ctx, (item,)) == s


@given(structures, structures)
def test_yield_of_plug_splices(s, t):
    for ctx, _ in occurrences(s):
        # the item at the hole is replaced; compare against a marker-based splice
        marker = Var(99)
        marked = yield_of(plug(ctx, (marker,)))
        k = marked.index(marker)
        assert yield_of(plug(ctx, t)) == marked[:k] + yield_of(t) + marked[k + 1:]
        assert yield_of(plug(ctx, ())) == marked[:k] + marked[k + 1:]


@given(formulas)
def test_size_positive_and_additive(f):
    assert size(f) >= 1
    match f:
        case Under(a, b) | Prod(a, b):
            assert size(f) == 1 + size(a) + size(b)


def test_canonical_structures():
    gamma = (p1, Group((p2,)))
    assert gamma + () == () + gamma == gamma
    assert Sequent(gamma + (), p1) == Sequent(gamma, p1)
    assert hash(Group(())) == hash(Group(()))
    assert Group(()) != ()


def test_formula_equality_is_structural():
    assert Under(p1, p2) == Under(Var(1), Var(2))
    assert Under(p1, p2) != Prod(p1, p2)
    assert {UNIT, Var(1), Var(1)} == {UNIT, p1}
