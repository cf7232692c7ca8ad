from hypothesis import strategies as st

from lambek_brackets.syntax import UNIT, BracketInv, Diamond, Group, Over, Prod, Under, Var

atoms = st.one_of(st.integers(1, 3).map(Var), st.just(UNIT))

formulas = st.recursive(
    atoms,
    lambda sub: st.one_of(
        st.builds(Under, sub, sub),
        st.builds(Over, sub, sub),
        st.builds(Prod, sub, sub),
        st.builds(Diamond, sub),
        st.builds(BracketInv, sub),
    ),
    max_leaves=6,
)

structures = st.recursive(
    st.lists(formulas, max_size=3).map(tuple),
    lambda sub: st.lists(st.one_of(formulas, sub.map(Group)), max_size=3).map(tuple),
    max_leaves=4,
)
