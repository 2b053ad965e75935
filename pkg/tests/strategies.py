"""Hypothesis strategies shared across the test modules."""

from hypothesis import assume, strategies as st

from ucf import Family, is_separating, union_closure


@st.composite
def families(draw, max_n=6, min_members=0, max_members=10):
    n = draw(st.integers(1, max_n))
    members = draw(
        st.lists(
            st.integers(0, (1 << n) - 1),
            min_size=min_members,
            max_size=max_members,
            unique=True,
        )
    )
    return Family.from_masks(n, members)


def nonempty_families(max_n=6, max_members=10):
    return families(max_n=max_n, min_members=1, max_members=max_members)


@st.composite
def union_closed_families(draw, max_n=5, max_seed_members=6):
    seed = draw(families(max_n=max_n, min_members=1, max_members=max_seed_members))
    assume(any(seed.members))
    return union_closure(seed)


@st.composite
def separating_uc_families(draw, max_n=5):
    fam = draw(union_closed_families(max_n=max_n))
    assume(is_separating(fam))
    return fam


@st.composite
def spanning_uc_families(draw, max_n=8):
    """Union-closed families with base exactly [n], n up to max_n, built by
    closing a random seed together with the full set."""
    n = draw(st.integers(1, max_n))
    full = (1 << n) - 1
    members = draw(
        st.lists(st.integers(0, full), min_size=0, max_size=8, unique=True)
    )
    return union_closure(Family.from_masks(n, set(members) | {full}))
