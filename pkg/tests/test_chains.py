"""Chain analytics against brute-force chain enumeration oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

import ucf
from ucf import Family
from ucf.errors import (
    BaseNotFull,
    DegenerateHeight,
    NotSeparating,
    NotUnionClosed,
    TooSmall,
)

from strategies import families, separating_uc_families, spanning_uc_families

PAPER = Family.of(3, [(1, 2, 3), (1, 2), (1,), (2,), ()])


def is_proper_subset(a, b):
    return a | b == b and a != b


def comparable(a, b):
    return a | b in (a, b)


def brute_height(fam):
    """Longest chain by exhaustive extension."""
    ms = fam.members

    def grow(top, size):
        best = size
        for m in ms:
            if is_proper_subset(top, m):
                best = max(best, grow(m, size + 1))
        return best

    return max(grow(m, 1) for m in ms)


def brute_maximal_chains(fam):
    """All maximal chains, as frozensets of masks."""
    ms = fam.members
    out = set()

    def rec(chain):
        ext = [m for m in ms if m not in chain and all(comparable(m, c) for c in chain)]
        if not ext:
            out.add(frozenset(chain))
            return
        for m in ext:
            rec(chain + [m])

    rec([])
    return out


# ---------------------------------------------------------------------------
# chain_report
# ---------------------------------------------------------------------------

def test_height_paper_family():
    rep = ucf.chain_report(PAPER)
    assert rep.height == 4
    assert rep.witness_chain == (0b111, 0b011, 0b001, 0b000)


def test_height_single_member():
    rep = ucf.chain_report(Family.of(4, [(1, 2, 3, 4)]))
    assert (rep.height, rep.r) == (1, 1)
    assert rep.witness_chain == rep.r_witness == (0b1111,)


def test_height_astarstar_is_five():
    assert ucf.chain_report(ucf.build_astarstar(9)).height == 5


@given(families(max_n=5, min_members=1, max_members=12))
@settings(max_examples=150)
def test_height_matches_brute_force(fam):
    rep = ucf.chain_report(fam)
    assert rep.height == brute_height(fam)
    # witness is a real chain of that length
    assert len(rep.witness_chain) == rep.height
    for hi, lo in zip(rep.witness_chain, rep.witness_chain[1:]):
        assert is_proper_subset(lo, hi)


@given(families(max_n=5, min_members=1, max_members=8))
@settings(max_examples=100)
def test_r_matches_brute_force(fam):
    rep = ucf.chain_report(fam)
    chains = brute_maximal_chains(fam)
    assert rep.r == min(len(c) for c in chains)
    assert rep.r <= rep.height
    # r_witness must itself be a maximal chain of size r
    assert frozenset(rep.r_witness) in chains
    assert len(rep.r_witness) == rep.r


def test_r_can_undershoot_height():
    # {1} < {1,2} < {1,2,3} is the long chain; {3} < {1,2,3} is maximal of size 2
    fam = Family.of(3, [(1,), (1, 2), (1, 2, 3), (3,)])
    rep = ucf.chain_report(fam)
    assert (rep.height, rep.r) == (3, 2)


# ---------------------------------------------------------------------------
# lemma13_check
# ---------------------------------------------------------------------------

def test_lemma13_paper_family():
    assert ucf.lemma13_check(PAPER).ok


def test_lemma13_astar():
    assert ucf.lemma13_check(ucf.build_astar(8)).ok


def test_lemma13_singleton_ground():
    # {[1]} has no second chain element to constrain; passes vacuously
    assert ucf.lemma13_check(Family.of(1, [(1,)])).ok


def test_lemma13_preconditions():
    with pytest.raises(NotUnionClosed):
        ucf.lemma13_check(Family.of(2, [(1,), (2,)]))
    with pytest.raises(NotSeparating):
        ucf.lemma13_check(Family.of(2, [(1, 2)]))
    with pytest.raises(BaseNotFull):
        ucf.lemma13_check(Family.of(3, [(1, 2), (1,), (2,)]))


def test_lemma13_internal_status_finds_offender():
    # not separating (2,3 collide), and the chain {1} < [4] skips size 3
    from ucf.chains import _lemma13_status

    fam = Family.of(4, [(1,), (1, 2, 3, 4)])
    rep = _lemma13_status(fam)
    assert not rep.ok
    assert rep.offending_chain == (0b1111, 0b0001)


@given(separating_uc_families(max_n=5))
@settings(max_examples=60, deadline=None)
def test_lemma13_on_random_separating_closures(fam):
    if ucf.base_is_full(fam):
        assert ucf.lemma13_check(fam).ok


# ---------------------------------------------------------------------------
# thm12 bound and witness
# ---------------------------------------------------------------------------

def test_thm12_bound_values():
    assert ucf.thm12_bound(5, 4) == Fraction(2, 1)
    assert ucf.thm12_bound(2, 2) == Fraction(1, 1)
    assert ucf.thm12_bound(7, 3) == Fraction(7, 2)


def test_thm12_bound_errors():
    with pytest.raises(TooSmall):
        ucf.thm12_bound(1, 2)
    with pytest.raises(DegenerateHeight):
        ucf.thm12_bound(5, 1)


def test_thm12_witness_paper_family():
    wit = ucf.thm12_witness(PAPER)
    assert wit.bound == 2
    assert wit.count >= 2


def test_thm12_witness_two_member_family():
    fam = Family.of(4, [(1, 2, 3, 4), (1, 2, 3)])
    wit = ucf.thm12_witness(fam)
    assert wit.element == 4  # only element of [n] \ second chain set
    assert wit.count == 1
    assert wit.bound == 1


def test_thm12_witness_preconditions():
    with pytest.raises(TooSmall):
        ucf.thm12_witness(Family.of(2, [(1, 2)]))
    with pytest.raises(NotUnionClosed):
        ucf.thm12_witness(Family.of(2, [(1,), (2,)]))


@given(separating_uc_families(max_n=5))
@settings(max_examples=60, deadline=None)
def test_thm12_witness_meets_bound_on_random_closures(fam):
    if len(fam) > 1 and ucf.base_is_full(fam):
        wit = ucf.thm12_witness(fam)
        assert wit.count >= wit.bound


# ---------------------------------------------------------------------------
# size_bound_witness
# ---------------------------------------------------------------------------

def test_size_bound_base_case():
    trace = ucf.size_bound_witness(Family.of(1, [(1,)]))
    assert trace.levels == ((1, 1),)
    assert trace.ok


def test_size_bound_two_members():
    trace = ucf.size_bound_witness(Family.of(2, [(1, 2), (1,)]))
    assert trace.levels[0] == (2, 2)
    assert trace.levels[-1][0] == 1
    assert trace.ok


def test_size_bound_preconditions():
    with pytest.raises(NotUnionClosed):
        ucf.size_bound_witness(Family.of(2, [(1,), (2,)]))
    with pytest.raises(NotSeparating):
        ucf.size_bound_witness(Family.of(2, [(1, 2)]))


@given(separating_uc_families(max_n=5))
@settings(max_examples=80, deadline=None)
def test_size_bound_trace_on_random_closures(fam):
    trace = ucf.size_bound_witness(fam)
    assert trace.ok
    sizes = [s for s, _ in trace.levels]
    assert sizes == sorted(sizes, reverse=True)
    assert trace.levels[-1][0] == 1
    assert all(s >= b for s, b in trace.levels)


@given(spanning_uc_families(max_n=8))
@settings(max_examples=80, deadline=None)
def test_frequency_bound_on_random_spanning_closures(fam):
    if len(fam) <= 1:
        return
    rep = ucf.chain_report(fam)
    maxfreq = max(ucf.frequencies(fam))
    assert maxfreq >= ucf.thm12_bound(len(fam), rep.height)
    assert maxfreq >= ucf.thm12_bound(len(fam), rep.r)
    wit = ucf.thm12_witness(fam)
    assert wit.count >= wit.bound
