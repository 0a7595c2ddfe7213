import random

import pytest
from hypothesis import given, settings

from graphpers.errors import InvalidRepresentative, KindMismatch, TooLarge
from graphpers.model import Filtration, Pairing
from graphpers.oracle import MAX_RANK_ORACLE, Alg51Oracle, betti_profile, reduce_standard, zigzag_by_ranks
from graphpers.zigzag import compute_zigzag
from helpers import betti_direct, frozen, pick_zz_switch, seeds, tri, ud2, ud_tri, zigzag_filtrations, zigzag_from, zz1


def test_reduction_on_tri():
    assert reduce_standard(tri()) == Pairing({1: 3, 2: 4}, frozenset({0, 5}))


def test_rank_oracle_fixtures():
    assert zigzag_by_ranks(zz1()) == frozen("zz1")
    assert zigzag_by_ranks(ud_tri()) == frozen("udtri")


def test_rank_oracle_refuses_large_input():
    f = zigzag_from(0, MAX_RANK_ORACLE + 2)
    with pytest.raises(TooLarge):
        zigzag_by_ranks(f)


@settings(max_examples=40, deadline=None)
@given(zigzag_filtrations())
def test_betti_profile_matches_direct_count(f):
    assert betti_profile(f) == betti_direct(f)


def test_alg51_initial_pairs():
    assert Alg51Oracle(ud_tri()).pair_positions() == {(5, 6)}
    assert Alg51Oracle(ud2()).pair_positions() == {(3, 5), (4, 6)}


def test_alg51_representatives_are_cycles():
    o = Alg51Oracle(ud2())
    for a, (d, z) in o.pairs.items():
        assert a in z and d in z
    # corrupt one representative and the check must notice
    a = next(iter(o.pairs))
    d, z = o.pairs[a]
    o.pairs[a] = (d, frozenset(z - {d}))
    with pytest.raises(InvalidRepresentative):
        o.check()


def test_alg51_kind_check():
    o = Alg51Oracle(zz1())
    with pytest.raises(KindMismatch):
        o.switch("backward", 1)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_alg51_follows_from_scratch_pairs(seed):
    rng = random.Random(seed)
    f = zigzag_from(seed, 2 * rng.randint(3, 40))
    o = Alg51Oracle(f)
    evs = [(e.add, e.simplex) for e in f.events]
    for _ in range(20):
        pick = pick_zz_switch(rng, evs)
        if pick is None:
            break
        kind, i = pick
        o.switch(kind, i)  # runs the containment check itself
        evs[i - 1], evs[i] = evs[i], evs[i - 1]
    cur = Filtration.build(evs, f.flavor)
    assert o.pair_positions() == Alg51Oracle(cur).pair_positions()
    assert compute_zigzag(cur) == zigzag_by_ranks(cur)
