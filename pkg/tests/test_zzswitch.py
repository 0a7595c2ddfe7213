import random

import pytest
from hypothesis import given, settings

from graphpers.errors import InvalidSwitch, KindMismatch, OutOfRange
from graphpers.generate import random_zz_switch, zz_switch_kind
from graphpers.model import ZIGZAG, Filtration
from graphpers.oracle import Alg51Oracle
from graphpers.zigzag import compute_zigzag
from graphpers.zzswitch import KINDS, ZZUpdateState, checkpoint_gap, checkpoint_indices
from helpers import E, V, case_c, f2, frozen, pick_zz_switch, seeds, ud2, zigzag_from, zz1


def events_of(f):
    return [(e.add, e.simplex) for e in f.events]


def snapshot(st):
    forests = [sorted((c, st.forests[q].weight(h)) for c, h in st.hnd[q].items()) for q in range(len(st.lams))]
    return (
        list(st.fadd),
        list(st.fcell),
        list(st.fpos_a),
        list(st.fpos_d),
        dict(st.mate_up),
        st.up.pairing(),
        st.down.pairing(),
        st.up.forest_shape(),
        st.down.forest_shape(),
        dict(st.oldest_up),
        dict(st.oldest_down),
        forests,
        [set(d) for d in st.disp],
    )


def test_checkpoint_sets():
    assert checkpoint_gap(16) == 4 and checkpoint_gap(8) == 3
    assert checkpoint_indices(16) == [16, 12, 8]
    assert checkpoint_indices(8) == [8, 5]
    assert ZZUpdateState(zz1()).lams == [8, 5]


def test_f2_forward_both_negative():
    st = ZZUpdateState(f2())
    st.switch("forward", 4)
    assert st.barcode() == frozen("f2_forward4")
    assert st.barcode() == compute_zigzag(st.filtration())


def test_f2_backward_then_outward():
    st = ZZUpdateState(f2())
    with pytest.raises(InvalidSwitch):
        st.switch("outward", 5)  # +bc then -bc
    st.switch("backward", 6)
    assert st.barcode() == frozen("f2_backward6")
    st.switch("outward", 5)  # +bc then -ab
    assert st.barcode() == frozen("f2_backward6_outward5")
    st.check_checkpoints()


def test_same_simplex_cannot_cross_itself():
    st = ZZUpdateState(zz1())
    for kind in ("outward", "inward"):
        with pytest.raises(InvalidSwitch):
            st.switch(kind, 4)
        with pytest.raises(InvalidSwitch):
            st.switch(kind, 3)


def test_kind_and_range_errors():
    st = ZZUpdateState(zz1())
    with pytest.raises(KindMismatch):
        st.switch("backward", 1)
    with pytest.raises(KindMismatch):
        st.switch("sideways", 1)
    with pytest.raises(InvalidSwitch):
        st.switch("forward", 2)  # v1 is a face of e01
    with pytest.raises(InvalidSwitch):
        st.switch("backward", 6)  # e01 must go before v1
    with pytest.raises(OutOfRange):
        st.switch("forward", 0)
    with pytest.raises(OutOfRange):
        st.switch("forward", 8)


def test_ud2_both_positive_swap():
    st = ZZUpdateState(ud2())
    assert st.mate_up == {3: 2, 4: 3}
    st.switch("forward", 4)
    # the later copy now takes the older deletion
    assert st.mate_up == {3: 3, 4: 2}
    assert st.barcode() == compute_zigzag(st.filtration())


def test_case_c_partner_moves():
    st = ZZUpdateState(case_c())
    assert st.mate_up == {3: 2}
    st.switch("forward", 3)
    assert st.mate_up == {2: 2}
    assert st.barcode() == compute_zigzag(st.filtration())


def test_case_a_tree_has_nothing_to_repair():
    items = [(True, V(0)), (True, V(1)), (True, V(2)), (True, E(0, 1)), (True, E(1, 2))]
    items += [(False, E(1, 2)), (False, E(0, 1)), (False, V(2)), (False, V(1)), (False, V(0))]
    st = ZZUpdateState(Filtration.build(items, ZIGZAG))
    st.switch("forward", 4)
    assert st.mate_up == {}
    assert st.barcode() == compute_zigzag(st.filtration())


def test_crossing_switches_touch_constant_state():
    st = ZZUpdateState(zigzag_from(3, 120))
    evs = events_of(st.filtration())
    rng = random.Random(3)
    for kind in ("outward", "inward"):
        for _ in range(20):
            before = (dict(st.mate_up), st.up.pairing(), st.down.pairing())
            _, i = random_zz_switch(rng, evs, kind)
            st.switch(kind, i)
            evs[i - 1], evs[i] = evs[i], evs[i - 1]
            assert st.last_ops == 8
            assert (dict(st.mate_up), st.up.pairing(), st.down.pairing()) == before


def test_vertex_switches_leave_edge_pairs_alone():
    st = ZZUpdateState(zigzag_from(5, 160))
    evs = events_of(st.filtration())
    done = 0
    for i in range(1, len(evs)):
        (a1, s), (a2, t) = evs[i - 1], evs[i]
        if a1 == a2 and s.is_vertex and t.is_vertex:
            pairs = dict(st.mate_up)
            rot = [f.rotations for f in st.forests]
            st.switch(zz_switch_kind(evs, i), i)
            evs[i - 1], evs[i] = evs[i], evs[i - 1]
            assert st.mate_up == pairs
            assert [f.rotations for f in st.forests] == rot
            done += 1
    assert done


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_master_differential(seed):
    rng = random.Random(seed)
    f = zigzag_from(seed, 2 * rng.randint(3, 60))
    st = ZZUpdateState(f)
    ref = Alg51Oracle(f)
    evs = events_of(f)
    for _ in range(25):
        pick = pick_zz_switch(rng, evs)
        if pick is None:
            break
        kind, i = pick
        st.switch(kind, i)
        ref.switch(kind, i)
        evs[i - 1], evs[i] = evs[i], evs[i - 1]
        cur = st.filtration()
        assert st.barcode() == compute_zigzag(cur)
        assert st.edge_pairs() == ref.pair_positions()
        st.check_checkpoints([rng.randrange(len(st.lams))])
    st.check_checkpoints()


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_switch_twice_restores_state(seed):
    rng = random.Random(seed)
    st = ZZUpdateState(zigzag_from(seed, 2 * rng.randint(3, 50)))
    evs = events_of(st.filtration())
    for _ in range(15):
        pick = pick_zz_switch(rng, evs)
        if pick is None:
            break
        kind, i = pick
        before = snapshot(st)
        st.switch(kind, i)
        evs[i - 1], evs[i] = evs[i], evs[i - 1]
        back = zz_switch_kind(evs, i)
        assert back in KINDS
        st.switch(back, i)
        evs[i - 1], evs[i] = evs[i], evs[i - 1]
        assert snapshot(st) == before
