import pytest

import ringlab.bitsets as bitsets
from ringlab import (Ideal, NotAnIdeal, annihilator, ideal_closure,
                     middle_annihilator, quotient_module, regular_module,
                     sorted_indices, submodule_as_module, submodules,
                     zero_ideal)

from bruteforce import naive_submodules


def test_regular_module_shapes(z6, t2, m2z2):
    assert regular_module(z6).order == 6
    assert regular_module(m2z2).order == 16
    reg = regular_module(t2)
    assert reg.order == 8
    assert len(submodules(reg)) == 7


def test_submodules_match_subset_scan(z6, z4, t2):
    for ring in (z6, z4, t2):
        reg = regular_module(ring)
        got = {frozenset(int(i) for i in bitsets.mask_to_indices(m, reg.order))
               for m in submodules(reg)}
        assert got == naive_submodules(reg)


def test_submodules_are_right_ideals(small_rings):
    from ringlab import all_ideals
    for ring in small_rings:
        if ring.order > 9:
            continue
        reg = regular_module(ring)
        assert set(submodules(reg)) == {i.mask for i in all_ideals(ring, "right")}


def test_quotient_module(z6, t2):
    reg = regular_module(z6)
    two = ideal_closure(z6, [2]).mask
    q = quotient_module(reg, two)
    assert q.order == 2
    full = (1 << 6) - 1
    assert quotient_module(reg, full).is_zero()

    regt = regular_module(t2)
    p1 = ideal_closure(t2, [4]).mask
    q = quotient_module(regt, p1)
    assert q.order == 2
    # annihilated by p1: every action by a member of p1 is zero
    for r in sorted_indices(Ideal(t2, p1)):
        assert all(int(q.action[m, r]) == 0 for m in range(q.order))


def test_quotient_order_divides(small_rings):
    for ring in small_rings:
        if ring.order > 9:
            continue
        reg = regular_module(ring)
        for sub in submodules(reg):
            q = quotient_module(reg, sub)
            assert q.order * bitsets.popcount(sub) == reg.order


def test_quotient_rejects_non_submodule(z6):
    reg = regular_module(z6)
    with pytest.raises(NotAnIdeal):
        quotient_module(reg, bitsets.mask_of([0, 1]))


def test_annihilators(z6, t2):
    reg = regular_module(z6)
    two = ideal_closure(z6, [2])
    q = quotient_module(reg, two.mask)
    assert annihilator(q).mask == two.mask

    zero_mod = quotient_module(reg, (1 << 6) - 1)
    assert annihilator(zero_mod).is_unit()

    regt = regular_module(t2)
    strip = bitsets.mask_of([0, 2])
    ann = annihilator(regt, strip)
    assert set(sorted_indices(ann)) == {0, 2, 4, 6}


def test_annihilator_antitone(t2):
    reg = regular_module(t2)
    subs = submodules(reg)
    for a in subs:
        for b in subs:
            if bitsets.is_subset(a, b):
                assert bitsets.is_subset(annihilator(reg, b).mask,
                                         annihilator(reg, a).mask)


def test_annihilator_matches_direct_scan(small_rings):
    for ring in small_rings:
        if ring.order > 9:
            continue
        reg = regular_module(ring)
        for sub in submodules(reg):
            ann = annihilator(reg, sub)
            idx = [int(i) for i in bitsets.mask_to_indices(sub, ring.order)]
            direct = {r for r in range(ring.order)
                      if all(int(ring.mul[x, r]) == 0 for x in idx)}
            assert set(sorted_indices(ann)) == direct


def test_submodule_as_module(t2):
    reg = regular_module(t2)
    p2 = bitsets.mask_of([0, 1, 2, 3])
    inner = submodule_as_module(reg, p2)
    assert inner.order == 4
    assert len(submodules(inner)) == 5


def test_middle_annihilator(t2, z6):
    p1 = ideal_closure(t2, [4])
    p2 = ideal_closure(t2, [1])
    mid, qualifies = middle_annihilator(t2, p1, p2)
    assert qualifies                       # p1 * p2 is the nonzero strip
    assert all(all(int(t2.mul[int(t2.mul[x, r]), y]) == 0
                   for x in sorted_indices(p1) for y in sorted_indices(p2))
               for r in sorted_indices(mid))

    strip = ideal_closure(t2, [2])
    _, qualifies = middle_annihilator(t2, strip, strip)
    assert not qualifies                   # the strip squares to zero

    r_ideal = Ideal(z6, (1 << 6) - 1)
    mid, qualifies = middle_annihilator(z6, r_ideal, r_ideal)
    assert qualifies and mid.is_zero()
