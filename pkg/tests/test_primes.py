import pytest

from ringlab import (Ideal, all_ideals, build_zn, ideal_closure, is_m_system,
                     is_prime_ideal, is_prime_ring, is_semiprime_ideal,
                     max_in_complement, product_ideals, quotient_ring,
                     sorted_indices, spectrum, zero_as_product_of_minimal_primes,
                     zero_ideal)

from bruteforce import naive_is_prime


def masks(ideals):
    return {i.mask for i in ideals}


def test_prime_ideal_examples(z6, t2, m2z2):
    assert is_prime_ideal(z6, ideal_closure(z6, [2])).is_prime
    check = is_prime_ideal(t2, zero_ideal(t2))
    assert not check.is_prime
    a, b = check.witness
    # the witness pair really swallows: a R b = 0 with a, b nonzero
    assert a != 0 and b != 0
    assert all(int(t2.mul[int(t2.mul[a, r]), b]) == 0 for r in range(8))
    assert is_prime_ideal(m2z2, zero_ideal(m2z2)).is_prime


def test_prime_ideal_rejects_unit(z6):
    with pytest.raises(ValueError):
        is_prime_ideal(z6, Ideal(z6, (1 << 6) - 1))


def test_prime_matches_naive(small_rings):
    for ring in small_rings:
        if ring.order > 9:
            continue
        for ideal in all_ideals(ring).ideals:
            if ideal.size() == ring.order:
                continue
            got = is_prime_ideal(ring, ideal).is_prime
            assert got == naive_is_prime(ring, sorted_indices(ideal))


def test_prime_ring_reports(z6, t2, m2z2):
    rep = is_prime_ring(z6)
    assert not rep.is_prime and rep.symmetric_witness == (2, 3)

    rep = is_prime_ring(t2)
    assert not rep.is_prime and rep.symmetric_witness == (2, 2)
    a, b = rep.symmetric_witness
    assert all(int(t2.mul[int(t2.mul[a, r]), b]) == 0 for r in range(8))
    assert all(int(t2.mul[int(t2.mul[b, r]), a]) == 0 for r in range(8))

    assert is_prime_ring(m2z2).is_prime
    assert is_prime_ring(m2z2).criteria == (True, True, True)


def test_prime_ring_zero_ring():
    rep = is_prime_ring(build_zn(1))
    assert not rep.is_prime and rep.zero_ring


def test_prime_ring_criteria_agree(small_rings, m2z4):
    for ring in small_rings + [m2z4]:
        if ring.order == 1:
            continue
        rep = is_prime_ring(ring)
        assert rep.criteria[0] == rep.criteria[1] == rep.criteria[2]
        if not rep.is_prime:
            a, b = rep.symmetric_witness
            n = ring.order
            assert a != 0 and b != 0
            assert all(int(ring.mul[int(ring.mul[a, r]), b]) == 0 for r in range(n))
            assert all(int(ring.mul[int(ring.mul[b, r]), a]) == 0 for r in range(n))


def test_spectrum_pinned(z6, t2, z4, m2z2):
    s = spectrum(all_ideals(z6))
    assert {frozenset(sorted_indices(p)) for p in s.primes} == {
        frozenset({0, 2, 4}), frozenset({0, 3})}
    assert masks(s.primes) == masks(s.minimal_primes)

    s = spectrum(all_ideals(t2))
    assert {frozenset(sorted_indices(p)) for p in s.primes} == {
        frozenset({0, 2, 4, 6}), frozenset({0, 1, 2, 3})}

    s = spectrum(all_ideals(z4))
    assert [sorted_indices(p) for p in s.primes] == [[0, 2]]

    s = spectrum(all_ideals(m2z2))
    assert len(s.primes) == 1 and s.primes[0].is_zero()


def test_primality_transfers_to_factor_ring(small_rings):
    for ring in small_rings:
        if ring.order > 9 or ring.order == 1:
            continue
        prime_masks = masks(spectrum(all_ideals(ring)).primes)
        for ideal in all_ideals(ring).ideals:
            if ideal.size() == ring.order:
                continue
            factor = quotient_ring(ideal)
            assert is_prime_ring(factor).is_prime == (ideal.mask in prime_masks)


def test_prime_implies_semiprime(small_rings):
    for ring in small_rings:
        spec = spectrum(all_ideals(ring))
        for p in spec.primes:
            ok, _ = is_semiprime_ideal(ring, p)
            assert ok


def test_semiprime_examples(z4, t2):
    ok, witness = is_semiprime_ideal(z4, zero_ideal(z4))
    assert not ok and witness == 2
    strip = ideal_closure(t2, [2])
    ok, _ = is_semiprime_ideal(t2, strip)
    assert ok                      # the factor is a product of two fields


def test_m_system_examples(z6, z4):
    assert is_m_system(z6, [1]).holds
    assert is_m_system(z6, [1, 2, 4]).holds
    check = is_m_system(z4, [1, 2])
    assert not check.holds and check.witness == (2, 2)
    assert not is_m_system(z6, [2, 4]).holds  # missing 1


def test_m_system_prime_equivalence(small_rings):
    for ring in small_rings:
        prime_masks = masks(spectrum(all_ideals(ring)).primes)
        for ideal in all_ideals(ring).ideals:
            if ideal.size() == ring.order:
                continue
            complement = sorted(set(range(ring.order))
                                - set(sorted_indices(ideal)))
            assert is_m_system(ring, complement).holds == (
                ideal.mask in prime_masks)


def test_max_in_complement(z6, z4):
    lat = all_ideals(z6)
    unit = (1 << 6) - 1
    got = max_in_complement(lat, {unit})
    assert {frozenset(sorted_indices(i)) for i in got} == {
        frozenset({0, 2, 4}), frozenset({0, 3})}
    assert max_in_complement(lat, {i.mask for i in lat.ideals}) == []

    lat4 = all_ideals(z4)
    got = max_in_complement(lat4, {1, (1 << 4) - 1})
    assert [sorted_indices(i) for i in got] == [[0, 2]]


def test_zero_as_product_of_minimal_primes(z6, t2, m2z2, small_rings, m2z4):
    seq = zero_as_product_of_minimal_primes(spectrum(all_ideals(z6)))
    assert len(seq) == 2 and {frozenset(sorted_indices(p)) for p in seq} == {
        frozenset({0, 2, 4}), frozenset({0, 3})}

    seq = zero_as_product_of_minimal_primes(spectrum(all_ideals(t2)))
    acc = seq[0]
    for p in seq[1:]:
        acc = product_ideals(acc, p)
    assert acc.is_zero()

    seq = zero_as_product_of_minimal_primes(spectrum(all_ideals(m2z2)))
    assert len(seq) == 1 and seq[0].is_zero()

    assert zero_as_product_of_minimal_primes(
        spectrum(all_ideals(build_zn(1)))) == []

    for ring in small_rings + [m2z4]:
        spec = spectrum(all_ideals(ring))
        seq = zero_as_product_of_minimal_primes(spec)
        assert seq is not None
        if seq:
            acc = seq[0]
            for p in seq[1:]:
                acc = product_ideals(acc, p)
            assert acc.is_zero()
