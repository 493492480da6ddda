"""Primality of ideals and rings, Spec, m-systems, and minimal-prime products.

All scans are deterministic: witnesses are the lexicographically first
violating tuples, iterating a, then b, then r.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import bitsets
from .errors import InternalConsistencyError
from .ideals import Ideal, IdealLattice, product_ideals
from .rings import Ring


@dataclass
class PrimalityCheck:
    is_prime: bool
    witness: tuple[int, int] | None = None  # a, b with a R b inside I, both outside I


def is_prime_ideal(ring: Ring, ideal: Ideal) -> PrimalityCheck:
    """Prime test: no pair a, b outside I has a R b inside I."""
    if ideal.size() == ring.order:
        raise ValueError("the unit ideal is not proper, primality is undefined")
    inside = ideal.bools()
    outside = np.flatnonzero(~inside)
    for a in outside:
        arb = ring.mul[ring.mul[a, :], :]          # [r, b] -> (a*r)*b
        swallowed = inside[arb].all(axis=0)        # b with a R b inside I
        bad = swallowed & ~inside
        if bad.any():
            return PrimalityCheck(False, (int(a), int(np.flatnonzero(bad)[0])))
    return PrimalityCheck(True)


def is_semiprime_ideal(ring: Ring, ideal: Ideal) -> tuple[bool, int | None]:
    """Semiprime test: no single a outside I has a R a inside I."""
    if ideal.size() == ring.order:
        raise ValueError("the unit ideal is not proper")
    inside = ideal.bools()
    for a in np.flatnonzero(~inside):
        if inside[ring.mul[ring.mul[a, :], a]].all():
            return False, int(a)
    return True, None


@dataclass
class MSystemCheck:
    holds: bool
    reason: str = ""
    witness: tuple[int, int] | None = None


def is_m_system(ring: Ring, elements) -> MSystemCheck:
    """Check 1 is present and every pair a, b admits r with a*r*b in the set."""
    s = sorted({int(x) for x in elements})
    if ring.one not in s:
        return MSystemCheck(False, "does not contain 1")
    inside = np.zeros(ring.order, dtype=bool)
    inside[s] = True
    for a in s:
        reachable = inside[ring.mul[ring.mul[a, :], :]].any(axis=0)
        missed = ~reachable & inside
        if missed.any():
            return MSystemCheck(False, "no mediating element",
                                (int(a), int(np.flatnonzero(missed)[0])))
    return MSystemCheck(True)


@dataclass
class PrimeRingReport:
    """Outcome of the three equivalent prime-ring criteria, checked separately.

    criterion 1: the zero ideal is prime;
    criterion 2: all nonzero a, b have both aRb and bRa nonzero;
    criterion 3: all nonzero a, b have at least one of aRb, bRa nonzero.
    On a non-prime ring, `symmetric_witness` is a pair (a, b) of nonzero
    elements with aRb = 0 = bRa.
    """

    ring_label: str
    is_prime: bool
    criteria: tuple[bool, bool, bool]
    symmetric_witness: tuple[int, int] | None = None
    zero_ring: bool = False


def _zero_products(ring: Ring) -> np.ndarray:
    """Boolean matrix Z[a, b] = (a R b == 0)."""
    n = ring.order
    z = np.zeros((n, n), dtype=bool)
    for a in range(n):
        arb = ring.mul[ring.mul[a, :], :]
        z[a] = (arb == 0).all(axis=0)
    return z


def is_prime_ring(ring: Ring) -> PrimeRingReport:
    """Evaluate the three prime-ring criteria independently and cross-check."""
    if ring.order == 1:
        return PrimeRingReport(ring.label, False, (False, False, False),
                               zero_ring=True)
    zero = _zero_products(ring)
    nz = slice(1, None)
    c1 = is_prime_ideal(ring, Ideal(ring, 1)).is_prime
    c2 = bool((~zero[nz, nz] & ~zero[nz, nz].T).all())
    c3 = bool((~zero[nz, nz] | ~zero[nz, nz].T).all())
    if not (c1 == c2 == c3):
        raise InternalConsistencyError(
            f"prime-ring criteria disagree on {ring.label}: {(c1, c2, c3)}")
    witness = None
    if not c1:
        witness = _symmetric_witness(ring, zero)
        a, b = witness
        if not (zero[a, b] and zero[b, a] and a and b):
            raise InternalConsistencyError(
                f"constructed witness {witness} is not symmetric on {ring.label}")
    return PrimeRingReport(ring.label, c1, (c1, c2, c3), witness)


def _symmetric_witness(ring: Ring, zero: np.ndarray) -> tuple[int, int]:
    """From the first pair x, y with xRy = 0, produce a, b with aRb = 0 = bRa.

    If yRx is also zero, (x, y) works; otherwise pick the first r with
    y*r*x nonzero and use a = b = y*r*x.
    """
    nonzero_pairs = np.argwhere(zero[1:, 1:])
    x, y = (int(v) + 1 for v in nonzero_pairs[0])
    if zero[y, x]:
        return x, y
    for r in range(ring.order):
        v = int(ring.mul[ring.mul[y, r], x])
        if v:
            return v, v
    raise InternalConsistencyError("yRx nonzero but no mediating r found")


@dataclass
class SpecResult:
    """Prime ideals of a ring with minimality flags and non-prime witnesses."""

    ring: Ring
    lattice: IdealLattice
    primes: list[Ideal]
    minimal_primes: list[Ideal]
    witnesses: dict[int, tuple[int, int]] = field(default_factory=dict)


def spectrum(lattice: IdealLattice) -> SpecResult:
    """Filter the two-sided lattice through the prime test; mark minimal primes."""
    ring = lattice.ring
    primes: list[Ideal] = []
    witnesses: dict[int, tuple[int, int]] = {}
    for ideal in lattice:
        if ideal.size() == ring.order:
            continue
        check = is_prime_ideal(ring, ideal)
        if check.is_prime:
            primes.append(ideal)
        else:
            witnesses[ideal.mask] = check.witness
    minimal = [p for p in primes
               if not any(q.mask != p.mask and bitsets.is_subset(q.mask, p.mask)
                          for q in primes)]
    return SpecResult(ring, lattice, primes, minimal, witnesses)


def max_in_complement(lattice: IdealLattice, member_masks) -> list[Ideal]:
    """Ideals maximal under containment among lattice members outside the family."""
    member_masks = set(member_masks)
    outside = [k for k, ideal in enumerate(lattice.ideals)
               if ideal.mask not in member_masks]
    return [lattice.ideals[k] for k in lattice.maximal_of(outside)]


def zero_as_product_of_minimal_primes(spec: SpecResult) -> list[Ideal] | None:
    """Breadth-first search for a product of minimal primes equal to zero.

    Returns the first witness sequence in BFS order, the empty sequence for
    the zero ring, or None when no product of minimal primes reaches zero.
    """
    if spec.ring.order == 1:
        return []
    minimal = spec.minimal_primes
    if not minimal:
        return None
    parent: dict[int, tuple[int, int] | None] = {}
    queue: list[int] = []
    for k, p in enumerate(minimal):
        if p.mask not in parent:
            parent[p.mask] = (-1, k)
            queue.append(p.mask)
    head = 0
    goal = 1
    while head < len(queue):
        mask = queue[head]
        head += 1
        if mask == goal:
            break
        state = Ideal(spec.ring, mask)
        for k, p in enumerate(minimal):
            nxt = product_ideals(state, p).mask
            if nxt not in parent:
                parent[nxt] = (mask, k)
                queue.append(nxt)
    if goal not in parent:
        return None
    seq: list[Ideal] = []
    mask = goal
    while True:
        prev, k = parent[mask]
        seq.append(minimal[k])
        if prev == -1:
            break
        mask = prev
    seq.reverse()
    return seq
