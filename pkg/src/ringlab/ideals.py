"""Ideals as bit-vector subsets, closure arithmetic, and full ideal lattices.

An ideal is canonically identified by its membership bitmask, so ideals are
hashable values and lattices can be deduplicated and sorted deterministically
by (popcount, mask).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from . import bitsets
from .errors import CapExceeded, NotAnIdeal
from .rings import Ring, build_quotient

LATTICE_CAP = 4096

Sidedness = Literal["two-sided", "right", "left"]

TWO_SIDED: Sidedness = "two-sided"
RIGHT: Sidedness = "right"
LEFT: Sidedness = "left"


@dataclass(frozen=True)
class Ideal:
    """A subset of a ring closed under the ideal axioms for its sidedness tag."""

    ring: Ring
    mask: int
    sidedness: Sidedness = TWO_SIDED

    def indices(self) -> np.ndarray:
        return bitsets.mask_to_indices(self.mask, self.ring.order)

    def bools(self) -> np.ndarray:
        return bitsets.mask_to_bool(self.mask, self.ring.order)

    def size(self) -> int:
        return bitsets.popcount(self.mask)

    def is_zero(self) -> bool:
        return self.mask == 1

    def is_unit(self) -> bool:
        return self.size() == self.ring.order

    def __contains__(self, elem: int) -> bool:
        return bitsets.contains(self.mask, elem)

    def __le__(self, other: "Ideal") -> bool:
        return bitsets.is_subset(self.mask, other.mask)

    def __repr__(self) -> str:
        return f"Ideal({self.ring.label}, {sorted_indices(self)}, {self.sidedness})"


def sorted_indices(ideal: Ideal) -> list[int]:
    return [int(x) for x in ideal.indices()]


def _require_same_ring(a: Ideal, b: Ideal) -> None:
    if a.ring is not b.ring:
        raise ValueError("ideals belong to different rings")


def _additive_closure(ring: Ring, seed: np.ndarray) -> int:
    """Smallest subgroup of (R,+) containing the seed elements."""
    cur = np.unique(np.concatenate((np.zeros(1, dtype=np.int64), seed.ravel(),
                                    ring.neg[seed.ravel().astype(np.int32)])))
    cur = cur.astype(np.int32)
    while True:
        nxt = np.unique(ring.add[np.ix_(cur, cur)])
        if nxt.size == cur.size:
            return bitsets.indices_to_mask(cur)
        cur = nxt


def ideal_closure(ring: Ring, gens: Iterable[int],
                  sidedness: Sidedness = TWO_SIDED) -> Ideal:
    """Least ideal of the requested sidedness containing the generators."""
    glist = [int(x) for x in gens]
    if not glist:
        return Ideal(ring, 1, sidedness)
    g = np.unique(np.array(glist, dtype=np.int32))
    if g.min() < 0 or g.max() >= ring.order:
        raise ValueError("generator index out of range")
    if sidedness == TWO_SIDED:
        left = np.unique(ring.mul[:, g])
        seed = ring.mul[np.ix_(left.astype(np.int32), np.arange(ring.order))]
    elif sidedness == RIGHT:
        seed = ring.mul[g, :]
    elif sidedness == LEFT:
        seed = ring.mul[:, g]
    else:
        raise ValueError(f"unknown sidedness: {sidedness}")
    return Ideal(ring, _additive_closure(ring, np.unique(seed)), sidedness)


def principal(ring: Ring, a: int, sidedness: Sidedness = TWO_SIDED) -> Ideal:
    return ideal_closure(ring, [a], sidedness)


def zero_ideal(ring: Ring, sidedness: Sidedness = TWO_SIDED) -> Ideal:
    return Ideal(ring, 1, sidedness)


def unit_ideal(ring: Ring, sidedness: Sidedness = TWO_SIDED) -> Ideal:
    return Ideal(ring, (1 << ring.order) - 1, sidedness)


def is_ideal_mask(ring: Ring, mask: int, sidedness: Sidedness = TWO_SIDED) -> bool:
    """Membership-level check of the ideal axioms for a bitmask."""
    if not mask & 1:
        return False
    idx = bitsets.mask_to_indices(mask, ring.order)
    inside = bitsets.mask_to_bool(mask, ring.order)
    if not inside[ring.add[np.ix_(idx, idx)]].all():
        return False
    if sidedness in (TWO_SIDED, RIGHT) and not inside[ring.mul[idx, :]].all():
        return False
    if sidedness in (TWO_SIDED, LEFT) and not inside[ring.mul[:, idx]].all():
        return False
    return True


def verify_ideal(ideal: Ideal) -> Ideal:
    if not is_ideal_mask(ideal.ring, ideal.mask, ideal.sidedness):
        raise NotAnIdeal(f"subset is not a {ideal.sidedness} ideal")
    return ideal


def sum_ideals(a: Ideal, b: Ideal) -> Ideal:
    """Elementwise sumset; for ideals of equal sidedness this is their join."""
    _require_same_ring(a, b)
    if a.sidedness != b.sidedness:
        raise ValueError("cannot sum ideals of different sidedness")
    mask = bitsets.indices_to_mask(
        np.unique(a.ring.add[np.ix_(a.indices(), b.indices())]))
    return Ideal(a.ring, mask, a.sidedness)


def product_ideals(a: Ideal, b: Ideal, *, allow_mixed: bool = False) -> Ideal:
    """Additive closure of the pairwise products.

    Two-sided inputs by default.  With `allow_mixed`, a right ideal may be
    multiplied by a two-sided one (result is right), and a two-sided ideal by
    a left one (result is left); those are the only mixed cases where the
    pairwise-product closure is again an ideal.
    """
    _require_same_ring(a, b)
    if a.sidedness == TWO_SIDED and b.sidedness == TWO_SIDED:
        out = TWO_SIDED
    elif allow_mixed and a.sidedness == RIGHT and b.sidedness == TWO_SIDED:
        out = RIGHT
    elif allow_mixed and a.sidedness == TWO_SIDED and b.sidedness == LEFT:
        out = LEFT
    else:
        raise ValueError(
            f"unsupported product sidedness: {a.sidedness} * {b.sidedness}")
    pairwise = np.unique(a.ring.mul[np.ix_(a.indices(), b.indices())])
    return Ideal(a.ring, _additive_closure(a.ring, pairwise), out)


def intersect_ideals(a: Ideal, b: Ideal) -> Ideal:
    _require_same_ring(a, b)
    side = a.sidedness if a.sidedness == b.sidedness else TWO_SIDED
    return Ideal(a.ring, a.mask & b.mask, side)


def left_quotient(j: Ideal, i: Ideal) -> Ideal:
    """All x with J*x inside I (both ideals two-sided; result is two-sided)."""
    _require_same_ring(j, i)
    ring = j.ring
    ok = i.bools()[ring.mul[j.indices(), :]].all(axis=0)
    return Ideal(ring, bitsets.bool_to_mask(ok), TWO_SIDED)


def right_quotient(i: Ideal, j: Ideal) -> Ideal:
    """All x with x*J inside I (both ideals two-sided; result is two-sided)."""
    _require_same_ring(i, j)
    ring = i.ring
    ok = i.bools()[ring.mul[:, j.indices()]].all(axis=1)
    return Ideal(ring, bitsets.bool_to_mask(ok), TWO_SIDED)


def element_quotients(i: Ideal, a: int) -> tuple[Ideal, Ideal]:
    """The pair of quotients of I by the two-sided ideal generated by a."""
    j = ideal_closure(i.ring, [a], TWO_SIDED)
    return left_quotient(j, i), right_quotient(i, j)


def power_stabilization(ideal: Ideal) -> tuple[list[Ideal], int]:
    """Descending chain of powers until it repeats; returns (chain, index).

    The chain holds the distinct powers; the index n satisfies
    chain[-1] = I**n = I**(n+1).
    """
    chain = [ideal]
    n = 1
    while True:
        nxt = product_ideals(chain[-1], ideal)
        if nxt.mask == chain[-1].mask:
            return chain, n
        chain.append(nxt)
        n += 1


def generators(ideal: Ideal) -> list[int]:
    """Irredundant generating set, deterministic in element order."""
    gens: list[int] = []
    have = zero_ideal(ideal.ring, ideal.sidedness)
    for x in ideal.indices():
        if int(x) not in have:
            gens.append(int(x))
            have = sum_ideals(have, ideal_closure(ideal.ring, [x], ideal.sidedness))
            if have.mask == ideal.mask:
                break
    reduced: list[int] = []
    for k, g in enumerate(gens):
        others = reduced + gens[k + 1:]
        if ideal_closure(ideal.ring, others, ideal.sidedness).mask != ideal.mask:
            reduced.append(g)
    return reduced


def quotient_ring(ideal: Ideal) -> Ring:
    """Factor ring by a two-sided ideal, labelled by a generating set."""
    if ideal.sidedness != TWO_SIDED:
        raise NotAnIdeal("factor rings require a two-sided ideal")
    gens = generators(ideal)
    label = f"{ideal.ring.label}/({','.join(map(str, gens))})"
    return build_quotient(ideal.ring, sorted_indices(ideal), label)


class IdealLattice:
    """All ideals of one sidedness, sorted, with memoized arithmetic tables."""

    def __init__(self, ring: Ring, ideals: list[Ideal], sidedness: Sidedness):
        self.ring = ring
        self.sidedness = sidedness
        self.ideals = sorted(ideals, key=lambda i: (i.size(), i.mask))
        self.index = {i.mask: k for k, i in enumerate(self.ideals)}
        self._sum: dict[tuple[int, int], int] = {}
        self._prod: dict[tuple[int, int], int] = {}
        self._meet: dict[tuple[int, int], int] = {}
        self._lquot: dict[tuple[int, int], int] = {}
        self._rquot: dict[tuple[int, int], int] = {}
        self._principal: list[int] | None = None
        self._join_elem: dict[tuple[int, int], int] = {}
        self._elem_lquot: dict[tuple[int, int], int] = {}
        self._elem_rquot: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    @property
    def zero_index(self) -> int:
        return self.index[1]

    @property
    def unit_index(self) -> int:
        return self.index[(1 << self.ring.order) - 1]

    def member_index(self, ideal_or_mask) -> int:
        mask = ideal_or_mask.mask if isinstance(ideal_or_mask, Ideal) else ideal_or_mask
        try:
            return self.index[mask]
        except KeyError:
            raise NotAnIdeal(
                f"subset with {bitsets.popcount(mask)} elements is not in the "
                f"{self.sidedness} ideal lattice of {self.ring.label}") from None

    def leq(self, i: int, j: int) -> bool:
        return bitsets.is_subset(self.ideals[i].mask, self.ideals[j].mask)

    def maximal_of(self, subset: Iterable[int]) -> list[int]:
        """Indices maximal under containment within the given index subset."""
        items = sorted(set(subset))
        return [i for i in items
                if not any(j != i and self.leq(i, j) for j in items)]

    def sum_of(self, i: int, j: int) -> int:
        key = (i, j) if i <= j else (j, i)
        if key not in self._sum:
            self._sum[key] = self.member_index(
                sum_ideals(self.ideals[i], self.ideals[j]))
        return self._sum[key]

    def product_of(self, i: int, j: int) -> int:
        if (i, j) not in self._prod:
            self._prod[(i, j)] = self.member_index(
                product_ideals(self.ideals[i], self.ideals[j]))
        return self._prod[(i, j)]

    def meet_of(self, i: int, j: int) -> int:
        key = (i, j) if i <= j else (j, i)
        if key not in self._meet:
            self._meet[key] = self.member_index(
                self.ideals[i].mask & self.ideals[j].mask)
        return self._meet[key]

    def left_quot(self, j: int, i: int) -> int:
        """Index of {x : J x inside I}."""
        if (j, i) not in self._lquot:
            self._lquot[(j, i)] = self.member_index(
                left_quotient(self.ideals[j], self.ideals[i]))
        return self._lquot[(j, i)]

    def right_quot(self, i: int, j: int) -> int:
        """Index of {x : x J inside I}."""
        if (i, j) not in self._rquot:
            self._rquot[(i, j)] = self.member_index(
                right_quotient(self.ideals[i], self.ideals[j]))
        return self._rquot[(i, j)]

    def principal_of(self, a: int) -> int:
        if self._principal is None:
            self._principal = [-1] * self.ring.order
        if self._principal[a] < 0:
            self._principal[a] = self.member_index(
                ideal_closure(self.ring, [a], self.sidedness))
        return self._principal[a]

    def join_elem(self, i: int, a: int) -> int:
        """Index of I + (a)."""
        if (i, a) not in self._join_elem:
            self._join_elem[(i, a)] = self.sum_of(i, self.principal_of(a))
        return self._join_elem[(i, a)]

    def elem_lquot(self, i: int, a: int) -> int:
        """Index of {x : (a) x inside I}."""
        if (i, a) not in self._elem_lquot:
            self._elem_lquot[(i, a)] = self.left_quot(self.principal_of(a), i)
        return self._elem_lquot[(i, a)]

    def elem_rquot(self, i: int, a: int) -> int:
        """Index of {x : x (a) inside I}."""
        if (i, a) not in self._elem_rquot:
            self._elem_rquot[(i, a)] = self.right_quot(i, self.principal_of(a))
        return self._elem_rquot[(i, a)]


def all_ideals(ring: Ring, sidedness: Sidedness = TWO_SIDED, *,
               lattice_cap: int = LATTICE_CAP) -> IdealLattice:
    """Every ideal of the given sidedness.

    Seeds with the principal ideals and the zero ideal, then closes under
    pairwise sums; complete because every ideal is the sum of its principal
    subideals.
    """
    known: dict[int, Ideal] = {}
    queue: list[Ideal] = []

    def push(ideal: Ideal) -> None:
        if ideal.mask not in known:
            known[ideal.mask] = ideal
            queue.append(ideal)
            if len(known) > lattice_cap:
                raise CapExceeded(
                    f"{sidedness} ideal lattice of {ring.label} exceeds cap "
                    f"{lattice_cap}")

    push(zero_ideal(ring, sidedness))
    for x in ring.elements():
        push(ideal_closure(ring, [x], sidedness))

    head = 0
    while head < len(queue):
        current = queue[head]
        head += 1
        for other in list(known.values()):
            push(sum_ideals(current, other))

    return IdealLattice(ring, list(known.values()), sidedness)
