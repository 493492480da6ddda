"""Finite right modules: submodule enumeration, annihilators, quotients."""

from __future__ import annotations

import numpy as np

from . import bitsets
from .errors import CapExceeded, NotAnIdeal, RingAxiomError
from .ideals import LATTICE_CAP, TWO_SIDED, Ideal, product_ideals, verify_ideal
from .rings import ORDER_CAP, Ring, _validate_abelian_group

MODULE_CAP = ORDER_CAP


class RightModule:
    """A finite abelian group with a unital associative right ring action."""

    def __init__(self, ring: Ring, add_table, action, label: str):
        add = np.asarray(add_table, dtype=np.int32)
        self.ring = ring
        self.add = add
        self.order = add.shape[0]
        self.action = np.asarray(action, dtype=np.int32)
        self.label = label
        if self.action.shape != (self.order, ring.order):
            raise RingAxiomError("table-shape", detail="action shape mismatch")
        self.neg = _validate_abelian_group(add, "module")
        self._validate_action()

    def _validate_action(self) -> None:
        act, ring = self.action, self.ring
        if not np.array_equal(act[:, ring.one], np.arange(self.order)):
            raise RingAxiomError("unital-action", (ring.one,))
        for m in range(self.order):
            row = act[m]
            # m*(r+s) = m*r + m*s
            if not np.array_equal(row[ring.add], self.add[row[:, None], row[None, :]]):
                raise RingAxiomError("action-additivity-ring", (m,))
            # m*(r*s) = (m*r)*s
            if not np.array_equal(row[ring.mul], act[row, :]):
                raise RingAxiomError("action-associativity", (m,))
        for r in range(ring.order):
            col = act[:, r]
            # (m+m')*r = m*r + m'*r
            if not np.array_equal(col[self.add], self.add[col[:, None], col[None, :]]):
                raise RingAxiomError("action-additivity-module", (r,))

    def is_zero(self) -> bool:
        return self.order == 1

    def __repr__(self) -> str:
        return f"RightModule({self.label}, order={self.order}, over={self.ring.label})"


def regular_module(ring: Ring) -> RightModule:
    """The ring acting on itself by right multiplication."""
    return RightModule(ring, ring.add, ring.mul, f"{ring.label}_reg")


def is_submodule_mask(module: RightModule, mask: int) -> bool:
    if not mask & 1:
        return False
    idx = bitsets.mask_to_indices(mask, module.order)
    inside = bitsets.mask_to_bool(mask, module.order)
    if not inside[module.add[np.ix_(idx, idx)]].all():
        return False
    return bool(inside[module.action[idx, :]].all())


def submodules(module: RightModule, *, cap: int = LATTICE_CAP) -> list[int]:
    """All action-closed subgroups as bitmasks, sorted by (size, mask).

    Cyclic submodules m*R are already subgroups, so the fixpoint only needs
    pairwise sums.
    """
    known: set[int] = set()
    queue: list[int] = []

    def push(mask: int) -> None:
        if mask not in known:
            known.add(mask)
            queue.append(mask)
            if len(known) > cap:
                raise CapExceeded(f"submodule lattice of {module.label} exceeds cap {cap}")

    push(1)
    for m in range(module.order):
        push(bitsets.indices_to_mask(np.unique(module.action[m])))

    head = 0
    while head < len(queue):
        cur = bitsets.mask_to_indices(queue[head], module.order)
        head += 1
        for other in sorted(known):
            oidx = bitsets.mask_to_indices(other, module.order)
            push(bitsets.indices_to_mask(
                np.unique(module.add[np.ix_(cur, oidx)])))

    return sorted(known, key=lambda m: (bitsets.popcount(m), m))


def quotient_module(module: RightModule, sub_mask: int) -> RightModule:
    """Coset module by a submodule, on least-index representatives."""
    if not is_submodule_mask(module, sub_mask):
        raise NotAnIdeal("subset is not a submodule")
    idx = bitsets.mask_to_indices(sub_mask, module.order)
    reps = module.add[:, idx].min(axis=1)
    rep_values = np.unique(reps)
    class_of = np.searchsorted(rep_values, reps).astype(np.int32)
    add = class_of[module.add[np.ix_(rep_values, rep_values)]]
    act = class_of[module.action[rep_values, :]]
    return RightModule(module.ring, add, act,
                       f"{module.label}/|{len(idx)}|")


def submodule_as_module(module: RightModule, sub_mask: int) -> RightModule:
    """A submodule reindexed as a standalone right module."""
    if not is_submodule_mask(module, sub_mask):
        raise NotAnIdeal("subset is not a submodule")
    idx = bitsets.mask_to_indices(sub_mask, module.order)
    pos = np.full(module.order, -1, dtype=np.int32)
    pos[idx] = np.arange(len(idx))
    add = pos[module.add[np.ix_(idx, idx)]]
    act = pos[module.action[idx, :]]
    return RightModule(module.ring, add, act, f"{module.label}|{len(idx)}|")


def annihilator(module: RightModule, sub_mask: int | None = None) -> Ideal:
    """The two-sided ideal killing the module (or the given submodule of it)."""
    if sub_mask is None:
        idx = np.arange(module.order)
    else:
        idx = bitsets.mask_to_indices(sub_mask, module.order)
    kills = (module.action[idx, :] == 0).all(axis=0)
    ideal = Ideal(module.ring, bitsets.bool_to_mask(kills), TWO_SIDED)
    return verify_ideal(ideal)


def middle_annihilator(ring: Ring, x: Ideal, y: Ideal) -> tuple[Ideal, bool]:
    """The ideal of elements r with X r Y = 0, plus whether X*Y is nonzero.

    Only when X*Y != 0 does the returned ideal count as a middle annihilator.
    """
    xi, yi = x.indices(), y.indices()
    xr = ring.mul[np.ix_(xi, np.arange(ring.order))]        # (|X|, n): x*r
    flat = ring.mul[np.ix_(xr.ravel(), yi)]                 # (|X|*n, |Y|)
    ok = (flat.reshape(len(xi), ring.order, len(yi)) == 0).all(axis=(0, 2))
    ideal = verify_ideal(Ideal(ring, bitsets.bool_to_mask(ok), TWO_SIDED))
    qualifies = not product_ideals(x, y).is_zero()
    return ideal, qualifies
