"""Named ideal-family constructors, each carrying its claimed closure property.

Every constructor returns a FamilyBuild whose `claimed` property is a theorem
about the construction; the harness re-checks the claim exhaustively on every
corpus ring.  Constructors whose defining data cannot exist at finite table
scale are stubbed with an explanatory error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import bitsets
from .errors import FamilyInputError, TheoremViolation, UnsupportedFamily
from .families import Family, family_from_masks
from .ideals import (LATTICE_CAP, RIGHT, LEFT, Ideal, IdealLattice, all_ideals,
                     ideal_closure, intersect_ideals, power_stabilization,
                     product_ideals, quotient_ring, sum_ideals)
from .modules import (RightModule, annihilator, middle_annihilator,
                      quotient_module, regular_module, submodule_as_module,
                      submodules)
from .primes import is_m_system
from .rings import Ring, central_idempotents, is_dedekind_finite, is_normal


@dataclass
class FamilyBuild:
    """A materialized named family plus its contract and diagnostics."""

    family: Family
    claimed: str
    degenerate: bool = False
    notes: list[str] = field(default_factory=list)
    extras: dict = field(default_factory=dict)


class RingContext:
    """One ring with lazily computed lattices, spectrum, modules, and caches.

    Profiles and submodule sweeps are memoized here so that repeated checks
    of the same family content, or of the same module, cost one computation.
    """

    def __init__(self, ring: Ring, *, lattice_cap: int = LATTICE_CAP):
        self.ring = ring
        self.lattice_cap = lattice_cap
        self._two = None
        self._right = None
        self._left = None
        self._regular = None
        self._profiles: dict[frozenset[int], object] = {}
        self._submodules: dict[int, list[int]] = {}
        self._cyclic: dict[int, RightModule] = {}
        self._cyclic_parts: dict[int, list[tuple[int, RightModule, RightModule]]] = {}

    @property
    def lattice(self) -> IdealLattice:
        if self._two is None:
            self._two = all_ideals(self.ring, lattice_cap=self.lattice_cap)
        return self._two

    @property
    def right_lattice(self) -> IdealLattice:
        if self._right is None:
            self._right = all_ideals(self.ring, RIGHT, lattice_cap=self.lattice_cap)
        return self._right

    @property
    def left_lattice(self) -> IdealLattice:
        if self._left is None:
            self._left = all_ideals(self.ring, LEFT, lattice_cap=self.lattice_cap)
        return self._left

    @property
    def regular(self) -> RightModule:
        if self._regular is None:
            self._regular = regular_module(self.ring)
        return self._regular

    def profile_of(self, family: Family):
        from .families import property_profile
        key = family.members
        if key not in self._profiles:
            self._profiles[key] = property_profile(self.lattice, family)
        return self._profiles[key]

    def submodules_of(self, module: RightModule) -> list[int]:
        key = id(module)
        if key not in self._submodules:
            self._submodules[key] = submodules(module)
        return self._submodules[key]

    def cyclic_factor(self, ideal_mask: int) -> RightModule:
        """The factor of the regular module by a two-sided ideal, cached."""
        if ideal_mask not in self._cyclic:
            self._cyclic[ideal_mask] = quotient_module(self.regular, ideal_mask)
        return self._cyclic[ideal_mask]

    def cyclic_factor_parts(self, ideal_mask: int):
        """(submodule, submodule-as-module, factor) triples of a cyclic factor."""
        if ideal_mask not in self._cyclic_parts:
            module = self.cyclic_factor(ideal_mask)
            parts = []
            for sub in self.submodules_of(module):
                parts.append((sub, submodule_as_module(module, sub),
                              quotient_module(module, sub)))
            self._cyclic_parts[ideal_mask] = parts
        return self._cyclic_parts[ideal_mask]


def _unit_mask(ring: Ring) -> int:
    return (1 << ring.order) - 1


def meets_m_system(ctx: RingContext, elements: Iterable[int]) -> FamilyBuild:
    """Ideals meeting a fixed m-system; a monoidal semifilter."""
    s = sorted({int(x) for x in elements})
    check = is_m_system(ctx.ring, s)
    if not check.holds:
        raise FamilyInputError(f"not an m-system: {check.reason} {check.witness or ''}")
    s_mask = bitsets.mask_of(s)
    masks = [i.mask for i in ctx.lattice if i.mask & s_mask]
    fam = family_from_masks(ctx.lattice, masks, f"meets-m-system{s}")
    return FamilyBuild(fam, "p1", extras={"m_system": s})


def point_annihilator_family(ctx: RingContext, module: RightModule) -> FamilyBuild:
    """Ideals killing no nonzero submodule of a fixed nonzero module.

    Also reports the maximal annihilators of nonzero submodules, which are
    exactly the ideals maximal outside the family and are each prime.
    """
    if module.is_zero():
        raise FamilyInputError("the zero module admits no point annihilators")
    ann_masks: set[int] = set()
    for sub in ctx.submodules_of(module):
        if sub != 1:
            ann_masks.add(annihilator(module, sub).mask)
    masks = [i.mask for i in ctx.lattice
             if not any(bitsets.is_subset(i.mask, a) for a in ann_masks)]
    fam = family_from_masks(ctx.lattice, masks, f"point-annihilators({module.label})")
    ann_idx = sorted(ctx.lattice.member_index(a) for a in ann_masks)
    maximal = [ctx.lattice.ideals[k] for k in ctx.lattice.maximal_of(ann_idx)]
    return FamilyBuild(fam, "p1", extras={"maximal_annihilators": maximal})


def left_faithful_family(ctx: RingContext) -> FamilyBuild:
    """Ideals with zero left annihilator, via the regular right module."""
    if ctx.ring.order == 1:
        raise FamilyInputError("left faithfulness is vacuous over the zero ring")
    build = point_annihilator_family(ctx, ctx.regular)
    fam = Family(ctx.ring, build.family.members, "left-faithful")
    return FamilyBuild(fam, "p1", extras=build.extras)


def middle_annihilator_family(ctx: RingContext) -> FamilyBuild:
    """Ideals I such that X*I*Y = 0 forces X*Y = 0 for all ideal pairs X, Y."""
    lat = ctx.lattice
    mids: set[int] = set()
    for x in lat.ideals:
        for y in lat.ideals:
            mid, qualifies = middle_annihilator(ctx.ring, x, y)
            if qualifies:
                mids.add(mid.mask)
    masks = [i.mask for i in lat
             if not any(bitsets.is_subset(i.mask, m) for m in mids)]
    fam = family_from_masks(lat, masks, "middle-annihilators")
    mid_idx = sorted(lat.member_index(m) for m in mids)
    maximal = [lat.ideals[k] for k in lat.maximal_of(mid_idx)]
    return FamilyBuild(fam, "p1", extras={"maximal_middle_annihilators": maximal})


def contains_member_family(ctx: RingContext, seed: Iterable[Ideal]) -> FamilyBuild:
    """Upward closure of a nonempty product-closed set of ideals."""
    seeds = {i.mask for i in seed}
    if not seeds:
        raise FamilyInputError("seed set of ideals is empty")
    lat = ctx.lattice
    for a in sorted(seeds):
        for b in sorted(seeds):
            prod = lat.ideals[lat.product_of(lat.member_index(a),
                                             lat.member_index(b))]
            if prod.mask not in seeds:
                raise FamilyInputError(
                    "seed set is not closed under products")
    masks = [i.mask for i in lat
             if any(bitsets.is_subset(s, i.mask) for s in seeds)]
    fam = family_from_masks(lat, masks, "contains-member")
    return FamilyBuild(fam, "p1", extras={"seed": sorted(seeds)})


def product_closure(lattice: IdealLattice, ideals: Iterable[Ideal]) -> list[Ideal]:
    """Close a set of lattice ideals under pairwise products."""
    known = {lattice.member_index(i.mask) for i in ideals}
    queue = sorted(known)
    head = 0
    while head < len(queue):
        cur = queue[head]
        head += 1
        for other in list(queue):
            for k in (lattice.product_of(cur, other),
                      lattice.product_of(other, cur)):
                if k not in known:
                    known.add(k)
                    queue.append(k)
    return [lattice.ideals[k] for k in sorted(known)]


def artin_rees_family(ctx: RingContext) -> FamilyBuild:
    """Ideals I with: every right ideal K has K meet I^n inside K*I for some n.

    The exponent search stops at the stabilization index of the powers of I:
    the chain of powers descends, so the containment fails for every larger
    exponent exactly when it fails at the stable power.
    """
    lat = ctx.lattice
    right = ctx.right_lattice
    masks = []
    witnesses = {}
    for ideal in lat.ideals:
        chain, _ = power_stabilization(ideal)
        stable = chain[-1]
        ok = True
        for k in right.ideals:
            ki = product_ideals(k, ideal, allow_mixed=True)
            if (k.mask & stable.mask) & ~ki.mask:
                ok = False
                witnesses[ideal.mask] = {"k": k.mask, "stable_power": stable.mask}
                break
        if ok:
            masks.append(ideal.mask)
    fam = family_from_masks(lat, masks, "artin-rees")
    return FamilyBuild(
        fam, "p2",
        notes=["exponent search capped at the power-stabilization index; "
               "powers descend, so failure there is failure for all larger n"],
        extras={"witnesses": witnesses})


def idempotent_family(ctx: RingContext, elements: Iterable[int]) -> FamilyBuild:
    """Ideals generated by the members of a multiplicative set of central idempotents."""
    s = sorted({int(x) for x in elements})
    central = set(central_idempotents(ctx.ring))
    if not set(s) <= central:
        raise FamilyInputError("set contains a non-central or non-idempotent element")
    if ctx.ring.one not in s:
        raise FamilyInputError("multiplicative set must contain 1")
    for a in s:
        for b in s:
            if int(ctx.ring.mul[a, b]) not in s:
                raise FamilyInputError("set of idempotents is not product-closed")
    masks = [ideal_closure(ctx.ring, [e]).mask for e in s]
    fam = family_from_masks(ctx.lattice, masks, f"idempotent-generated{s}")
    # The certified contract is the squeeze A*B <= I <= A-meet-B: for central
    # idempotents (e)(f) = (e) meet (f) = (ef), so the squeeze collapses.
    # The stronger I^2 <= J <= I closure is refutable: with 0 in S, any
    # square-zero ideal outside the family violates it (e.g. (2) in Z4).
    return FamilyBuild(fam, "p3", extras={"idempotents": s})


def _corner_ring(ring: Ring, e: int) -> Ring:
    els = np.unique(ring.mul[ring.mul[e, :], e])
    pos = np.full(ring.order, -1, dtype=np.int32)
    pos[els] = np.arange(len(els))
    add = pos[ring.add[np.ix_(els, els)]]
    mul = pos[ring.mul[np.ix_(els, els)]]
    return Ring(add, mul, int(pos[e]), f"{ring.label}.corner({e})")


def decompose_into_simple_rings(ring: Ring) -> dict:
    """Independent test that the ring is a finite direct product of simple rings.

    Finds the minimal nonzero central idempotents, checks they are orthogonal
    and sum to 1, and tests each corner ring for simplicity by enumerating
    its ideal lattice.
    """
    cis = central_idempotents(ring)
    nonzero = [e for e in cis if e != 0]

    def below(f: int, e: int) -> bool:
        return int(ring.mul[f, e]) == f

    atoms = [e for e in nonzero
             if not any(f not in (0, e) and below(f, e) for f in cis)]
    total = 0
    for e in atoms:
        total = int(ring.add[total, e])
    orthogonal = all(int(ring.mul[a, b]) == 0
                     for a in atoms for b in atoms if a != b)
    corners_simple = []
    for e in atoms:
        corner = _corner_ring(ring, e)
        corners_simple.append(len(all_ideals(corner)) == 2)
    is_product = (ring.order == 1 or
                  (orthogonal and total == ring.one and all(corners_simple)))
    return {"atoms": atoms, "orthogonal": orthogonal,
            "atoms_sum_to_one": total == ring.one,
            "corners_simple": corners_simple,
            "is_product_of_simple_rings": bool(is_product)}


def direct_summand_family(ctx: RingContext) -> FamilyBuild:
    """Ideal direct summands: ideals generated by central idempotents.

    Extras compare "every ideal is a summand" with an independent
    product-of-simple-rings decomposition, and record that each ideal maximal
    outside the family is a maximal ideal (not merely prime).
    """
    build = idempotent_family(ctx, central_idempotents(ctx.ring))
    fam = Family(ctx.ring, build.family.members, "direct-summands")
    lat = ctx.lattice
    from .primes import max_in_complement
    maxc = max_in_complement(lat, fam.members)
    unit = lat.unit_index
    all_maximal = True
    for m in maxc:
        k = lat.member_index(m.mask)
        above = [j for j in range(len(lat)) if lat.leq(k, j)]
        if sorted(above) != sorted({k, unit}):
            all_maximal = False
    decomposition = decompose_into_simple_rings(ctx.ring)
    covers_all = len(fam.members) == len(lat)
    return FamilyBuild(
        fam, "p3",
        extras={"max_complement_all_maximal": all_maximal,
                "covers_all_ideals": covers_all,
                "decomposition": decomposition})


def dedekind_finite_factor_family(ctx: RingContext) -> FamilyBuild:
    """Ideals whose factor ring is Dedekind finite; all of them, at finite scale."""
    masks = [i.mask for i in ctx.lattice
             if is_dedekind_finite(quotient_ring(i))]
    fam = family_from_masks(ctx.lattice, masks, "dedekind-finite-factors")
    return FamilyBuild(
        fam, "p3", degenerate=True,
        notes=["factor rings of a finite ring are finite, hence Dedekind "
               "finite; the family is degenerately the whole lattice"])


def flat_factor_family(ctx: RingContext) -> FamilyBuild:
    """Ideals I with I meet L inside I*L for every left ideal L."""
    lat = ctx.lattice
    left = ctx.left_lattice
    masks = []
    witnesses = {}
    for ideal in lat.ideals:
        ok = True
        for l in left.ideals:
            il = product_ideals(ideal, l, allow_mixed=True)
            if (ideal.mask & l.mask) & ~il.mask:
                ok = False
                witnesses[ideal.mask] = {"l": l.mask}
                break
        if ok:
            masks.append(ideal.mask)
    fam = family_from_masks(lat, masks, "flat-factors")
    return FamilyBuild(fam, "p3", extras={"witnesses": witnesses})


def principal_normal_family(ctx: RingContext, elements: Iterable[int]) -> FamilyBuild:
    """Ideals generated by the members of a multiplicative set of normal elements."""
    s = sorted({int(x) for x in elements})
    if ctx.ring.one not in s:
        raise FamilyInputError("multiplicative set must contain 1")
    for x in s:
        if not is_normal(ctx.ring, x):
            raise FamilyInputError(f"element {x} is not normal")
    for a in s:
        for b in s:
            if int(ctx.ring.mul[a, b]) not in s:
                raise FamilyInputError("set of normal elements is not product-closed")
    masks = [ideal_closure(ctx.ring, [x]).mask for x in s]
    fam = family_from_masks(ctx.lattice, masks, f"principal-normal{s}")
    return FamilyBuild(fam, "strongly_r_oka", extras={"normal_elements": s})


def _one_sided_principal_masks(ring: Ring) -> tuple[list[int], list[int]]:
    rights = [bitsets.indices_to_mask(np.unique(ring.mul[a, :]))
              for a in range(ring.order)]
    lefts = [bitsets.indices_to_mask(np.unique(ring.mul[:, a]))
             for a in range(ring.order)]
    return rights, lefts


def left_right_principal_family(ctx: RingContext) -> FamilyBuild:
    """Two-sided ideals that are principal as a right ideal and as a left ideal."""
    rights, lefts = _one_sided_principal_masks(ctx.ring)
    masks = [i.mask for i in ctx.lattice
             if i.mask in rights and i.mask in lefts]
    fam = family_from_masks(ctx.lattice, masks, "left-right-principal")
    return FamilyBuild(fam, "r_oka")


@dataclass
class LeftRightPrincipalReport:
    ring_label: str
    checked_pairs: int
    family: FamilyBuild
    product_closed: bool


def verify_left_right_principal(ctx: RingContext) -> LeftRightPrincipalReport:
    """Sweep all (I, a, b) with I = aR = Rb: then I = bR and b is normal.

    Finite rings satisfy the chain condition this rests on.  Also checks the
    derived family is closed under products (products of right-principal
    ideals are right-principal, generated by the product of generators).
    """
    ring = ctx.ring
    rights, lefts = _one_sided_principal_masks(ring)
    checked = 0
    for ideal in ctx.lattice.ideals:
        gens_r = [a for a in range(ring.order) if rights[a] == ideal.mask]
        gens_l = [b for b in range(ring.order) if lefts[b] == ideal.mask]
        if not gens_r or not gens_l:
            continue
        for b in gens_l:
            checked += 1
            if rights[b] != ideal.mask or not is_normal(ring, b):
                raise TheoremViolation(
                    "left-right principal generator is not normal",
                    {"ring": ring.label, "ideal": ideal.mask, "b": b})
    build = left_right_principal_family(ctx)
    lat = ctx.lattice
    product_closed = True
    member_idx = sorted(lat.member_index(m) for m in build.family.members)
    for i in member_idx:
        for j in member_idx:
            if lat.ideals[lat.product_of(i, j)].mask not in build.family.members:
                product_closed = False
    if not product_closed:
        raise TheoremViolation(
            "left-right principal family is not product-closed",
            {"ring": ring.label})
    return LeftRightPrincipalReport(ring.label, checked, build, product_closed)


def factor_predicate_family(ctx: RingContext,
                            pred: Callable[[RightModule], bool],
                            name: str = "factor-predicate") -> FamilyBuild:
    """Ideals whose cyclic factor module satisfies a predicate.

    The predicate must hold on the zero module and describe a module class
    closed under quotients and extensions; both closures are validated by
    sampling the ring's cyclic modules and their submodules (a certificate,
    not a proof).  At this scale every ideal is finitely generated as a right
    ideal, which is what lets the closure properties yield the contract.
    """
    lat = ctx.lattice
    samples = {i.mask: ctx.cyclic_factor(i.mask) for i in lat.ideals}
    zero_mod = samples[(1 << ctx.ring.order) - 1]
    if not pred(zero_mod):
        raise FamilyInputError("predicate rejects the zero module")
    for mask, module in sorted(samples.items()):
        p_m = pred(module)
        for sub, inner, quot in ctx.cyclic_factor_parts(mask):
            if p_m and not pred(quot):
                raise FamilyInputError(
                    f"predicate class not closed under quotients "
                    f"(module of order {module.order}, submodule of size "
                    f"{bitsets.popcount(sub)})")
            if pred(inner) and pred(quot) and not p_m:
                raise FamilyInputError(
                    f"predicate class not closed under extensions "
                    f"(module of order {module.order}, submodule of size "
                    f"{bitsets.popcount(sub)})")
    masks = [mask for mask, module in samples.items() if pred(module)]
    fam = family_from_masks(lat, masks, name)
    return FamilyBuild(
        fam, "p1",
        notes=["closure under quotients and extensions certified by sampling "
               "cyclic modules; finite generation of ideals is automatic here"])


def pred_annihilator_meets(elements: Iterable[int]) -> Callable[[RightModule], bool]:
    """Predicate: the module's annihilator meets the given element set."""
    s = {int(x) for x in elements}

    def pred(module: RightModule) -> bool:
        ann = annihilator(module)
        return any(int(a) in s for a in ann.indices())

    return pred


def pred_torsion(elements: Iterable[int]) -> Callable[[RightModule], bool]:
    """Predicate: every module element is killed by some member of the set."""
    s = sorted({int(x) for x in elements})

    def pred(module: RightModule) -> bool:
        act = module.action[:, s]
        return bool((act == 0).any(axis=1).all())

    return pred


def torsion_family_direct(ctx: RingContext, elements: Iterable[int]) -> Family:
    """The torsion family computed from its elementwise description."""
    s = sorted({int(x) for x in elements})
    ring = ctx.ring
    masks = []
    for ideal in ctx.lattice.ideals:
        inside = ideal.bools()
        if inside[ring.mul[:, s]].any(axis=1).all():
            masks.append(ideal.mask)
    return family_from_masks(ctx.lattice, masks, f"torsion{s}")


_OUT_OF_SCOPE: dict[str, str] = {
    "pi_algebra_factor": "needs polynomial identities in noncommuting "
                         "indeterminates; table rings carry no symbols",
    "integral_over_base_factor": "needs monic polynomials over an external "
                                 "base ring; every element of a finite ring "
                                 "is trivially integral",
    "invertible_ideal": "needs a proper overring of quotients; the only "
                        "overring available here is the ring itself",
    "right_artinian_factor": "chain conditions hold for free on finite "
                             "rings; the family degenerates to all ideals",
    "right_noetherian_factor": "chain conditions hold for free on finite "
                               "rings; the family degenerates to all ideals",
    "strongly_noetherian_factor": "needs base change along infinite "
                                  "commutative noetherian extensions",
    "module_finite_factor": "module-finiteness over a base is automatic for "
                            "finite rings; the family degenerates",
}


def unsupported_family(name: str) -> FamilyBuild:
    reason = _OUT_OF_SCOPE.get(name)
    if reason is None:
        raise UnsupportedFamily(f"unknown family constructor: {name}")
    raise UnsupportedFamily(f"{name}: out of scope: {reason}")


def registry_names() -> list[str]:
    return sorted(list(_REGISTRY) + list(_OUT_OF_SCOPE))


def build_named_family(ctx: RingContext, name: str, params: dict) -> FamilyBuild:
    """Resolve a named family from a description or CLI parameters."""
    if name in _OUT_OF_SCOPE:
        return unsupported_family(name)
    if name not in _REGISTRY:
        raise UnsupportedFamily(
            f"unknown family constructor: {name}; known: {registry_names()}")
    return _REGISTRY[name](ctx, params)


def _ideals_from_gens(ctx: RingContext, gens_list) -> list[Ideal]:
    return [ideal_closure(ctx.ring, gens) for gens in gens_list]


_REGISTRY: dict[str, Callable[[RingContext, dict], FamilyBuild]] = {
    "meets_m_system": lambda ctx, p: meets_m_system(ctx, p["s"]),
    "point_annihilator": lambda ctx, p: point_annihilator_family(
        ctx, _module_param(ctx, p)),
    "left_faithful": lambda ctx, p: left_faithful_family(ctx),
    "middle_annihilator": lambda ctx, p: middle_annihilator_family(ctx),
    "contains_member": lambda ctx, p: contains_member_family(
        ctx, _ideals_from_gens(ctx, p["ideals"])),
    "artin_rees": lambda ctx, p: artin_rees_family(ctx),
    "idempotent": lambda ctx, p: idempotent_family(ctx, p["s"]),
    "direct_summand": lambda ctx, p: direct_summand_family(ctx),
    "dedekind_finite_factor": lambda ctx, p: dedekind_finite_factor_family(ctx),
    "flat_factor": lambda ctx, p: flat_factor_family(ctx),
    "principal_normal": lambda ctx, p: principal_normal_family(ctx, p["s"]),
    "left_right_principal": lambda ctx, p: left_right_principal_family(ctx),
    "annihilator_meets": lambda ctx, p: factor_predicate_family(
        ctx, pred_annihilator_meets(p["s"]), f"annihilator-meets{sorted(p['s'])}"),
    "s_torsion": lambda ctx, p: factor_predicate_family(
        ctx, pred_torsion(p["s"]), f"s-torsion{sorted(p['s'])}"),
}


def _module_param(ctx: RingContext, params: dict) -> RightModule:
    desc = params.get("module", {"type": "regular"})
    if desc.get("type") == "regular":
        return ctx.regular
    if desc.get("type") == "quotient":
        ideal = ideal_closure(ctx.ring, desc["ideal_gens"])
        return quotient_module(ctx.regular, ideal.mask)
    raise FamilyInputError(f"unknown module description: {desc}")
