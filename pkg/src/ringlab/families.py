"""Explicit ideal families and their closure-property checkers.

Every checker is a finite quantifier sweep over the two-sided ideal lattice.
Sweeps run in lexicographic order (lattice index, then element index) and the
first violation becomes the witness, so reports are reproducible bit for bit.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from . import bitsets
from .errors import TheoremViolation
from .ideals import (Ideal, IdealLattice, ideal_closure, intersect_ideals,
                     left_quotient, product_ideals, right_quotient, sum_ideals)
from .primes import SpecResult, max_in_complement, spectrum


@dataclass(frozen=True)
class Family:
    """A finite set of two-sided ideals of one ring, identified by bitmasks."""

    ring: object
    members: frozenset[int]
    name: str = "family"

    def __contains__(self, ideal) -> bool:
        mask = ideal.mask if isinstance(ideal, Ideal) else ideal
        return mask in self.members

    def sorted_masks(self) -> list[int]:
        return sorted(self.members, key=lambda m: (bitsets.popcount(m), m))

    def ideals(self) -> list[Ideal]:
        return [Ideal(self.ring, m) for m in self.sorted_masks()]

    def has_unit_ideal(self) -> bool:
        return ((1 << self.ring.order) - 1) in self.members

    def __repr__(self) -> str:
        return f"Family({self.name}, {len(self.members)} ideals of {self.ring.label})"


def family_from_masks(lattice: IdealLattice, masks, name: str = "family", *,
                      add_unit: bool = True) -> Family:
    """Build a family, enforcing (by default) that the whole ring belongs to it."""
    members = set()
    for m in masks:
        lattice.member_index(m)  # raises if not an ideal of this ring
        members.add(int(m))
    unit = (1 << lattice.ring.order) - 1
    if add_unit and unit not in members:
        warnings.warn(f"family {name!r} was missing the unit ideal; added",
                      stacklevel=2)
        members.add(unit)
    return Family(lattice.ring, frozenset(members), name)


def family_from_ideals(lattice: IdealLattice, ideals, name: str = "family", *,
                       add_unit: bool = True) -> Family:
    return family_from_masks(lattice, (i.mask for i in ideals), name,
                             add_unit=add_unit)


def intersect_families(f1: Family, f2: Family) -> Family:
    if f1.ring is not f2.ring:
        raise ValueError("families live over different rings")
    return Family(f1.ring, f1.members & f2.members,
                  f"({f1.name})&({f2.name})")


@dataclass
class CheckResult:
    holds: bool
    witness: dict | None = None
    note: str = ""


STANDING_NOTE = "standing assumption violated: family does not contain the ring"


def _standing(lattice: IdealLattice, family: Family) -> CheckResult | None:
    if not family.has_unit_ideal():
        return CheckResult(False, None, STANDING_NOTE)
    return None


def _in_family(lattice: IdealLattice, family: Family) -> np.ndarray:
    flags = np.zeros(len(lattice), dtype=bool)
    for mask in family.members:
        flags[lattice.member_index(mask)] = True
    return flags


def _member_indices(lattice, flags) -> list[int]:
    return [int(i) for i in np.flatnonzero(flags)]


def check_monoidal(lattice: IdealLattice, family: Family) -> CheckResult:
    """Closure under ideal products."""
    bad = _standing(lattice, family)
    if bad is not None:
        return bad
    inf = _in_family(lattice, family)
    members = _member_indices(lattice, inf)
    for i in members:
        for j in members:
            if not inf[lattice.product_of(i, j)]:
                return CheckResult(False, {"i": lattice.ideals[i].mask,
                                           "j": lattice.ideals[j].mask})
    return CheckResult(True)


def check_semifilter(lattice: IdealLattice, family: Family) -> CheckResult:
    """Upward closure under containment."""
    bad = _standing(lattice, family)
    if bad is not None:
        return bad
    inf = _in_family(lattice, family)
    for i in _member_indices(lattice, inf):
        for j in range(len(lattice)):
            if lattice.leq(i, j) and not inf[j]:
                return CheckResult(False, {"i": lattice.ideals[i].mask,
                                           "j": lattice.ideals[j].mask})
    return CheckResult(True)


def check_p1(lattice: IdealLattice, family: Family) -> CheckResult:
    mono = check_monoidal(lattice, family)
    if not mono.holds:
        if mono.note:
            return mono
        return CheckResult(False, dict(part="monoidal", **mono.witness))
    semi = check_semifilter(lattice, family)
    if not semi.holds:
        return CheckResult(False, dict(part="semifilter", **semi.witness))
    return CheckResult(True)


def check_p2(lattice: IdealLattice, family: Family) -> CheckResult:
    """Monoidal, plus: J in F squeezed between I^2 and I forces I in F."""
    mono = check_monoidal(lattice, family)
    if not mono.holds:
        if mono.note:
            return mono
        return CheckResult(False, dict(part="monoidal", **mono.witness))
    inf = _in_family(lattice, family)
    for j in _member_indices(lattice, inf):
        for i in range(len(lattice)):
            if inf[i]:
                continue
            sq = lattice.product_of(i, i)
            if lattice.leq(sq, j) and lattice.leq(j, i):
                return CheckResult(False, {"j": lattice.ideals[j].mask,
                                           "i": lattice.ideals[i].mask})
    return CheckResult(True)


def check_p3(lattice: IdealLattice, family: Family) -> CheckResult:
    """A, B in F and A*B inside I inside A-meet-B forces I in F."""
    bad = _standing(lattice, family)
    if bad is not None:
        return bad
    inf = _in_family(lattice, family)
    members = _member_indices(lattice, inf)
    for a in members:
        for b in members:
            ab = lattice.product_of(a, b)
            meet = lattice.meet_of(a, b)
            for i in range(len(lattice)):
                if not inf[i] and lattice.leq(ab, i) and lattice.leq(i, meet):
                    return CheckResult(False, {"a_ideal": lattice.ideals[a].mask,
                                               "b_ideal": lattice.ideals[b].mask,
                                               "i": lattice.ideals[i].mask})
    return CheckResult(True)


def _check_oka_like(lattice: IdealLattice, family: Family,
                    use_left: bool, use_right: bool) -> CheckResult:
    bad = _standing(lattice, family)
    if bad is not None:
        return bad
    inf = _in_family(lattice, family)
    n = lattice.ring.order
    for i in range(len(lattice)):
        if inf[i]:
            continue
        for a in range(n):
            if not inf[lattice.join_elem(i, a)]:
                continue
            if use_left and not inf[lattice.elem_lquot(i, a)]:
                continue
            if use_right and not inf[lattice.elem_rquot(i, a)]:
                continue
            return CheckResult(False, {"i": lattice.ideals[i].mask, "a": a})
    return CheckResult(True)


def check_oka(lattice: IdealLattice, family: Family) -> CheckResult:
    """(I,a), (a)^-1 I and I (a)^-1 all in F must force I in F."""
    return _check_oka_like(lattice, family, True, True)


def check_r_oka(lattice: IdealLattice, family: Family) -> CheckResult:
    """(I,a) and (a)^-1 I in F must force I in F."""
    return _check_oka_like(lattice, family, True, False)


def check_l_oka(lattice: IdealLattice, family: Family) -> CheckResult:
    """(I,a) and I (a)^-1 in F must force I in F."""
    return _check_oka_like(lattice, family, False, True)


def _check_strongly(lattice: IdealLattice, family: Family,
                    use_left: bool, use_right: bool) -> CheckResult:
    bad = _standing(lattice, family)
    if bad is not None:
        return bad
    inf = _in_family(lattice, family)
    for i in range(len(lattice)):
        if inf[i]:
            continue
        for j in range(len(lattice)):
            if not inf[lattice.sum_of(i, j)]:
                continue
            if use_left and not inf[lattice.left_quot(j, i)]:
                continue
            if use_right and not inf[lattice.right_quot(i, j)]:
                continue
            return CheckResult(False, {"i": lattice.ideals[i].mask,
                                       "j": lattice.ideals[j].mask})
    return CheckResult(True)


def check_strongly_oka(lattice: IdealLattice, family: Family) -> CheckResult:
    return _check_strongly(lattice, family, True, True)


def check_strongly_r_oka(lattice: IdealLattice, family: Family) -> CheckResult:
    return _check_strongly(lattice, family, True, False)


def check_strongly_l_oka(lattice: IdealLattice, family: Family) -> CheckResult:
    return _check_strongly(lattice, family, False, True)


def _join_elem_flags(lattice: IdealLattice, inf: np.ndarray, i: int) -> np.ndarray:
    n = lattice.ring.order
    return np.array([inf[lattice.join_elem(i, a)] for a in range(n)], dtype=bool)


def check_ako_goodearl(lattice: IdealLattice, family: Family) -> CheckResult:
    """(I,a), (I,b) in F must leave some r with (I, a*r*b) in F."""
    bad = _standing(lattice, family)
    if bad is not None:
        return bad
    inf = _in_family(lattice, family)
    mul = lattice.ring.mul
    for i in range(len(lattice)):
        row = _join_elem_flags(lattice, inf, i)
        hyp = np.flatnonzero(row)
        if hyp.size == 0:
            continue
        for a in hyp:
            arb = mul[mul[a, :], :]            # [r, b] -> a*r*b
            exists_r = row[arb].any(axis=0)
            bad_b = row & ~exists_r
            if bad_b.any():
                return CheckResult(False, {"i": lattice.ideals[i].mask,
                                           "a": int(a),
                                           "b": int(np.flatnonzero(bad_b)[0])})
    return CheckResult(True)


def check_ako_product(lattice: IdealLattice, family: Family) -> CheckResult:
    """(I,a), (I,b) in F must force I + (a)(b) in F."""
    bad = _standing(lattice, family)
    if bad is not None:
        return bad
    inf = _in_family(lattice, family)
    for i in range(len(lattice)):
        row = _join_elem_flags(lattice, inf, i)
        hyp = [int(x) for x in np.flatnonzero(row)]
        for a in hyp:
            pa = lattice.principal_of(a)
            for b in hyp:
                prod = lattice.product_of(pa, lattice.principal_of(b))
                if not inf[lattice.sum_of(i, prod)]:
                    return CheckResult(False, {"i": lattice.ideals[i].mask,
                                               "a": a, "b": b})
    return CheckResult(True)


CHECKERS = {
    "monoidal": check_monoidal,
    "semifilter": check_semifilter,
    "p1": check_p1,
    "p2": check_p2,
    "p3": check_p3,
    "oka": check_oka,
    "r_oka": check_r_oka,
    "l_oka": check_l_oka,
    "strongly_oka": check_strongly_oka,
    "strongly_r_oka": check_strongly_r_oka,
    "strongly_l_oka": check_strongly_l_oka,
    "ako_goodearl": check_ako_goodearl,
    "ako_product": check_ako_product,
}

PROPERTY_NAMES = list(CHECKERS)

# Implication diagram over the property verdicts: the printed chain, its two
# vertical arrows, and the left-handed mirror.  Nothing cross-handed.
IMPLICATIONS: list[tuple[str, str]] = [
    ("p1", "monoidal"), ("p1", "semifilter"),
    ("p1", "p2"), ("p2", "p3"),
    ("p2", "monoidal"), ("p3", "monoidal"),
    ("p3", "strongly_r_oka"), ("strongly_r_oka", "r_oka"), ("r_oka", "oka"),
    ("strongly_r_oka", "strongly_oka"), ("strongly_oka", "oka"),
    ("p3", "strongly_l_oka"), ("strongly_l_oka", "l_oka"), ("l_oka", "oka"),
    ("strongly_l_oka", "strongly_oka"),
]


@dataclass
class PropertyProfile:
    family: Family
    verdicts: dict[str, CheckResult]
    standing_ok: bool = True

    def holds(self, prop: str) -> bool:
        return self.verdicts[prop].holds


def property_profile(lattice: IdealLattice, family: Family) -> PropertyProfile:
    """Run every checker; the result feeds the implication-consistency assert."""
    if not family.has_unit_ideal():
        verdicts = {name: CheckResult(False, None, STANDING_NOTE)
                    for name in PROPERTY_NAMES}
        return PropertyProfile(family, verdicts, standing_ok=False)
    verdicts = {name: fn(lattice, family) for name, fn in CHECKERS.items()}
    return PropertyProfile(family, verdicts)


def assert_implication_consistency(profile: PropertyProfile) -> None:
    """Hard-fail if the verdicts contradict the implication diagram."""
    if not profile.standing_ok:
        return
    for src, dst in IMPLICATIONS:
        if profile.holds(src) and not profile.holds(dst):
            raise TheoremViolation(
                f"implication {src} => {dst}",
                {"family": profile.family.name,
                 "ring": profile.family.ring.label,
                 "members": profile.family.sorted_masks(),
                 "witness": profile.verdicts[dst].witness})


def spectrum_of(lattice: IdealLattice) -> SpecResult:
    """Spectrum of the lattice's ring, memoized on the lattice object."""
    cached = getattr(lattice, "_spectrum", None)
    if cached is None:
        cached = spectrum(lattice)
        lattice._spectrum = cached
    return cached


@dataclass
class PipReport:
    """Joint outcome of the Oka check and the maximal-complement prime check."""

    family_name: str
    ring_label: str
    oka: CheckResult
    max_complement: list[Ideal]
    non_prime_maximal: list[Ideal]
    violation: bool

    @property
    def containment_ok(self) -> bool:
        return not self.non_prime_maximal


def verify_pip(lattice: IdealLattice, family: Family, *,
               spec: SpecResult | None = None,
               oka: CheckResult | None = None) -> PipReport:
    """Check the prime ideal principle instance for one family.

    The Oka verdict and the primality of maximal-complement ideals are
    computed independently; an Oka family with a non-prime maximal
    complement ideal would refute the principle and raises.
    """
    spec = spec or spectrum_of(lattice)
    if oka is None:
        oka = check_oka(lattice, family)
    maxc = max_in_complement(lattice, family.members)
    prime_masks = {p.mask for p in spec.primes}
    not_prime = [i for i in maxc if i.mask not in prime_masks]
    violation = bool(oka.holds and not_prime)
    report = PipReport(family.name, lattice.ring.label, oka, maxc, not_prime,
                       violation)
    if violation:
        raise TheoremViolation(
            "Oka family with a non-prime ideal maximal outside it",
            {"ring": lattice.ring.label, "family": family.name,
             "members": family.sorted_masks(),
             "non_prime_maximal": [i.mask for i in not_prime]})
    return report


@dataclass
class StatementResult:
    name: str
    triggered: bool
    holds: bool
    witness: dict | None = None


@dataclass
class SupplementReport:
    family_name: str
    ring_label: str
    status: str                      # "ok" | "hypothesis-unmet"
    statements: list[StatementResult] = field(default_factory=list)


def verify_supplement(lattice: IdealLattice, family: Family, *,
                      semifilter_family: Family | None = None,
                      pivot: Ideal | None = None,
                      spec: SpecResult | None = None,
                      oka: CheckResult | None = None,
                      semifilter_ok: bool | None = None) -> SupplementReport:
    """Prime-testing transfer for an Oka family.

    Checks, on the finite lattice (where every chain has an upper bound):
    whenever all primes of a semifilter lie in the family so does the whole
    semifilter; the same for ideals (strictly) containing a pivot ideal; and
    for all ideals at once.  A triggered statement whose conclusion fails
    raises, since that would refute the transfer principle.
    """
    spec = spec or spectrum_of(lattice)
    if oka is None:
        oka = check_oka(lattice, family)
    if not oka.holds:
        return SupplementReport(family.name, lattice.ring.label,
                                "hypothesis-unmet")
    inf = _in_family(lattice, family)
    prime_idx = [lattice.member_index(p.mask) for p in spec.primes]
    report = SupplementReport(family.name, lattice.ring.label, "ok")

    def run(name: str, scope_idx: list[int]) -> None:
        triggered = all(inf[k] for k in scope_idx if k in prime_set)
        holds = True
        witness = None
        if triggered:
            for k in scope_idx:
                if not inf[k]:
                    holds = False
                    witness = {"ideal": lattice.ideals[k].mask}
                    break
        report.statements.append(StatementResult(name, triggered, holds, witness))
        if triggered and not holds:
            raise TheoremViolation(
                f"prime-test transfer failed: {name}",
                {"ring": lattice.ring.label, "family": family.name,
                 "members": family.sorted_masks(), "witness": witness})

    prime_set = set(prime_idx)
    run("all-ideals", list(range(len(lattice))))
    if pivot is not None:
        p = lattice.member_index(pivot.mask)
        over = [k for k in range(len(lattice)) if lattice.leq(p, k)]
        run("containing-pivot", over)
        run("strictly-containing-pivot", [k for k in over if k != p])
    if semifilter_family is not None:
        sf_idx = sorted(lattice.member_index(m) for m in semifilter_family.members)
        if semifilter_ok is None:
            semifilter_ok = check_semifilter(lattice, semifilter_family).holds
        if not semifilter_ok:
            report.statements.append(
                StatementResult("semifilter-transfer", False, True,
                                {"note": "given family is not a semifilter"}))
        else:
            run("semifilter-transfer", sf_idx)
    return report


def replay_witness(lattice: IdealLattice, family: Family, prop: str,
                   witness: dict) -> bool:
    """Re-check a reported violation directly from ideal arithmetic.

    Returns True when the witness indeed violates the named property; uses
    raw ideal operations rather than the lattice caches.
    """
    ring = lattice.ring
    members = family.members

    def ideal(mask: int) -> Ideal:
        return Ideal(ring, mask)

    if prop in ("p1", "p2") and witness.get("part") == "monoidal":
        prop = "monoidal"
    if prop == "monoidal":
        i, j = ideal(witness["i"]), ideal(witness["j"])
        return (i.mask in members and j.mask in members
                and product_ideals(i, j).mask not in members)
    if prop in ("semifilter",) or (prop == "p1" and witness.get("part") == "semifilter"):
        i, j = witness["i"], witness["j"]
        return (i in members and bitsets.is_subset(i, j) and j not in members)
    if prop == "p2":
        j, i = ideal(witness["j"]), ideal(witness["i"])
        sq = product_ideals(i, i)
        return (j.mask in members and bitsets.is_subset(sq.mask, j.mask)
                and bitsets.is_subset(j.mask, i.mask) and i.mask not in members)
    if prop == "p3":
        a, b, i = ideal(witness["a_ideal"]), ideal(witness["b_ideal"]), ideal(witness["i"])
        ab = product_ideals(a, b)
        meet = a.mask & b.mask
        return (a.mask in members and b.mask in members
                and bitsets.is_subset(ab.mask, i.mask)
                and bitsets.is_subset(i.mask, meet) and i.mask not in members)
    if prop in ("oka", "r_oka", "l_oka"):
        i, a = ideal(witness["i"]), witness["a"]
        pa = ideal_closure(ring, [a])
        hyp = [sum_ideals(i, pa).mask in members]
        if prop in ("oka", "r_oka"):
            hyp.append(left_quotient(pa, i).mask in members)
        if prop in ("oka", "l_oka"):
            hyp.append(right_quotient(i, pa).mask in members)
        return all(hyp) and i.mask not in members
    if prop in ("strongly_oka", "strongly_r_oka", "strongly_l_oka"):
        i, j = ideal(witness["i"]), ideal(witness["j"])
        hyp = [sum_ideals(i, j).mask in members]
        if prop in ("strongly_oka", "strongly_r_oka"):
            hyp.append(left_quotient(j, i).mask in members)
        if prop in ("strongly_oka", "strongly_l_oka"):
            hyp.append(right_quotient(i, j).mask in members)
        return all(hyp) and i.mask not in members
    if prop == "ako_product":
        i, a, b = ideal(witness["i"]), witness["a"], witness["b"]
        pa, pb = ideal_closure(ring, [a]), ideal_closure(ring, [b])
        if sum_ideals(i, pa).mask not in members:
            return False
        if sum_ideals(i, pb).mask not in members:
            return False
        return sum_ideals(i, product_ideals(pa, pb)).mask not in members
    if prop == "ako_goodearl":
        i, a, b = ideal(witness["i"]), witness["a"], witness["b"]
        pa, pb = ideal_closure(ring, [a]), ideal_closure(ring, [b])
        if sum_ideals(i, pa).mask not in members:
            return False
        if sum_ideals(i, pb).mask not in members:
            return False
        for r in range(ring.order):
            arb = int(ring.mul[ring.mul[a, r], b])
            if sum_ideals(i, ideal_closure(ring, [arb])).mask in members:
                return False
        return True
    raise ValueError(f"unknown property: {prop}")
