"""Corpus management, the full assertion suite, and family searches.

The suite runs, per corpus ring, one block per exhaustively checkable
statement.  Verdicts are three-valued — "verified", "degenerate" (true for
reasons that trivialize at finite scale), "hypothesis-unmet" — plus
"violation" for a refuted statement, which fails the whole run.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import bitsets
from .errors import TheoremViolation
from .families import (CHECKERS, IMPLICATIONS, PROPERTY_NAMES, Family,
                       assert_implication_consistency, check_semifilter,
                       family_from_masks, intersect_families, property_profile,
                       replay_witness, spectrum_of, verify_pip,
                       verify_supplement)
from .ideals import (LATTICE_CAP, RIGHT, Ideal, IdealLattice, all_ideals,
                     generators, ideal_closure, product_ideals, quotient_ring,
                     sorted_indices, sum_ideals)
from .primes import (is_m_system, is_prime_ring, is_semiprime_ideal,
                     max_in_complement, zero_as_product_of_minimal_primes)
from .rings import (ORDER_CAP, Ring, build_from_tables, central_idempotents,
                    is_dedekind_finite, normal_elements)
from .serialize import ring_from_description
from .zoo import (FamilyBuild, RingContext, artin_rees_family,
                  contains_member_family, dedekind_finite_factor_family,
                  direct_summand_family, factor_predicate_family,
                  flat_factor_family, idempotent_family, left_faithful_family,
                  meets_m_system, middle_annihilator_family,
                  point_annihilator_family, pred_annihilator_meets,
                  pred_torsion, principal_normal_family, product_closure,
                  torsion_family_direct, verify_left_right_principal)

BLOCK_NAMES = [
    "validate",
    "prime_ring_criteria",
    "spectrum",
    "triangular_primes",
    "zero_minimal_product",
    "family_contracts",
    "pip",
    "implication_diagram",
    "supplement",
    "ako",
    "intersection_closure",
    "product_generators",
    "left_right_principal",
]


@dataclass
class Corpus:
    ring_descriptions: list[dict]
    order_cap: int = ORDER_CAP
    lattice_cap: int = LATTICE_CAP
    seed: int = 0
    families_per_ring: int = 1000


def default_corpus() -> Corpus:
    """Stock corpus: modular rings, matrix rings, triangular rings, products."""
    zn = lambda n: {"type": "zn", "n": n}
    descs: list[dict] = [zn(n) for n in range(1, 13)]
    descs += [
        {"type": "matrix", "base": zn(2), "k": 2},
        {"type": "matrix", "base": zn(3), "k": 2},
        {"type": "matrix", "base": zn(4), "k": 2},
        {"type": "triangular", "a": zn(2), "b": zn(2),
         "bimodule": {"type": "regular"}},
        {"type": "triangular", "a": zn(3), "b": zn(3),
         "bimodule": {"type": "regular"}},
        {"type": "triangular", "a": zn(2), "b": zn(2),
         "bimodule": {"type": "power", "k": 2}},
        {"type": "product", "factors": [zn(2), zn(2)]},
        {"type": "product", "factors": [zn(2), zn(3)]},
        {"type": "product", "factors": [{"type": "matrix", "base": zn(2), "k": 2},
                                        zn(2)]},
    ]
    return Corpus(descs)


@dataclass
class BlockResult:
    ring: str
    block: str
    verdict: str               # verified | degenerate | hypothesis-unmet | violation
    checks: int = 0
    details: dict = field(default_factory=dict)


@dataclass
class SuiteReport:
    corpus: Corpus
    blocks: list[BlockResult]
    timings: dict[str, float] = field(default_factory=dict)

    def violations(self) -> list[BlockResult]:
        return [b for b in self.blocks if b.verdict == "violation"]

    def ok(self) -> bool:
        return not self.violations()

    def to_json(self) -> dict:
        """Canonical payload; timings are intentionally left out so that
        identical corpus+seed runs are byte-identical."""
        from .serialize import corpus_to_json
        summary: dict[str, int] = {}
        for b in self.blocks:
            summary[b.verdict] = summary.get(b.verdict, 0) + 1
        return {
            "corpus": corpus_to_json(self.corpus),
            "blocks": [{"ring": b.ring, "block": b.block, "verdict": b.verdict,
                        "checks": b.checks, "details": b.details}
                       for b in self.blocks],
            "summary": summary,
            "ok": self.ok(),
        }


def random_family(lattice: IdealLattice, seed, density: float) -> Family:
    """Seeded family: each proper ideal joins independently; the ring always does.

    Density 0 and 1 are allowed and give the two extreme families.
    """
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    unit = (1 << lattice.ring.order) - 1
    masks = [unit]
    for ideal in lattice.ideals:
        if ideal.mask != unit and rng.random() < density:
            masks.append(ideal.mask)
    return family_from_masks(lattice, masks, f"random({seed},{density})")


def multiplicative_closure(ring: Ring, x: int) -> list[int]:
    """{1, x, x^2, ...} (finite, eventually periodic)."""
    out = {int(ring.one)}
    cur = int(x)
    while cur not in out:
        out.add(cur)
        cur = int(ring.mul[cur, x])
    return sorted(out)


# ------------------------------------------------------------- population

@dataclass
class Population:
    """Named zoo builds plus deduplicated family content for sweep blocks."""

    builds: dict[str, list] = field(default_factory=dict)
    meets_by_set: list[tuple[tuple[int, ...], FamilyBuild]] = field(default_factory=list)
    ann_meets_by_set: list[tuple[tuple[int, ...], FamilyBuild]] = field(default_factory=list)
    torsion_by_set: list[tuple[tuple[int, ...], FamilyBuild]] = field(default_factory=list)
    sampled: int = 0
    distinct: dict[frozenset, Family] = field(default_factory=dict)

    def all_builds(self) -> list[FamilyBuild]:
        out = []
        for group in self.builds.values():
            out.extend(group)
        out.extend(b for _, b in self.meets_by_set)
        out.extend(b for _, b in self.ann_meets_by_set)
        out.extend(b for _, b in self.torsion_by_set)
        return out

    def add_family(self, family: Family) -> None:
        self.distinct.setdefault(family.members, family)

    def distinct_sorted(self) -> list[Family]:
        def key(members: frozenset) -> tuple:
            return (len(members),
                    tuple(sorted((bitsets.popcount(m), m) for m in members)))
        return [self.distinct[k] for k in sorted(self.distinct, key=key)]


def build_population(ctx: RingContext, corpus: Corpus) -> Population:
    ring = ctx.ring
    pop = Population()
    spec = spectrum_of(ctx.lattice)

    def add(kind: str, build: FamilyBuild) -> None:
        pop.builds.setdefault(kind, []).append(build)
        pop.add_family(build.family)

    # m-system families: the unit set, power sets, prime complements
    m_sets: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for s in ([tuple([ring.one])]
              + [tuple(multiplicative_closure(ring, x)) for x in ring.elements()]
              + [tuple(sorted(set(ring.elements()) - set(sorted_indices(p))))
                 for p in spec.primes]):
        if s not in seen:
            seen.add(s)
            m_sets.append(s)
    for s in m_sets:
        build = meets_m_system(ctx, s)
        pop.meets_by_set.append((s, build))
        pop.add_family(build.family)

    if ring.order > 1:
        add("point_annihilator", point_annihilator_family(ctx, ctx.regular))
        for ideal in ctx.lattice.ideals:
            if 1 < ideal.size() < ring.order:
                module = ctx.cyclic_factor(ideal.mask)
                add("point_annihilator", point_annihilator_family(ctx, module))
        add("left_faithful", left_faithful_family(ctx))

    add("middle_annihilator", middle_annihilator_family(ctx))

    add("contains_member", contains_member_family(
        ctx, [Ideal(ring, (1 << ring.order) - 1)]))
    if spec.minimal_primes:
        closed = product_closure(ctx.lattice, spec.minimal_primes)
        add("contains_member", contains_member_family(ctx, closed))

    add("artin_rees", artin_rees_family(ctx))

    cis = central_idempotents(ring)
    idem_sets = [tuple(cis)]
    if 0 in cis and len(cis) > 2:
        idem_sets.append(tuple(sorted({0, ring.one})))
    idem_sets.append(tuple([ring.one]) if ring.order > 1 else tuple([0]))
    for s in dict.fromkeys(idem_sets):
        add("idempotent", idempotent_family(ctx, s))
    add("direct_summand", direct_summand_family(ctx))

    add("dedekind_finite", dedekind_finite_factor_family(ctx))
    add("flat_factor", flat_factor_family(ctx))

    normals = normal_elements(ring)
    normal_sets = [tuple(normals)]
    for x in normals:
        normal_sets.append(tuple(multiplicative_closure(ring, x)))
    for s in dict.fromkeys(normal_sets):
        add("principal_normal", principal_normal_family(ctx, s))

    lr = verify_left_right_principal(ctx)
    add("left_right_principal", lr.family)

    # factor-module predicate families, paired with their direct descriptions
    pred_sets = [tuple([ring.one]),
                 tuple(multiplicative_closure(ring, ring.add[ring.one, ring.one]))]
    for s in dict.fromkeys(pred_sets):
        build = factor_predicate_family(ctx, pred_annihilator_meets(s),
                                        f"annihilator-meets{list(s)}")
        pop.ann_meets_by_set.append((s, build))
        pop.add_family(build.family)
        build = factor_predicate_family(ctx, pred_torsion(s),
                                        f"s-torsion{list(s)}")
        pop.torsion_by_set.append((s, build))
        pop.add_family(build.family)

    densities = [0.25, 0.5, 0.75]
    for i in range(corpus.families_per_ring):
        fam = random_family(ctx.lattice, f"{corpus.seed}:{ring.label}:{i}",
                            densities[i % len(densities)])
        pop.sampled += 1
        pop.add_family(fam)

    return pop


# ----------------------------------------------------------------- blocks

def _violation(ring: Ring, block: str, exc: TheoremViolation) -> BlockResult:
    return BlockResult(ring.label, block, "violation",
                       details={"statement": exc.statement, "dump": repr(exc.dump)})


def _block_validate(ctx: RingContext) -> BlockResult:
    ring = ctx.ring
    build_from_tables(np.array(ring.add), np.array(ring.mul), 0, ring.one,
                      ring.label)
    checks = 1
    normals = normal_elements(ring)
    nset = set(normals)
    for x in normals:
        for y in normals:
            checks += 1
            if int(ring.mul[x, y]) not in nset:
                raise TheoremViolation("normal elements are closed under products",
                                       {"ring": ring.label, "x": x, "y": y})
    cis = central_idempotents(ring)
    cset = set(cis)
    for e in cis:
        comp = int(ring.add[ring.one, ring.neg[e]])
        checks += 1
        if comp not in cset:
            raise TheoremViolation("central idempotents closed under 1-e",
                                   {"ring": ring.label, "e": e})
        for f in cis:
            checks += 1
            if int(ring.mul[e, f]) not in cset:
                raise TheoremViolation("central idempotents closed under products",
                                       {"ring": ring.label, "e": e, "f": f})
    checks += 1
    if not is_dedekind_finite(ring):
        raise TheoremViolation("finite ring must be Dedekind finite",
                               {"ring": ring.label})
    return BlockResult(ring.label, "validate", "verified", checks,
                       {"order": ring.order,
                        "normal_elements": len(normals),
                        "central_idempotents": cis})


def _block_prime_ring(ctx: RingContext) -> BlockResult:
    ring = ctx.ring
    report = is_prime_ring(ring)
    details = {"is_prime": report.is_prime,
               "criteria": list(report.criteria),
               "symmetric_witness": list(report.symmetric_witness)
               if report.symmetric_witness else None}
    verdict = "degenerate" if report.zero_ring else "verified"
    if report.zero_ring:
        details["zero_ring"] = True
    return BlockResult(ring.label, "prime_ring_criteria", verdict,
                       1 if report.zero_ring else 3, details)


def _block_spectrum(ctx: RingContext) -> BlockResult:
    ring = ctx.ring
    lattice = ctx.lattice
    spec = spectrum_of(lattice)
    prime_masks = {p.mask for p in spec.primes}
    checks = 0
    for ideal in lattice.ideals:
        if ideal.size() == ring.order:
            continue
        expected = ideal.mask in prime_masks
        factor = quotient_ring(ideal)
        transferred = is_prime_ring(factor).is_prime
        checks += 1
        if transferred != expected:
            raise TheoremViolation(
                "an ideal is prime exactly when its factor ring is prime",
                {"ring": ring.label, "ideal": sorted_indices(ideal),
                 "factor": factor.label})
        checks += 1
        if expected and not is_semiprime_ideal(ring, ideal)[0]:
            raise TheoremViolation("a prime ideal must be semiprime",
                                   {"ring": ring.label,
                                    "ideal": sorted_indices(ideal)})
        complement = sorted(set(ring.elements()) - set(sorted_indices(ideal)))
        checks += 1
        if is_m_system(ring, complement).holds != expected:
            raise TheoremViolation(
                "an ideal is prime exactly when its complement is an m-system",
                {"ring": ring.label, "ideal": sorted_indices(ideal)})
    details = {"primes": [sorted_indices(p) for p in spec.primes],
               "minimal_primes": [sorted_indices(p) for p in spec.minimal_primes]}
    return BlockResult(ring.label, "spectrum", "verified", checks, details)


def _block_triangular(ctx: RingContext, desc: dict, corpus: Corpus) -> BlockResult:
    ring = ctx.ring
    if desc.get("type") != "triangular":
        return BlockResult(ring.label, "triangular_primes", "hypothesis-unmet",
                           0, {"note": "ring is not triangular"})
    a = ring_from_description(desc["a"], order_cap=corpus.order_cap)
    b = ring_from_description(desc["b"], order_cap=corpus.order_cap)
    if len(all_ideals(a)) != 2 or len(all_ideals(b)) != 2:
        return BlockResult(ring.label, "triangular_primes", "hypothesis-unmet",
                           0, {"note": "side rings are not simple"})
    m_order = ring.order // (a.order * b.order)
    span = m_order * b.order
    e_upper = a.one * span
    e_lower = b.one
    strip = bitsets.mask_of(m * b.order for m in range(m_order))
    upper = bitsets.mask_of(x * span + m * b.order
                            for x in range(a.order) for m in range(m_order))
    lower = bitsets.mask_of(m * b.order + y
                            for m in range(m_order) for y in range(b.order))

    checks = 0
    for e, expected in ((e_upper, upper), (e_lower, lower)):
        two = ideal_closure(ring, [e]).mask
        right_part = ideal_closure(ring, [e], "right").mask
        left_part = ideal_closure(ring, [e], "left").mask
        via_right = _sumset_mask(ring, strip, right_part)
        via_left = _sumset_mask(ring, strip, left_part)
        checks += 3
        if not (two == expected and via_right == expected and via_left == expected):
            raise TheoremViolation(
                "triangular prime does not match its generator formulas",
                {"ring": ring.label, "generator": e,
                 "closure": sorted_indices(Ideal(ring, two))})
    spec = spectrum_of(ctx.lattice)
    checks += 1
    if {p.mask for p in spec.primes} != {upper, lower}:
        raise TheoremViolation(
            "triangular ring over simple sides must have exactly two primes",
            {"ring": ring.label,
             "primes": [sorted_indices(p) for p in spec.primes]})
    return BlockResult(ring.label, "triangular_primes", "verified", checks,
                       {"upper": sorted_indices(Ideal(ring, upper)),
                        "lower": sorted_indices(Ideal(ring, lower))})


def _sumset_mask(ring: Ring, m1: int, m2: int) -> int:
    i1 = bitsets.mask_to_indices(m1, ring.order)
    i2 = bitsets.mask_to_indices(m2, ring.order)
    return bitsets.indices_to_mask(np.unique(ring.add[np.ix_(i1, i2)]))


def _block_zero_product(ctx: RingContext) -> BlockResult:
    ring = ctx.ring
    spec = spectrum_of(ctx.lattice)
    seq = zero_as_product_of_minimal_primes(spec)
    if seq is None:
        raise TheoremViolation(
            "zero must be a product of minimal primes on a finite ring",
            {"ring": ring.label,
             "minimal_primes": [sorted_indices(p) for p in spec.minimal_primes]})
    checks = 1
    if seq:
        acc = seq[0]
        for p in seq[1:]:
            acc = product_ideals(acc, p)
        checks += 1
        if not acc.is_zero():
            raise TheoremViolation(
                "witness product does not multiply out to zero",
                {"ring": ring.label,
                 "sequence": [sorted_indices(p) for p in seq]})
    recomputed = [p for p in spec.primes
                  if not any(q.mask != p.mask
                             and bitsets.is_subset(q.mask, p.mask)
                             for q in spec.primes)]
    checks += 1
    if {p.mask for p in recomputed} != {p.mask for p in spec.minimal_primes}:
        raise TheoremViolation("minimal primes disagree with recomputation",
                               {"ring": ring.label})
    verdict = "degenerate" if ring.order == 1 else "verified"
    return BlockResult(ring.label, "zero_minimal_product", verdict, checks,
                       {"sequence": [sorted_indices(p) for p in seq],
                        "minimal_prime_count": len(spec.minimal_primes)})


def _require(condition: bool, statement: str, dump: dict) -> None:
    if not condition:
        raise TheoremViolation(statement, dump)


def _block_contracts(ctx: RingContext, pop: Population) -> BlockResult:
    ring = ctx.ring
    lattice = ctx.lattice
    spec = spectrum_of(lattice)
    prime_masks = {p.mask for p in spec.primes}
    checks = 0
    degenerate = 0
    results = []
    for build in pop.all_builds():
        profile = ctx.profile_of(build.family)
        holds = profile.holds(build.claimed)
        checks += 1
        if build.degenerate:
            degenerate += 1
        _require(holds, f"family contract failed: {build.claimed}",
                 {"ring": ring.label, "family": build.family.name,
                  "witness": profile.verdicts[build.claimed].witness})
        results.append({"family": build.family.name, "claimed": build.claimed,
                        "holds": holds, "degenerate": build.degenerate})

    # annihilator-style families: maximal members of the complement are the
    # maximal annihilators, and every one of them is prime
    for kind, extra_key in (("point_annihilator", "maximal_annihilators"),
                            ("middle_annihilator", "maximal_middle_annihilators")):
        for build in pop.builds.get(kind, []):
            maxes = build.extras[extra_key]
            maxc = max_in_complement(lattice, build.family.members)
            checks += 2
            _require({i.mask for i in maxes} == {i.mask for i in maxc},
                     f"{kind}: maximal annihilators differ from the "
                     "maximal-complement ideals",
                     {"ring": ring.label, "family": build.family.name})
            _require(all(i.mask in prime_masks for i in maxes),
                     f"{kind}: a maximal annihilator is not prime",
                     {"ring": ring.label, "family": build.family.name})

    # direct summands: maximality of the complement and the product-of-simples
    # equivalence against the independent decomposition
    for build in pop.builds.get("direct_summand", []):
        checks += 2
        _require(build.extras["max_complement_all_maximal"],
                 "direct summands: an ideal maximal outside the family is "
                 "not a maximal ideal", {"ring": ring.label})
        decomposition = build.extras["decomposition"]
        _require(build.extras["covers_all_ideals"]
                 == decomposition["is_product_of_simple_rings"],
                 "all-ideals-are-summands must match the product-of-simple-"
                 "rings decomposition",
                 {"ring": ring.label, "decomposition": decomposition})

    # the annihilator-meets predicate family coincides with the m-system family
    meets_lookup = {s: b for s, b in pop.meets_by_set}
    for s, build in pop.ann_meets_by_set:
        if s in meets_lookup:
            checks += 1
            _require(build.family.members == meets_lookup[s].family.members,
                     "annihilator-meets family must equal the m-system family",
                     {"ring": ring.label, "set": list(s)})

    # the torsion predicate family coincides with its elementwise description
    for s, build in pop.torsion_by_set:
        checks += 1
        direct = torsion_family_direct(ctx, s)
        _require(build.family.members == direct.members,
                 "torsion family: predicate and direct routes disagree",
                 {"ring": ring.label, "set": list(s)})

    verdict = "verified" if degenerate == 0 else "verified"
    return BlockResult(ring.label, "family_contracts", verdict, checks,
                       {"families": len(results), "degenerate": degenerate})


def _block_pip(ctx: RingContext, pop: Population) -> BlockResult:
    lattice = ctx.lattice
    spec = spectrum_of(lattice)
    checks = 0
    oka_count = 0
    for family in pop.distinct_sorted():
        profile = ctx.profile_of(family)
        report = verify_pip(lattice, family, spec=spec,
                            oka=profile.verdicts["oka"])
        checks += 1
        if report.oka.holds:
            oka_count += 1
    return BlockResult(ctx.ring.label, "pip", "verified", checks,
                       {"sampled_random": pop.sampled,
                        "distinct_families": len(pop.distinct),
                        "oka_families": oka_count})


def _block_implications(ctx: RingContext, pop: Population) -> BlockResult:
    checks = 0
    for family in pop.distinct_sorted():
        profile = ctx.profile_of(family)
        assert_implication_consistency(profile)
        checks += len(IMPLICATIONS)
    return BlockResult(ctx.ring.label, "implication_diagram", "verified",
                       checks, {"distinct_families": len(pop.distinct)})


def _block_supplement(ctx: RingContext, pop: Population) -> BlockResult:
    lattice = ctx.lattice
    spec = spectrum_of(lattice)
    distinct = pop.distinct_sorted()
    profiles = {fam.members: ctx.profile_of(fam) for fam in distinct}
    oka_families = [f for f in distinct if profiles[f.members].holds("oka")]
    semifilters = [f for f in distinct
                   if profiles[f.members].holds("semifilter")]
    checks = 0
    for fam in oka_families:
        oka = profiles[fam.members].verdicts["oka"]
        verify_supplement(lattice, fam, spec=spec, oka=oka)
        checks += 1
        for pivot in lattice.ideals:
            verify_supplement(lattice, fam, pivot=pivot, spec=spec, oka=oka)
            checks += 2
        for sf in semifilters:
            verify_supplement(lattice, fam, semifilter_family=sf, spec=spec,
                              oka=oka, semifilter_ok=True)
            checks += 1
    return BlockResult(ctx.ring.label, "supplement", "verified", checks,
                       {"oka_families": len(oka_families),
                        "semifilters": len(semifilters)})


def _block_ako(ctx: RingContext, pop: Population) -> BlockResult:
    lattice = ctx.lattice
    spec = spectrum_of(lattice)
    prime_masks = {p.mask for p in spec.primes}
    checks = 0
    for family in pop.distinct_sorted():
        profile = ctx.profile_of(family)
        if profile.holds("ako_goodearl") or profile.holds("ako_product"):
            maxc = max_in_complement(lattice, family.members)
            checks += 1
            _require(all(i.mask in prime_masks for i in maxc),
                     "Ako-style family with a non-prime maximal complement ideal",
                     {"ring": ctx.ring.label, "family": family.name,
                      "members": family.sorted_masks()})
    return BlockResult(ctx.ring.label, "ako", "verified", checks, {})


def _block_intersection(ctx: RingContext, pop: Population,
                        corpus: Corpus) -> BlockResult:
    distinct = pop.distinct_sorted()
    pairs: list[tuple[Family, Family]] = []
    if len(distinct) <= 14:
        for i in range(len(distinct)):
            for j in range(i + 1, len(distinct)):
                pairs.append((distinct[i], distinct[j]))
    else:
        rng = random.Random(f"{corpus.seed}:{ctx.ring.label}:intersection")
        for _ in range(80):
            i = rng.randrange(len(distinct))
            j = rng.randrange(len(distinct))
            if i != j:
                pairs.append((distinct[i], distinct[j]))
    checks = 0
    for f1, f2 in pairs:
        p1 = ctx.profile_of(f1)
        p2 = ctx.profile_of(f2)
        inter = intersect_families(f1, f2)
        pi = ctx.profile_of(inter)
        for prop in PROPERTY_NAMES:
            if prop.startswith("ako"):
                continue
            if p1.holds(prop) and p2.holds(prop):
                checks += 1
                _require(pi.holds(prop),
                         f"property {prop} not preserved by intersection",
                         {"ring": ctx.ring.label, "families":
                          [f1.name, f2.name],
                          "witness": pi.verdicts[prop].witness})
    return BlockResult(ctx.ring.label, "intersection_closure", "verified",
                       checks, {"pairs": len(pairs)})


def _block_product_generators(ctx: RingContext) -> BlockResult:
    """Right-generator law: the product of a right ideal and a two-sided ideal
    is right-generated by the pairwise products of their generator sets."""
    ring = ctx.ring
    checks = 0
    for i in ctx.right_lattice.ideals:
        gens_i = generators(i)
        for j in ctx.lattice.ideals:
            gens_j = generators(Ideal(ring, j.mask, RIGHT))
            pairwise = [int(ring.mul[x, y]) for x in gens_i for y in gens_j]
            closure = ideal_closure(ring, pairwise, RIGHT)
            product = product_ideals(i, j, allow_mixed=True)
            checks += 1
            _require(closure.mask == product.mask,
                     "pairwise generator products fail to right-generate "
                     "the product ideal",
                     {"ring": ring.label, "i": sorted_indices(i),
                      "j": sorted_indices(j)})
    return BlockResult(ring.label, "product_generators", "verified", checks, {})


def _block_left_right_principal(ctx: RingContext) -> BlockResult:
    report = verify_left_right_principal(ctx)
    profile = ctx.profile_of(report.family.family)
    _require(profile.holds("r_oka"),
             "left-right principal family must be r-Oka",
             {"ring": ctx.ring.label,
              "witness": profile.verdicts["r_oka"].witness})
    return BlockResult(ctx.ring.label, "left_right_principal", "verified",
                       report.checked_pairs + 2,
                       {"pairs": report.checked_pairs,
                        "family_size": len(report.family.family.members)})


# ------------------------------------------------------------------ runner

def _run_ring(desc: dict, corpus: Corpus, only: str | None):
    ring = ring_from_description(desc, order_cap=corpus.order_cap)
    ctx = RingContext(ring, lattice_cap=corpus.lattice_cap)
    results: list[BlockResult] = []
    timings: dict[str, float] = {}
    pop: Population | None = None

    def wants(name: str) -> bool:
        return only is None or only == name

    def run(name: str, fn) -> None:
        if not wants(name):
            return
        start = time.perf_counter()
        try:
            results.append(fn())
        except TheoremViolation as exc:
            results.append(_violation(ring, name, exc))
        timings[name] = time.perf_counter() - start

    run("validate", lambda: _block_validate(ctx))
    run("prime_ring_criteria", lambda: _block_prime_ring(ctx))
    run("spectrum", lambda: _block_spectrum(ctx))
    run("triangular_primes", lambda: _block_triangular(ctx, desc, corpus))
    run("zero_minimal_product", lambda: _block_zero_product(ctx))

    needs_pop = any(wants(b) for b in ("family_contracts", "pip",
                                       "implication_diagram", "supplement",
                                       "ako", "intersection_closure"))
    if needs_pop:
        start = time.perf_counter()
        pop = build_population(ctx, corpus)
        timings["population"] = time.perf_counter() - start
        run("family_contracts", lambda: _block_contracts(ctx, pop))
        run("pip", lambda: _block_pip(ctx, pop))
        run("implication_diagram", lambda: _block_implications(ctx, pop))
        run("supplement", lambda: _block_supplement(ctx, pop))
        run("ako", lambda: _block_ako(ctx, pop))
        run("intersection_closure", lambda: _block_intersection(ctx, pop, corpus))

    run("product_generators", lambda: _block_product_generators(ctx))
    run("left_right_principal", lambda: _block_left_right_principal(ctx))

    return ring.label, results, timings


def run_paper_suite(corpus: Corpus, *, only: str | None = None,
                    jobs: int = 1) -> SuiteReport:
    """Run every assertion block on every corpus ring.

    Deterministic given the corpus and seed; `jobs` distributes rings over
    processes without changing the report.
    """
    if only is not None and only not in BLOCK_NAMES:
        raise ValueError(f"unknown block {only!r}; known: {BLOCK_NAMES}")
    blocks: list[BlockResult] = []
    timings: dict[str, float] = {}
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_ring_star,
                                     [(d, corpus, only)
                                      for d in corpus.ring_descriptions]))
    else:
        outcomes = [_run_ring(d, corpus, only)
                    for d in corpus.ring_descriptions]
    for label, results, ring_timings in outcomes:
        blocks.extend(results)
        for name, seconds in ring_timings.items():
            timings[f"{label}:{name}"] = seconds
    return SuiteReport(corpus, blocks, timings)


def _run_ring_star(args):
    return _run_ring(*args)


# ------------------------------------------------------------------ search

DIAGRAM_PROPS = [p for p in PROPERTY_NAMES if not p.startswith("ako")]


@dataclass
class SearchResult:
    status: str                       # found | exhausted | budget
    ring: str | None = None
    family_members: list[list[int]] | None = None
    profile: dict[str, bool] | None = None
    families_checked: dict[str, int] = field(default_factory=dict)
    exhaustive: dict[str, bool] = field(default_factory=dict)


def search_separation(corpus: Corpus, prop_a: str, prop_bs: list[str], *,
                      budget: int = 20000) -> SearchResult:
    """Look for a family satisfying `prop_a` but none of `prop_bs`.

    Enumerates every family when the lattice is small enough (the ring is
    always pinned inside), otherwise samples seeded random subsets.  Any
    candidate whose verdicts contradict the implication diagram aborts the
    search as an engine bug.
    """
    for prop in [prop_a] + list(prop_bs):
        if prop not in DIAGRAM_PROPS:
            raise ValueError(f"unknown or unsupported property {prop!r}")
    checked: dict[str, int] = {}
    exhaustive: dict[str, bool] = {}
    hit_budget = False
    for desc in corpus.ring_descriptions:
        ring = ring_from_description(desc, order_cap=corpus.order_cap)
        ctx = RingContext(ring, lattice_cap=corpus.lattice_cap)
        lattice = ctx.lattice
        proper = [i.mask for i in lattice.ideals
                  if i.mask != (1 << ring.order) - 1]
        unit = (1 << ring.order) - 1
        count = 0
        total = 1 << len(proper)
        exhaustive[ring.label] = total <= budget

        def candidates():
            if total <= budget:
                for subset in range(total):
                    yield [unit] + [proper[k] for k in range(len(proper))
                                    if subset >> k & 1]
            else:
                rng = random.Random(f"{corpus.seed}:search:{ring.label}")
                seen = set()
                for _ in range(budget):
                    masks = frozenset([unit] + [m for m in proper
                                                if rng.random() < 0.5])
                    if masks not in seen:
                        seen.add(masks)
                        yield sorted(masks)

        for masks in candidates():
            family = family_from_masks(lattice, masks, "candidate")
            count += 1
            verdicts = {name: CHECKERS[name](lattice, family).holds
                        for name in DIAGRAM_PROPS}
            for src, dst in IMPLICATIONS:
                if verdicts[src] and not verdicts[dst]:
                    raise TheoremViolation(
                        f"search produced a profile violating {src} => {dst}",
                        {"ring": ring.label, "members": sorted(masks)})
            if verdicts[prop_a] and not any(verdicts[b] for b in prop_bs):
                checked[ring.label] = count
                return SearchResult(
                    "found", ring.label,
                    [sorted_indices(Ideal(ring, m))
                     for m in sorted(masks, key=lambda m: (bitsets.popcount(m), m))],
                    verdicts, checked, exhaustive)
        checked[ring.label] = count
        if not exhaustive[ring.label]:
            hit_budget = True
    return SearchResult("budget" if hit_budget else "exhausted",
                        families_checked=checked, exhaustive=exhaustive)
