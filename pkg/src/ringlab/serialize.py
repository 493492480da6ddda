"""Description-file formats and deterministic JSON report dumps.

Ring, family, and corpus inputs are JSON descriptions; reports are emitted
through `canonical_json`, which sorts keys and uses compact separators so
identical runs produce byte-identical files.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import FamilyInputError, RingLabError
from .families import (CheckResult, Family, PipReport, PropertyProfile,
                       SupplementReport, family_from_masks)
from .ideals import (LATTICE_CAP, Ideal, IdealLattice, generators,
                     ideal_closure, sorted_indices)
from .primes import SpecResult
from .rings import (ORDER_CAP, Bimodule, Ring, bimodule_from_tables,
                    bimodule_power, bimodule_regular, build_from_tables,
                    build_matrix_ring, build_opposite, build_product,
                    build_quotient, build_triangular, build_zn)


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def pretty_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ----------------------------------------------------------------- rings

def ring_from_description(desc: dict, *, order_cap: int = ORDER_CAP) -> Ring:
    """Build a ring from a nested JSON description; attaches `description`."""
    if not isinstance(desc, dict) or "type" not in desc:
        raise FamilyInputError(f"bad ring description: {desc!r}")
    kind = desc["type"]
    if kind == "zn":
        ring = build_zn(int(desc["n"]), order_cap=order_cap)
    elif kind == "matrix":
        base = ring_from_description(desc["base"], order_cap=order_cap)
        ring = build_matrix_ring(base, int(desc["k"]), order_cap=order_cap)
    elif kind == "product":
        factors = [ring_from_description(d, order_cap=order_cap)
                   for d in desc["factors"]]
        if len(factors) < 2:
            raise FamilyInputError("product needs at least two factors")
        ring = factors[0]
        for other in factors[1:]:
            ring = build_product(ring, other, order_cap=order_cap)
    elif kind == "triangular":
        a = ring_from_description(desc["a"], order_cap=order_cap)
        b = a if desc["a"] == desc["b"] else ring_from_description(
            desc["b"], order_cap=order_cap)
        m = _bimodule_from_description(desc.get("bimodule", {"type": "regular"}),
                                       a, b, desc)
        ring = build_triangular(a, m, b, order_cap=order_cap)
    elif kind == "quotient":
        base = ring_from_description(desc["base"], order_cap=order_cap)
        ideal = ideal_closure(base, [int(g) for g in desc["ideal_gens"]])
        gens = ",".join(str(g) for g in desc["ideal_gens"])
        ring = build_quotient(base, sorted_indices(ideal),
                              f"{base.label}/({gens})")
    elif kind == "table":
        ring = build_from_tables(desc["add"], desc["mul"],
                                 int(desc.get("zero", 0)), int(desc["one"]),
                                 desc.get("label", "table"))
        if ring.order > order_cap:
            from .errors import CapExceeded
            raise CapExceeded(f"table ring exceeds order cap {order_cap}")
    elif kind == "opposite":
        ring = build_opposite(ring_from_description(desc["base"],
                                                    order_cap=order_cap))
    else:
        raise FamilyInputError(f"unknown ring description type: {kind!r}")
    ring.description = desc
    return ring


def _bimodule_from_description(desc: dict, a: Ring, b: Ring,
                               parent: dict) -> Bimodule:
    kind = desc.get("type", "regular")
    if kind == "regular":
        if parent["a"] != parent["b"]:
            raise FamilyInputError(
                "regular bimodule requires identical side rings")
        return bimodule_regular(a)
    if kind == "power":
        if parent["a"] != parent["b"]:
            raise FamilyInputError("power bimodule requires identical side rings")
        return bimodule_power(a, int(desc["k"]))
    if kind == "tables":
        return bimodule_from_tables(a, b, desc["add"], desc["left_action"],
                                    desc["right_action"],
                                    desc.get("label", "M"))
    raise FamilyInputError(f"unknown bimodule description type: {kind!r}")


# --------------------------------------------------------------- families

def family_from_description(lattice: IdealLattice, desc: dict):
    """Resolve a family description; named families go through the registry.

    Explicit families are taken verbatim (the ring is NOT silently added), so
    checkers can report the standing-assumption verdict on raw inputs.
    Returns a Family for explicit input and a FamilyBuild for named input.
    """
    from .zoo import RingContext, build_named_family
    kind = desc.get("type")
    if kind == "explicit":
        masks = [ideal_closure(lattice.ring, [int(g) for g in gens]).mask
                 for gens in desc["ideals"]]
        return family_from_masks(lattice, masks, desc.get("name", "explicit"),
                                 add_unit=False)
    if kind == "named":
        ctx = RingContext(lattice.ring)
        ctx._two = lattice
        return build_named_family(ctx, desc["name"], desc.get("params", {}))
    raise FamilyInputError(f"unknown family description type: {kind!r}")


# ------------------------------------------------------------------ dumps

def ideal_json(ideal: Ideal) -> dict:
    return {"gens": generators(ideal), "members": sorted_indices(ideal)}


def mask_json(ring: Ring, mask: int) -> dict:
    return ideal_json(Ideal(ring, mask))


def lattice_json(lattice: IdealLattice) -> dict:
    edges = [[i, j]
             for i in range(len(lattice)) for j in range(len(lattice))
             if i != j and lattice.leq(i, j)]
    return {
        "ring": lattice.ring.label,
        "sidedness": lattice.sidedness,
        "count": len(lattice),
        "ideals": [ideal_json(i) for i in lattice.ideals],
        "containment": edges,
    }


def spectrum_json(spec: SpecResult) -> dict:
    minimal = {p.mask for p in spec.minimal_primes}
    rejected = []
    for ideal in spec.lattice.ideals:
        if ideal.mask in spec.witnesses:
            rejected.append({"ideal": ideal_json(ideal),
                             "witness": list(spec.witnesses[ideal.mask])})
    return {
        "ring": spec.ring.label,
        "primes": [dict(ideal_json(p), minimal=p.mask in minimal)
                   for p in spec.primes],
        "rejected": rejected,
    }


def witness_json(ring: Ring, witness: dict | None) -> dict | None:
    if witness is None:
        return None
    mask_keys = {"i", "j", "a_ideal", "b_ideal", "ideal", "k", "l",
                 "stable_power", "product"}
    out = {}
    for key, value in witness.items():
        if key in mask_keys and isinstance(value, int):
            out[key] = sorted_indices(Ideal(ring, value))
        else:
            out[key] = value
    return out


def check_json(ring: Ring, result: CheckResult) -> dict:
    out: dict[str, Any] = {"holds": result.holds}
    if result.witness is not None:
        out["witness"] = witness_json(ring, result.witness)
    if result.note:
        out["note"] = result.note
    return out


def profile_json(profile: PropertyProfile) -> dict:
    ring = profile.family.ring
    return {
        "ring": ring.label,
        "family": profile.family.name,
        "members": [sorted_indices(Ideal(ring, m))
                    for m in profile.family.sorted_masks()],
        "standing_ok": profile.standing_ok,
        "verdicts": {name: check_json(ring, res)
                     for name, res in profile.verdicts.items()},
    }


def pip_json(report: PipReport, ring: Ring) -> dict:
    return {
        "ring": report.ring_label,
        "family": report.family_name,
        "oka": check_json(ring, report.oka),
        "max_complement": [ideal_json(i) for i in report.max_complement],
        "containment_ok": report.containment_ok,
        "violation": report.violation,
    }


def supplement_json(report: SupplementReport, ring: Ring) -> dict:
    return {
        "ring": report.ring_label,
        "family": report.family_name,
        "status": report.status,
        "statements": [{"name": s.name, "triggered": s.triggered,
                        "holds": s.holds,
                        "witness": witness_json(ring, s.witness)}
                       for s in report.statements],
    }


# ------------------------------------------------------------------ corpus

def corpus_to_json(corpus) -> dict:
    return {
        "rings": corpus.ring_descriptions,
        "caps": {"order": corpus.order_cap, "lattice": corpus.lattice_cap},
        "seed": corpus.seed,
        "families_per_ring": corpus.families_per_ring,
    }


def corpus_from_json(data: dict):
    from .harness import Corpus
    caps = data.get("caps", {})
    return Corpus(
        ring_descriptions=list(data["rings"]),
        order_cap=int(caps.get("order", ORDER_CAP)),
        lattice_cap=int(caps.get("lattice", LATTICE_CAP)),
        seed=int(data.get("seed", 0)),
        families_per_ring=int(data.get("families_per_ring", 1000)),
    )


def load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(path: str, obj: Any, *, pretty: bool = False) -> None:
    text = pretty_json(obj) if pretty else canonical_json(obj)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
