"""Command-line interface: construct, inspect, check, run the suite, search."""

from __future__ import annotations

import argparse
import sys

from .errors import RingLabError, TheoremViolation
from .families import (Family, assert_implication_consistency, spectrum_of,
                       verify_pip)
from .harness import (BLOCK_NAMES, Corpus, default_corpus, run_paper_suite,
                      search_separation)
from .ideals import LATTICE_CAP, all_ideals, sorted_indices
from .rings import ORDER_CAP
from .serialize import (canonical_json, corpus_from_json, corpus_to_json,
                        dump_json, family_from_description, ideal_json,
                        lattice_json, load_json, pip_json, profile_json,
                        pretty_json, ring_from_description, spectrum_json)
from .zoo import FamilyBuild


def _emit(args, payload: dict, table: str) -> None:
    text = canonical_json(payload) if args.format == "json" else table + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _clip(args, text: str) -> str:
    width = args.max_witness
    if width and len(text) > width:
        return text[: width - 3] + "..."
    return text


def _load_ring(args):
    return ring_from_description(load_json(args.ring_file),
                                 order_cap=args.cap_order)


def _load_family(args, lattice):
    if args.family_file:
        desc = load_json(args.family_file)
    elif args.family:
        params = {}
        for item in args.param or []:
            key, _, raw = item.partition("=")
            values = [int(v) for v in raw.split(",") if v != ""]
            params[key] = values
        desc = {"type": "named", "name": args.family, "params": params}
    else:
        raise RingLabError("provide a family file or --family NAME")
    built = family_from_description(lattice, desc)
    if isinstance(built, FamilyBuild):
        return built.family, built
    return built, None


def cmd_ring(args) -> int:
    ring = _load_ring(args)
    payload = {"label": ring.label, "order": ring.order, "one": ring.one,
               "commutative": ring.is_commutative()}
    _emit(args, payload,
          f"{ring.label}: order {ring.order}, unit {ring.one}, "
          f"commutative: {ring.is_commutative()}")
    return 0


def cmd_ideals(args) -> int:
    ring = _load_ring(args)
    lattice = all_ideals(ring, args.sidedness, lattice_cap=args.cap_lattice)
    lines = [f"{ring.label}: {len(lattice)} {args.sidedness} ideals"]
    for ideal in lattice.ideals:
        lines.append(f"  {sorted_indices(ideal)}")
    _emit(args, lattice_json(lattice), "\n".join(lines))
    return 0


def cmd_spec(args) -> int:
    ring = _load_ring(args)
    lattice = all_ideals(ring, lattice_cap=args.cap_lattice)
    spec = spectrum_of(lattice)
    minimal = {p.mask for p in spec.minimal_primes}
    lines = [f"{ring.label}: {len(spec.primes)} prime ideals"]
    for p in spec.primes:
        tag = " (minimal)" if p.mask in minimal else ""
        lines.append(f"  {sorted_indices(p)}{tag}")
    for ideal in lattice.ideals:
        if ideal.mask in spec.witnesses:
            lines.append(_clip(args,
                               f"  not prime: {sorted_indices(ideal)} "
                               f"witness {spec.witnesses[ideal.mask]}"))
    _emit(args, spectrum_json(spec), "\n".join(lines))
    return 0


def cmd_family(args) -> int:
    ring = _load_ring(args)
    lattice = all_ideals(ring, lattice_cap=args.cap_lattice)
    family, build = _load_family(args, lattice)
    payload = {
        "ring": ring.label,
        "name": family.name,
        "members": [ideal_json(i) for i in family.ideals()],
    }
    lines = [f"{family.name} over {ring.label}: {len(family.members)} ideals"]
    for ideal in family.ideals():
        lines.append(f"  {sorted_indices(ideal)}")
    if build is not None:
        payload["claimed"] = build.claimed
        payload["degenerate"] = build.degenerate
        lines.append(f"claimed property: {build.claimed}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_check(args) -> int:
    ring = _load_ring(args)
    lattice = all_ideals(ring, lattice_cap=args.cap_lattice)
    family, build = _load_family(args, lattice)
    from .families import property_profile
    profile = property_profile(lattice, family)
    payload = profile_json(profile)
    lines = [f"{family.name} over {ring.label}"]
    if not profile.standing_ok:
        lines.append("  standing assumption violated: ring not in family")
    else:
        for name, res in profile.verdicts.items():
            mark = "yes" if res.holds else "no"
            extra = ""
            if res.witness is not None:
                extra = _clip(args, f"  witness: {res.witness}")
            lines.append(f"  {name:16s} {mark}{extra}")
        assert_implication_consistency(profile)
        lines.append("implication diagram: consistent")
        report = verify_pip(lattice, family, oka=profile.verdicts["oka"])
        payload["pip"] = pip_json(report, ring)
        lines.append(f"max outside family: "
                     f"{[sorted_indices(i) for i in report.max_complement]}")
        lines.append(f"all maximal-outside ideals prime: {report.containment_ok}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_pip(args) -> int:
    ring = _load_ring(args)
    lattice = all_ideals(ring, lattice_cap=args.cap_lattice)
    family, _ = _load_family(args, lattice)
    report = verify_pip(lattice, family)
    lines = [f"{family.name} over {ring.label}",
             f"  oka: {report.oka.holds}",
             f"  max outside family: "
             f"{[sorted_indices(i) for i in report.max_complement]}",
             f"  containment in primes: {report.containment_ok}"]
    _emit(args, pip_json(report, ring), "\n".join(lines))
    return 0


def _corpus_from_args(args) -> Corpus:
    if args.corpus_file:
        corpus = corpus_from_json(load_json(args.corpus_file))
    else:
        corpus = default_corpus()
    if args.seed is not None:
        corpus.seed = args.seed
    if getattr(args, "families", None) is not None:
        corpus.families_per_ring = args.families
    corpus.order_cap = args.cap_order
    corpus.lattice_cap = args.cap_lattice
    return corpus


def cmd_suite(args) -> int:
    corpus = _corpus_from_args(args)
    report = run_paper_suite(corpus, only=args.only, jobs=args.jobs)
    payload = report.to_json()
    lines = []
    for b in report.blocks:
        took = report.timings.get(f"{b.ring}:{b.block}", 0.0)
        lines.append(f"{b.ring:16s} {b.block:22s} {b.verdict:16s} "
                     f"checks={b.checks:<7d} {took:6.2f}s")
        if b.verdict == "violation":
            lines.append(_clip(args, f"    {b.details}"))
    summary = payload["summary"]
    lines.append(f"summary: {summary} ok={report.ok()}")
    _emit(args, payload, "\n".join(lines))
    return 0 if report.ok() else 1


def cmd_search(args) -> int:
    corpus = _corpus_from_args(args)
    props_b = [p for p in args.b.split(",") if p]
    result = search_separation(corpus, args.a, props_b, budget=args.budget)
    payload = {
        "status": result.status,
        "ring": result.ring,
        "family": result.family_members,
        "profile": result.profile,
        "families_checked": result.families_checked,
        "exhaustive": result.exhaustive,
    }
    lines = [f"search {args.a} and not ({args.b}): {result.status}"]
    if result.status == "found":
        lines.append(f"  ring: {result.ring}")
        lines.append(f"  family: {result.family_members}")
        lines.append(f"  profile: {result.profile}")
    lines.append(f"  families checked: {result.families_checked}")
    _emit(args, payload, "\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="Finite-ring ideal laboratory: lattices, prime ideals, "
                    "family properties, and exhaustive verification.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="table")
    common.add_argument("--out", help="write output to this path")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--cap-order", type=int, default=ORDER_CAP)
    common.add_argument("--cap-lattice", type=int, default=LATTICE_CAP)
    common.add_argument("--max-witness", type=int, default=160,
                        help="truncate witness dumps in table output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("ring", help="validate and summarize a ring description")
    p.add_argument("ring_file")
    p.set_defaults(fn=cmd_ring)

    p = add_parser("ideals", help="enumerate the ideal lattice")
    p.add_argument("ring_file")
    p.add_argument("--sidedness", choices=["two-sided", "right", "left"],
                   default="two-sided")
    p.set_defaults(fn=cmd_ideals)

    p = add_parser("spec", help="prime ideals and minimal primes")
    p.add_argument("ring_file")
    p.set_defaults(fn=cmd_spec)

    def family_args(p):
        p.add_argument("ring_file")
        p.add_argument("family_file", nargs="?")
        p.add_argument("--family", help="named family constructor")
        p.add_argument("--param", action="append",
                       help="named-family parameter, e.g. s=1,2,4")

    p = add_parser("family", help="materialize a family and list members")
    family_args(p)
    p.set_defaults(fn=cmd_family)

    p = add_parser("check", help="full property profile plus containment report")
    family_args(p)
    p.set_defaults(fn=cmd_check)

    p = add_parser("pip", help="Oka verdict and maximal-complement primality")
    family_args(p)
    p.set_defaults(fn=cmd_pip)

    p = add_parser("suite", help="run the verification suite over a corpus")
    p.add_argument("corpus_file", nargs="?")
    p.add_argument("--only", choices=BLOCK_NAMES)
    p.add_argument("--families", type=int, default=None,
                   help="random families per ring")
    p.set_defaults(fn=cmd_suite)

    p = add_parser("search", help="look for a family separating two properties")
    p.add_argument("corpus_file", nargs="?")
    p.add_argument("--a", required=True, help="property that must hold")
    p.add_argument("--b", required=True,
                   help="comma-separated properties that must all fail")
    p.add_argument("--budget", type=int, default=20000)
    p.set_defaults(fn=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except TheoremViolation as exc:
        sys.stderr.write(f"theorem violation: {exc.statement}\n{exc.dump}\n")
        return 1
    except RingLabError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
