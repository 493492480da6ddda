import json

import pytest

from ringlab import FamilyInputError, all_ideals, spectrum
from ringlab.families import property_profile
from ringlab.harness import Corpus, default_corpus
from ringlab.serialize import (canonical_json, corpus_from_json,
                               corpus_to_json, family_from_description,
                               ideal_json, lattice_json, profile_json,
                               ring_from_description, spectrum_json)
from ringlab.zoo import FamilyBuild

from bruteforce import find_ring_isomorphism


def test_ring_descriptions_round_trip(small_rings):
    descs = [
        {"type": "zn", "n": 6},
        {"type": "matrix", "base": {"type": "zn", "n": 2}, "k": 2},
        {"type": "product", "factors": [{"type": "zn", "n": 2},
                                        {"type": "zn", "n": 3}]},
        {"type": "triangular", "a": {"type": "zn", "n": 2},
         "b": {"type": "zn", "n": 2}, "bimodule": {"type": "regular"}},
        {"type": "triangular", "a": {"type": "zn", "n": 2},
         "b": {"type": "zn", "n": 2}, "bimodule": {"type": "power", "k": 2}},
        {"type": "quotient", "base": {"type": "zn", "n": 6}, "ideal_gens": [3]},
        {"type": "opposite", "base": {"type": "zn", "n": 4}},
    ]
    orders = [6, 16, 6, 8, 16, 3, 4]
    for desc, order in zip(descs, orders):
        ring = ring_from_description(desc)
        assert ring.order == order
        assert ring.description == desc


def test_table_description(z6):
    desc = {"type": "table", "add": z6.add.tolist(), "mul": z6.mul.tolist(),
            "zero": 0, "one": 1, "label": "copy"}
    ring = ring_from_description(desc)
    assert find_ring_isomorphism(ring, z6) is not None


def test_bad_descriptions_rejected():
    with pytest.raises(FamilyInputError):
        ring_from_description({"type": "nope"})
    with pytest.raises(FamilyInputError):
        ring_from_description({"no_type": 1})
    with pytest.raises(FamilyInputError):
        ring_from_description({"type": "product", "factors": [{"type": "zn", "n": 2}]})
    with pytest.raises(FamilyInputError):
        ring_from_description({
            "type": "triangular", "a": {"type": "zn", "n": 2},
            "b": {"type": "zn", "n": 3}, "bimodule": {"type": "regular"}})


def test_family_descriptions(z6):
    lat = all_ideals(z6)
    explicit = family_from_description(
        lat, {"type": "explicit", "ideals": [[2], [3]], "name": "pair"})
    assert len(explicit.members) == 2          # unit NOT silently added
    assert not explicit.has_unit_ideal()

    named = family_from_description(
        lat, {"type": "named", "name": "meets_m_system",
              "params": {"s": [1, 2, 4]}})
    assert isinstance(named, FamilyBuild)
    assert named.family.has_unit_ideal()

    with pytest.raises(FamilyInputError):
        family_from_description(lat, {"type": "???"})


def test_json_dumps_are_canonical(z6):
    lat = all_ideals(z6)
    spec = spectrum(lat)
    blob1 = canonical_json(spectrum_json(spec))
    blob2 = canonical_json(spectrum_json(spectrum(all_ideals(z6))))
    assert blob1 == blob2
    payload = json.loads(blob1)
    assert [p["minimal"] for p in payload["primes"]] == [True, True]

    lj = lattice_json(lat)
    assert lj["count"] == 4
    assert [len(i["members"]) for i in lj["ideals"]] == [1, 2, 3, 6]
    assert [1, 3] in lj["containment"]

    from ringlab import family_from_masks
    fam = family_from_masks(lat, [(1 << 6) - 1], "unit")
    pj = profile_json(property_profile(lat, fam))
    assert json.loads(canonical_json(pj))["verdicts"]["oka"]["holds"]


def test_ideal_json_gens_regenerate(z6, t2):
    from ringlab import Ideal, ideal_closure
    for ring in (z6, t2):
        for ideal in all_ideals(ring).ideals:
            payload = ideal_json(ideal)
            regrown = ideal_closure(ring, payload["gens"])
            assert sorted_members(regrown) == payload["members"]


def sorted_members(ideal):
    from ringlab import sorted_indices
    return sorted_indices(ideal)


def test_corpus_round_trip():
    corpus = default_corpus()
    corpus.seed = 99
    corpus.families_per_ring = 123
    blob = corpus_to_json(corpus)
    back = corpus_from_json(json.loads(canonical_json(blob)))
    assert back.seed == 99
    assert back.families_per_ring == 123
    assert back.ring_descriptions == corpus.ring_descriptions

    minimal = corpus_from_json({"rings": [{"type": "zn", "n": 4}]})
    assert isinstance(minimal, Corpus)
    assert minimal.families_per_ring == 1000
