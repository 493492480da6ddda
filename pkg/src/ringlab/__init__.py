"""ringlab: a laboratory for ideal families in finite noncommutative rings.

Builds finite rings from tables, enumerates their one- and two-sided ideal
lattices, checks every closure property of ideal families (monoidal,
semifilter, the squeeze conditions, Oka and its one-sided and strong
variants, the Ako variants), materializes the named families these
properties are known for, and exhaustively verifies the maximal-implies-
prime behavior of all of them on a corpus of small rings.
"""

from .errors import (CapExceeded, FamilyInputError, InternalConsistencyError,
                     NotAnIdeal, RingAxiomError, RingLabError,
                     TheoremViolation, UnsupportedFamily)
from .families import (CHECKERS, IMPLICATIONS, PROPERTY_NAMES, CheckResult,
                       Family, PipReport, PropertyProfile, SupplementReport,
                       assert_implication_consistency, check_oka,
                       family_from_ideals, family_from_masks,
                       intersect_families, property_profile, replay_witness,
                       spectrum_of, verify_pip, verify_supplement)
from .harness import (Corpus, SearchResult, SuiteReport, default_corpus,
                      random_family, run_paper_suite, search_separation)
from .ideals import (Ideal, IdealLattice, all_ideals, element_quotients,
                     generators, ideal_closure, intersect_ideals,
                     left_quotient, power_stabilization, principal,
                     product_ideals, quotient_ring, right_quotient,
                     sorted_indices, sum_ideals, unit_ideal, zero_ideal)
from .modules import (RightModule, annihilator, middle_annihilator,
                      quotient_module, regular_module, submodule_as_module,
                      submodules)
from .primes import (MSystemCheck, PrimalityCheck, PrimeRingReport, SpecResult,
                     is_m_system, is_prime_ideal, is_prime_ring,
                     is_semiprime_ideal, max_in_complement, spectrum,
                     zero_as_product_of_minimal_primes)
from .rings import (Bimodule, Ring, bimodule_from_tables, bimodule_power,
                    bimodule_regular, build_from_tables, build_matrix_ring,
                    build_opposite, build_product, build_quotient,
                    build_triangular, build_zn, central_idempotents,
                    is_dedekind_finite, is_normal, normal_elements)
from .zoo import (FamilyBuild, RingContext, artin_rees_family,
                  build_named_family, contains_member_family,
                  decompose_into_simple_rings, dedekind_finite_factor_family,
                  direct_summand_family, factor_predicate_family,
                  flat_factor_family, idempotent_family, left_faithful_family,
                  meets_m_system, middle_annihilator_family,
                  point_annihilator_family, pred_annihilator_meets,
                  pred_torsion, principal_normal_family,
                  verify_left_right_principal)

__version__ = "0.1.0"
