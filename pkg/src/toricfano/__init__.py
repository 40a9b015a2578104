"""Cohomology-ring invariants and diffeomorphism classification of toric
Fano manifolds, computed from smooth Fano polytopes."""

from .polytope import (SmoothFanoPolytope, parse_polytopes,
                       load_fixture_file, validate_smooth_fano,
                       dual_polytope, normalized_volume, direct_sum,
                       ParseError, ValidationError)
from .cohomology import (build_presentation, RingPresentation,
                         CohomologyPresentation, chern_c1, pontryagin_total,
                         degree_anticanonical, degree_via_ring)
from .invariants import (kve_integer_bounded, kve_mod_p, sve_integer_bounded,
                         maximal_basis_number, fingerprint,
                         fingerprints_equal, EXHAUSTIVE, BOUNDED,
                         HEURISTIC_INFINITE)
from .equivalence import (sign_equivalent, unimodular_equivalent, classify,
                          verify_witness, EquivalenceWitness,
                          SIGN_EQUIV, UNIMODULAR_EQUIV, FINGERPRINT_EQUAL)
from .ringiso import (find_ring_isos_bounded, check_witness,
                      check_c1_preserving, check_pontryagin_preserving,
                      degree_gate, RingIsoWitness)

__version__ = "0.1.0"
