"""hyperrho: spectral radii of uniform hypergraphs at the smallest limit point.

The library computes the spectral radius of a connected r-uniform
hypergraph (power iteration with two-sided bounds, or an exact-residual
bisection on hypertrees), verifies weighted-incidence certificates in
exact rational arithmetic, generates the named extremal families, and
classifies any connected r-uniform hypergraph as Below / Equal / Above
the threshold rho_r = (r-1)! * 4^(1/r).
"""

from .hypergraph import Cycle, Hypergraph, HypergraphError, from_edges
from .canon import canonical_form, are_isomorphic
from .families import (
    FamilyId,
    below_families,
    enumerate_hypertrees,
    equal_families,
    family_members_with_edges,
    gen_BD,
    gen_BD_tilde,
    gen_E,
    gen_F,
    gen_G,
    gen_H,
    gen_cycle,
    gen_edge_star,
    gen_path,
    gen_smith2,
    gen_star,
    gen_tilde_D,
)
from .labeling import (
    CertificateError,
    NormalcyReport,
    Propagation,
    Rational,
    TreeSolve,
    WeightedIncidence,
    alpha_from_rho,
    cert_to_vector,
    check_consistent,
    check_normal,
    check_subnormal,
    check_supernormal,
    default_root,
    incidence_from_json_obj,
    incidence_to_json_obj,
    lift_through_contraction,
    rho_from_alpha,
    tree_alpha_solve,
    tree_propagate,
)
from .spectral import (
    SpectralResult,
    eigen_to_incidence,
    polynomial_form,
    power_method,
    rayleigh,
    spectral_radius,
)
from .classifier import (
    Classification,
    VerificationReport,
    Verdict,
    classify,
    recognize_family,
    rho_r,
    verify_classification,
)

__version__ = "0.1.0"
