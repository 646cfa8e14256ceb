"""Composition monoid calculus for representations of acyclic quivers."""

from .errors import *  # noqa: F401,F403
from .normal_form import (
    ProductForm,
    Verdict,
    canonicalize_commuting,
    decide_equal,
    full_space_factorization,
    partial_normal_form,
    word_to_product,
)
from .oracle import (
    FamilySet,
    FqRep,
    compare_families,
    dynkin_equal,
    enumerate_reps,
    generic_ext_oracle,
    has_comp_series,
    hom_dim,
    s_d_points,
    variety_dim,
    variety_points,
)
from .qalgebra import (
    NCPoly,
    QPoly,
    graded_ideal_dim,
    q_binomial,
    q_factorial,
    serre_relations,
    specialize_q0,
    u0_monomials_equal,
)
from .quiver import (
    Quiver,
    admissible_order,
    ambient_dims,
    euler_form,
    parse_dim,
    parse_quiver,
    serialize_quiver,
    symmetrized_form,
)
from .schofield import (
    canonical_decomposition,
    drel3_threshold,
    enumerate_obs_relations,
    ext_value,
    ext_vanishes,
    generic_hom,
    is_isotropic_root,
    is_schur_root,
)
from .words import (
    codim_lower_bound,
    hasse_diagram,
    v_function,
    word_degree,
    word_leq,
    zero_pattern,
)

__version__ = "0.1.0"
