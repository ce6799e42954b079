"""Exact toolkit for d-ary tree automorphism towers and rational dynamics."""

from ._core import (
    Automorphism,
    DomainError,
    abelian_invariants,
    chief_series,
    classify,
    commutator_witness,
    condition_check,
    critical_points,
    detect_pcf,
    discriminant,
    eisenstein_after_shift,
    enumerate_members,
    from_leaf_images,
    inverting_conjugator,
    irreducibility_certificate,
    is_member,
    iterate_poly,
    kronecker_like,
    leaf_index,
    leaf_orbit,
    newton_polygon,
    normalize_tuple,
    order,
    path_of_index,
    random_member,
    rank,
    resultant,
    run_verify,
    same_subtree,
    sample_members,
    sign,
    sign_at,
    sign_below,
    sign_e,
    sign_f,
    square_discriminant_level,
    valuation,
)

__all__ = [
    "Automorphism",
    "DomainError",
    "abelian_invariants",
    "chief_series",
    "classify",
    "commutator_witness",
    "condition_check",
    "critical_points",
    "detect_pcf",
    "discriminant",
    "eisenstein_after_shift",
    "enumerate_members",
    "from_leaf_images",
    "inverting_conjugator",
    "irreducibility_certificate",
    "is_member",
    "iterate_poly",
    "kronecker_like",
    "leaf_index",
    "leaf_orbit",
    "newton_polygon",
    "normalize_tuple",
    "order",
    "path_of_index",
    "random_member",
    "rank",
    "resultant",
    "run_verify",
    "same_subtree",
    "sample_members",
    "sign",
    "sign_at",
    "sign_below",
    "sign_e",
    "sign_f",
    "square_discriminant_level",
    "valuation",
]
