"""Unipotent splitting, wall elements, the sphere complex and membership certificates."""
from .certificates import (
    MembershipCertificate, certify, common_ell, conjugated_walls, ell_table, membership_certificates,
    rescaling_checks,
)
from .frame import (
    CycleFrame, TranslationVector, WallElement, WallReport, choose_wall_elements, cone_threshold_sharp,
    fundamental_domain_sample, integral_cone_sample, lattice_rank, make_frame, parallelotope_steps,
    sigma_corner_pattern, sigma_corners, translate_domain, translation_vector, wall_reports,
)
from .pipeline import (
    CycleRun, cone_facts, contraction_facts, corner_facts, run_cycle, sphere_facts, sphere_ok, translation_facts,
)
from .sphere import (
    SphereCell, SphereComplex, apex_is_interior, boundary_is_sphere, boundary_squares_vanish, build_sphere,
    homology, sphere_class_generates,
)
from .unipotent import UnipotentVector, denominator_lcm, ell_of, rescaling_identity, split_unipotent

__all__ = [
    "CycleRun", "cone_facts", "contraction_facts", "corner_facts", "run_cycle", "sphere_facts", "sphere_ok",
    "translation_facts",
    "CycleFrame", "MembershipCertificate", "SphereCell", "SphereComplex", "TranslationVector",
    "UnipotentVector", "WallElement", "WallReport", "apex_is_interior", "boundary_is_sphere",
    "boundary_squares_vanish", "build_sphere", "certify", "choose_wall_elements", "common_ell",
    "cone_threshold_sharp", "conjugated_walls", "denominator_lcm", "ell_of", "ell_table",
    "fundamental_domain_sample", "homology", "integral_cone_sample", "lattice_rank", "make_frame",
    "membership_certificates", "parallelotope_steps", "rescaling_checks", "rescaling_identity",
    "sigma_corner_pattern", "sigma_corners", "sphere_class_generates", "split_unipotent",
    "translate_domain", "translation_vector", "wall_reports",
]
