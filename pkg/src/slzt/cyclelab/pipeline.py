"""One-call assembly of the cycle data for a given (n, k)."""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..building import conjugated_root_valuation, contraction_profile, fixes_vertex
from .certificates import common_ell, ell_table, membership_certificates, rescaling_checks
from .frame import (
    CycleFrame, choose_wall_elements, cone_threshold_sharp, fundamental_domain_sample, integral_cone_sample,
    lattice_rank, make_frame, sigma_corner_pattern, translate_domain, wall_reports,
)
from .sphere import (
    apex_is_interior, boundary_is_sphere, boundary_squares_vanish, build_sphere, homology,
    sphere_class_generates,
)


@dataclass
class CycleRun:
    frame: CycleFrame
    walls: list
    wall_reports: list
    domain: list
    sample: list
    ell_table: dict
    ell: int
    ell_auto: int
    certificates: list
    rescaling: list
    sphere: object

    @property
    def n(self) -> int:
        return self.frame.n


def run_cycle(n: int, k: int, floor: int | None = None, k0: int | None = None, ell: int | None = None,
              rescaling: bool = True) -> CycleRun:
    """Walls, the finite domain, l, certificates and the sphere complex.

    ``ell`` overrides the computed common multiple; certificates are then
    built with the override and may fail to be integral.
    """
    frame = make_frame(n, k, floor, k0)
    walls = choose_wall_elements(n, k, frame.floor, frame.k0)
    domain = translate_domain(frame)
    sample = fundamental_domain_sample(frame)
    table = ell_table(frame, walls, domain)
    auto = common_ell(table)
    use = auto if ell is None else ell
    certs = membership_certificates(frame, walls, use, domain, sample, strict=False)
    resc = rescaling_checks(frame, walls, use, domain) if rescaling else []
    return CycleRun(frame, walls, wall_reports(frame, walls, use), domain, sample, table, use, auto,
                    certs, resc, build_sphere(n, use, k))


def sphere_facts(run: CycleRun) -> dict:
    sc = run.sphere
    n = run.n
    return {
        "boundary_squared_zero": boundary_squares_vanish(sc.ball) and boundary_squares_vanish(sc.sphere),
        "top_cells": len(sc.top_cells()),
        "sphere_top_homology": str(homology(sc, n - 2, "sphere", reduced=True)),
        "ball_higher_homology_zero": all(homology(sc, d, "ball").is_zero() for d in range(1, n)),
        "ball_euler": sc.ball.euler_characteristic(),
        "sphere_euler": sc.sphere.euler_characteristic(),
        "boundary_is_sphere": boundary_is_sphere(sc),
        "sphere_class_generates": sphere_class_generates(sc),
        "apex_interior": apex_is_interior(sc),
    }


def sphere_ok(facts: dict, n: int) -> bool:
    return (facts["boundary_squared_zero"] and facts["top_cells"] == 2 ** (n - 1)
            and facts["sphere_top_homology"] == "Z" and facts["ball_higher_homology_zero"]
            and facts["ball_euler"] == 1 and facts["sphere_euler"] == 1 + (-1) ** (n - 2)
            and facts["boundary_is_sphere"] and facts["sphere_class_generates"] and facts["apex_interior"])


def cone_facts(run: CycleRun, seed: int = 0, count: int = 5) -> dict:
    """D_e inside the cone C_y, and random integral unipotents fix the sample."""
    frame = run.frame
    rng = random.Random(seed)
    units = integral_cone_sample(frame, rng, count)
    fixed = all(fixes_vertex(u.matrix(), frame.vertex(x)) for u in units for x in run.sample)
    return {
        "sample_in_cone": all(frame.in_cone(x) for x in run.sample),
        "integral_unipotents_fix_sample": fixed,
        "threshold_sharp": cone_threshold_sharp(frame),
        "sample_size": len(run.sample),
        "unipotents_tried": count,
    }


def corner_facts(run: CycleRun) -> dict:
    pattern = sigma_corner_pattern(run.frame, run.walls)
    ok = all(pattern[i][j] == (i != j) for i in range(len(pattern)) for j in range(len(pattern)))
    return {"pattern": pattern, "ok": ok}


def translation_facts(run: CycleRun) -> dict:
    frame = run.frame
    vecs = [frame.translation(m).valuations for m in frame.unit_words()]
    return {"generators": [list(v) for v in vecs], "rank": lattice_rank(vecs), "expected_rank": frame.n - 2}


def contraction_facts(n: int, k_max: int = 10) -> dict:
    rows = []
    for k in range(k_max + 1):
        for j in range(1, n):
            rows.append((j, k, conjugated_root_valuation(n, j, k), contraction_profile(j, k, n)))
    return {"ok": all(v == expect == k * n for _, k, v, expect in rows), "checked": len(rows)}
