"""Batch verification: ``python3 -m slzt verify root|torus|building|cycle|all``.

Each stage runs a list of named checks and records a status (pass, fail or
inconclusive) with witness data.  Reports are deterministic for a fixed
configuration; wall-clock timings are only included with ``--timing``.

Exit codes: 0 all checks pass, 1 some check fails, 2 usage error,
3 some check is inconclusive at the working precision and none fails.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import asdict, dataclass, field

from . import __version__
from .building import LatticeVertex, fixes_vertex, oracle_suite, random_sector_vertex, verify_M_combinatorics
from .cyclelab import (
    cone_facts, contraction_facts, corner_facts, run_cycle, sphere_facts, sphere_ok, translation_facts,
)
from .errors import PrecisionError, SlztError
from .exactfield import INF, LaurentSeries, Matrix, Poly
from .rootlift import all_roots, default_floor, lift_coefficients, q_sequence, residual_bound, vieta_checks
from .toruslab import (
    diagonalizer, exact_identities, fixes_no_point_certificate, leading_term_certificate, make_generators,
    offdiag_valuation_bound, word_matrix, words,
)

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
STAGES = ("root", "torus", "building", "cycle")


@dataclass(frozen=True)
class RunConfig:
    n: int = 3
    prec: int | None = None  # precision floor; None picks each stage's default
    word_bound: int = 2
    k: int = 4
    ell: int | None = None  # None means computed automatically
    samples: int = 100  # random matrices for the stabilizer oracle
    vertices: int = 10
    fmt: str = "text"
    seed: int = 0
    timing: bool = False

    def validate(self) -> None:
        if self.n < 2:
            raise ValueError("--n must be at least 2")
        if self.prec is not None and self.prec > 1 - self.n:
            raise ValueError(f"--prec must be at most {1 - self.n}")
        if self.word_bound < 1:
            raise ValueError("--word-bound must be at least 1")
        if self.k < 1:
            raise ValueError("--k must be at least 1")
        if self.ell is not None and self.ell < 1:
            raise ValueError("--ell must be a positive integer or 'auto'")
        if self.samples < 1 or self.vertices < 1:
            raise ValueError("sample sizes must be positive")


@dataclass
class CheckRecord:
    name: str
    anchor: str
    status: str
    witness: dict
    millis: int | None = None


@dataclass
class VerificationReport:
    config: dict
    checks: list = field(default_factory=list)

    def add(self, record: CheckRecord) -> None:
        self.checks.append(record)

    def extend(self, other: VerificationReport) -> None:
        self.checks.extend(other.checks)

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
        for c in self.checks:
            counts[c.status] += 1
        return {"total": len(self.checks), "passed": counts[PASS], "failed": counts[FAIL],
                "inconclusive": counts[INCONCLUSIVE], "status": self.status}

    @property
    def status(self) -> str:
        statuses = {c.status for c in self.checks}
        if FAIL in statuses:
            return FAIL
        if INCONCLUSIVE in statuses:
            return INCONCLUSIVE
        return PASS

    @property
    def exit_code(self) -> int:
        return {PASS: 0, FAIL: 1, INCONCLUSIVE: 3}[self.status]

    def to_dict(self) -> dict:
        return {"config": self.config, "checks": [asdict(c) for c in self.checks], "summary": self.summary}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=_jsonable)

    def to_text(self) -> str:
        lines = [f"{c.status.upper():<13} {c.name}  [{c.anchor}]" for c in self.checks]
        s = self.summary
        lines.append(f"{s['passed']} passed, {s['failed']} failed, {s['inconclusive']} inconclusive: {s['status']}")
        return "\n".join(lines)


def _jsonable(x):
    if x == INF:
        return "inf"
    if isinstance(x, (tuple, frozenset, set)):
        return list(x)
    return str(x)


def _clean(obj):
    """Make witness data JSON-safe and order-stable."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return "inf" if obj == INF else obj
    return str(obj)


def deeper(floor: int) -> int:
    """Floor with twice the depth below the constant term."""
    return 2 * floor


def run_check(report: VerificationReport, config: RunConfig, name: str, anchor: str, fn, floor=None) -> CheckRecord:
    """Run ``fn(floor) -> (ok, witness)``; one retry at a deeper floor on precision loss."""
    start = time.perf_counter()
    try:
        try:
            ok, witness = fn(floor)
        except PrecisionError as first:
            if floor is None:
                raise
            retry = deeper(floor)
            try:
                ok, witness = fn(retry)
                witness = dict(witness, retried_floor=retry, first_error=str(first))
            except PrecisionError as second:
                raise PrecisionError(f"{first}; retry at floor {retry}: {second}") from second
        status = PASS if ok else FAIL
    except PrecisionError as exc:
        status, witness = INCONCLUSIVE, {"error": str(exc)}
    except SlztError as exc:
        status, witness = FAIL, {"error": f"{type(exc).__name__}: {exc}"}
    millis = round((time.perf_counter() - start) * 1000) if config.timing else None
    record = CheckRecord(name, anchor, status, _clean(witness), millis)
    report.add(record)
    return record


def _config_dict(config: RunConfig, command: str) -> dict:
    d = asdict(config)
    d["command"] = command
    d["version"] = __version__
    d.pop("timing")
    d["ell"] = "auto" if config.ell is None else config.ell
    return d


# -- root ---------------------------------------------------------------------

def cmd_verify_root(config: RunConfig) -> VerificationReport:
    n = config.n
    report = VerificationReport(_config_dict(config, "root"))
    floor = config.prec if config.prec is not None else default_floor(n)
    anchor = "lifted roots of f: f(alpha) = 0 in Q((1/t))"

    def residuals(fl):
        threshold = 1 - fl - 2 * n
        vals = {}
        for k, alpha in enumerate(all_roots(n, fl), start=1):
            vals[k] = residual_bound(alpha, n)
        return all(v >= threshold for v in vals.values()), {"floor": fl, "threshold": threshold, "valuations": vals}

    def product_one(fl):
        alpha = all_roots(n, fl)[0]
        t = LaurentSeries.t()
        acc = LaurentSeries.one()
        for q in q_sequence(n):
            acc = acc * (alpha + t * q)
        diff = acc - 1
        return diff.known_zero(), {"floor": fl, "difference_floor": diff.floor}

    def vieta(fl):
        res = vieta_checks(n, fl)
        return all(res.values()), {"floor": fl, "elementary_symmetric": res}

    def leading(fl):
        lead = [lift_coefficients(n, k, 0)[0] for k in range(1, n + 1)]
        expected = [-q for q in q_sequence(n)]
        return lead == expected, {"c0": lead, "expected": expected}

    run_check(report, config, "root.residual_valuation", anchor, residuals, floor)
    run_check(report, config, "root.product_of_shifts_is_one", "prod (alpha + q_k t) = 1", product_one, floor)
    run_check(report, config, "root.vieta", "roots match the coefficients of f", vieta, floor)
    run_check(report, config, "root.leading_coefficients", "c_0 = -q_k on branch k", leading)
    return report


# -- torus --------------------------------------------------------------------

def cmd_verify_torus(config: RunConfig) -> VerificationReport:
    n, bound = config.n, config.word_bound
    report = VerificationReport(_config_dict(config, "torus"))
    rng = random.Random(config.seed)
    gens = make_generators(n)
    suite = list(words(n - 1, bound))

    def identities(_):
        res = exact_identities(n)
        return all(res.values()), res

    def leading_terms(fl):
        bad = []
        for m in suite:
            try:
                leading_term_certificate(gens, m, fl)
            except SlztError as exc:
                bad.append({"word": m, "error": str(exc)})
        return not bad, {"words": len(suite), "failures": bad[:5], "failure_count": len(bad)}

    def nontrivial(_):
        ident = Matrix.identity(n, Poly.one())
        bad = [m for m in suite if word_matrix(gens, m) == ident]
        return not bad, {"words": len(suite), "identity_words": bad}

    def no_fixed_point(fl):
        certs = [fixes_no_point_certificate(m, fl, n) for m in suite]
        bad = [c.word for c in certs if not c.certified]
        return not bad, {"words": len(suite), "uncertified": bad,
                         "by_valuation": sum(1 for c in certs if c.certified and c.valuation != 0)}

    def vertex_cross_check(_):
        picks = [rng.choice(suite) for _ in range(min(10, len(suite)))]
        verts = [random_sector_vertex(rng, n) for _ in range(10)]
        fixed = [(m, v.exponents) for m in picks for v in verts
                 if fixes_vertex(word_matrix(gens, m), LatticeVertex.from_apartment(v))]
        return not fixed, {"pairs": len(picks) * len(verts), "fixed_pairs": fixed}

    def diagonalizes(fl):
        d = diagonalizer(n, fl)
        bounds = [offdiag_valuation_bound(d.conjugate(a)) for a in gens.generators]
        return min(bounds) >= 20, {"floor": d.floor, "offdiag_valuation_bounds": bounds, "threshold": 20}

    floor = config.prec if config.prec is not None else default_floor(n)
    run_check(report, config, "torus.exact_identities", "a_i in SL_n(Z[t]), commuting, f(C_f) = 0", identities)
    run_check(report, config, "torus.leading_terms", "eigenvalue leading term prod p_i^(2 m_i) t^(2 sum m_i)",
              leading_terms, config.prec if config.prec is not None else 1 - 5 * n)
    run_check(report, config, "torus.words_nontrivial", "A is free abelian of rank n-1", nontrivial)
    run_check(report, config, "torus.no_fixed_point", "nonzero words fix no point of the building",
              no_fixed_point, floor)
    run_check(report, config, "torus.vertex_cross_check", "sampled words move sampled lattice vertices",
              vertex_cross_check)
    run_check(report, config, "torus.diagonalizer", "g a g^-1 is diagonal", diagonalizes, floor)
    return report


# -- building -----------------------------------------------------------------

def cmd_verify_building(config: RunConfig) -> VerificationReport:
    n = config.n
    report = VerificationReport(_config_dict(config, "building"))
    rng = random.Random(config.seed)

    def oracle(_):
        res = oracle_suite(rng, n, config.samples, config.vertices)
        return res.passed, {"samples": res.samples, "agreements": res.agreements, "members": res.members,
                            "undecidable": res.undecidable, "disagreements": list(res.disagreements)[:5]}

    def combinatorics(_):
        if n > 6:
            return True, {"skipped": "boundary combinatorics enumerated for n <= 6"}
        rep = verify_M_combinatorics(n)
        return rep.passed, {"fixed_set": rep.fixed_set, "facets": rep.details["facets"],
                            "chambers_at_P": rep.details["chambers_at_P"]}

    def contraction(_):
        facts = contraction_facts(n, 10)
        return facts["ok"], facts

    run_check(report, config, "building.stabilizer_oracle", "stabilizer of a sector vertex by degree bounds", oracle)
    run_check(report, config, "building.boundary_combinatorics",
              "fixed set at infinity is a subdivided (n-2)-simplex", combinatorics)
    run_check(report, config, "building.contraction", "b^-k u b^k gains valuation k n", contraction)
    return report


# -- cycle --------------------------------------------------------------------

def cmd_verify_cycle(config: RunConfig) -> VerificationReport:
    n, k = config.n, config.k
    report = VerificationReport(_config_dict(config, "cycle"))
    state = {}

    def assemble(fl):
        run = run_cycle(n, k, fl, ell=config.ell)
        state["run"] = run
        return True, {"floor": run.frame.floor, "y": run.frame.y, "e": run.frame.e, "apex": run.frame.apex,
                      "cone_thresholds": run.frame.gamma, "domain_size": len(run.domain),
                      "sample": run.sample}

    rec = run_check(report, config, "cycle.assemble", "apartment frame, y, e and b^k e", assemble, config.prec)
    if rec.status != PASS:
        return report
    run = state["run"]

    def translations(_):
        facts = translation_facts(run)
        return facts["rank"] == facts["expected_rank"], facts

    def walls(_):
        rows = [{"j": r.index, "exponent": w.exponent, "fixes_apex": r.fixes_apex,
                 "fixes_previous": r.fixes_previous, "fixes_y": r.fixes_y, "fixes_next": r.fixes_next,
                 "scaled_same_wall": r.scaled_fixes_apex and not r.scaled_fixes_previous}
                for r, w in zip(run.wall_reports, run.walls)]
        ok = all(r.wall_through_apex and r.scaled_fixes_apex and not r.scaled_fixes_previous
                 for r in run.wall_reports)
        return ok, {"walls": rows}

    def corners(_):
        facts = corner_facts(run)
        return facts["ok"], facts

    def cone(_):
        facts = cone_facts(run, config.seed)
        return facts["sample_in_cone"] and facts["integral_unipotents_fix_sample"] and facts["threshold_sharp"], facts

    def ell(_):
        table = {str(m): list(v) for m, v in run.ell_table.items()}
        divides = all(run.ell % x == 0 for row in run.ell_table.values() for x in row)
        return divides, {"ell": run.ell, "ell_bits": run.ell.bit_length(), "auto": config.ell is None,
                         "per_word": table}

    def rescaling(_):
        bad = [(m, S) for m, S, ok in run.rescaling if not ok]
        return not bad, {"pairs": len(run.rescaling), "failures": bad}

    def certificates(_):
        bad = [{"subset": c.subset, "word": c.word, "integral": c.gamma_integral, "det_one": c.gamma_det_one,
                "residual_small": c.residual_small} for c in run.certificates if not c.valid]
        return not bad, {"certificates": len(run.certificates), "subsets": 2 ** (n - 1),
                         "words": len(run.domain), "vertices_checked": len(run.sample), "failures": bad[:5]}

    def sphere(_):
        facts = sphere_facts(run)
        return sphere_ok(facts, n), facts

    def contraction(_):
        facts = contraction_facts(n, 10)
        return facts["ok"], facts

    run_check(report, config, "cycle.translation_lattice", "A acts on V_e as a lattice of rank n-2", translations)
    run_check(report, config, "cycle.wall_elements", "r_j b^k e = b^k e with the wall through b^k e", walls)
    run_check(report, config, "cycle.sigma_corners", "facet i of sigma lies on the wall of r_i", corners)
    run_check(report, config, "cycle.cone", "integral points of R_u(P) fix the cone C_y", cone)
    run_check(report, config, "cycle.ell", "l = prod over D and i of l(a, r_i)", ell)
    run_check(report, config, "cycle.rescaling_identity", "(a^-1 u^l a)' = ((a^-1 u a)')^l", rescaling)
    run_check(report, config, "cycle.membership_certificates", "(prod g) a D_e lies in SL_n(Z[t]) D_e",
              certificates)
    run_check(report, config, "cycle.sphere_complex", "omega_l bounds a ball containing b^k e", sphere)
    run_check(report, config, "cycle.contraction", "b^-k u b^k gains valuation k n", contraction)
    return report


COMMANDS = {
    "root": cmd_verify_root,
    "torus": cmd_verify_torus,
    "building": cmd_verify_building,
    "cycle": cmd_verify_cycle,
}


def cmd_all(config: RunConfig) -> VerificationReport:
    """The four stages in order, stopping after the first stage with a failure."""
    report = VerificationReport(_config_dict(config, "all"))
    for stage in STAGES:
        part = COMMANDS[stage](config)
        report.extend(part)
        if part.status == FAIL:
            break
    return report


COMMANDS["all"] = cmd_all


# -- argument parsing ---------------------------------------------------------

def _ell_arg(text: str):
    if text == "auto":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a positive integer or 'auto'") from None
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="python3 -m slzt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    verify = sub.add_parser("verify", help="run a verification stage")
    verify.add_argument("stage", choices=[*STAGES, "all"])
    verify.add_argument("--n", type=int, default=3)
    verify.add_argument("--prec", type=int, default=None, help="precision floor (default: per stage)")
    verify.add_argument("--word-bound", type=int, default=2, help="|m_i| bound for word suites")
    verify.add_argument("--k", type=int, default=4, help="escape exponent for b^k e")
    verify.add_argument("--ell", type=_ell_arg, default=None, help="common exponent l, or 'auto'")
    verify.add_argument("--samples", type=int, default=100, help="random matrices for the stabilizer oracle")
    verify.add_argument("--vertices", type=int, default=10, help="sector vertices for the stabilizer oracle")
    verify.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--timing", action="store_true", help="record wall-clock milliseconds per check")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(n=args.n, prec=args.prec, word_bound=args.word_bound, k=args.k, ell=args.ell,
                     samples=args.samples, vertices=args.vertices, fmt=args.fmt, seed=args.seed,
                     timing=args.timing)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = config_from_args(args)
    try:
        config.validate()
    except ValueError as exc:
        parser.error(str(exc))
    report = COMMANDS[args.stage](config)
    print(report.to_json() if config.fmt == "json" else report.to_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
