"""Command-line front end emitting reproducible JSON certificates.

Every command produces one certificate document:

    {schema_version, command, inputs, field, payload, checks}

serialized with sorted keys, two-space indent, and a trailing newline, and
containing only integers, strings, booleans, nulls, arrays, and objects.
Field elements appear as coefficient vectors, low degree first. Identical
inputs therefore reproduce identical bytes.

Exit codes: 0 success, 2 hypotheses not met (includes no-point-found and
invalid profiles), 3 a verification check failed, 4 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .actions import random_affine, invariance_report
from .compression import faithfulness_witness, rank_certificate
from .errors import (
    EvenCharacteristicError,
    InvalidProfileError,
    NoPointFoundError,
    NotPrimeError,
)
from .gf import field_make
from .profile import binary_profile, check_hypotheses
from .quadric import (
    in_small_diagonal,
    on_quadric,
    power_sums,
    sample_quadric_point,
)
from .rng import SplitMix64
from .trace_system import evaluate_system, lift_block_solution, solve_block_system

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_HYPOTHESIS = 2
EXIT_VERIFY = 3
EXIT_USAGE = 4


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad arguments; the certificate contract reserves 2
    for hypothesis failures, so usage errors are remapped to 4."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _certificate(command: str, inputs: dict, ctx, payload: dict, checks) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "field": ctx.to_json(),
        "payload": payload,
        "checks": [{"name": name, "passed": bool(ok)} for name, ok in checks],
    }


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _emit(doc: dict, json_path: str | None) -> None:
    text = canonical_json(doc)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_field_spec(spec: str):
    """'p' or 'p^k' -> FieldCtx; raises ValueError on malformed input."""
    parts = spec.split("^")
    if len(parts) == 1:
        p, k = int(parts[0]), 1
    elif len(parts) == 2:
        p, k = int(parts[0]), int(parts[1])
    else:
        raise ValueError(f"malformed field spec {spec!r}; expected p or p^k")
    return field_make(p, k)


def _point_json(a) -> list:
    return a.to_json()


# --- subcommand implementations ---------------------------------------------


def _cmd_check(args) -> tuple[dict, int]:
    decision = check_hypotheses(args.n, args.p, args.degree)
    ctx = field_make(args.p, args.degree)
    prof = binary_profile(args.n)
    payload = decision.to_json()
    payload["exponents"] = list(prof.exponents)
    doc = _certificate(
        "check",
        {"n": args.n, "p": args.p, "degree": args.degree},
        ctx,
        payload,
        [("applies", decision.applies)],
    )
    return doc, EXIT_OK if decision.applies else EXIT_HYPOTHESIS


def _solve_common(n: int, p: int):
    prof = binary_profile(n)
    sol = solve_block_system(prof, p)
    lin, quad = evaluate_system(sol)
    nontrivial = any(not ci.is_zero() for ci in sol.c)
    checks = [
        ("linear_sum_zero", lin.is_zero()),
        ("quadratic_sum_zero", quad.is_zero()),
        ("nontrivial", nontrivial),
        ("last_coordinate_zero", sol.c[-1].is_zero()),
    ]
    payload = sol.to_json()
    payload["checks_values"] = {"linear": lin.to_json(), "quadratic": quad.to_json()}
    return sol, payload, checks


def _invalid_profile_doc(command: str, inputs: dict, p: int, exc: Exception):
    ctx = field_make(p, 1)
    doc = _certificate(
        command,
        inputs,
        ctx,
        {"error": "InvalidProfile", "message": str(exc)},
        [("solvable_profile", False)],
    )
    return doc, EXIT_HYPOTHESIS


def _cmd_solve(args) -> tuple[dict, int]:
    inputs = {"n": args.n, "p": args.p}
    try:
        sol, payload, checks = _solve_common(args.n, args.p)
    except InvalidProfileError as exc:
        return _invalid_profile_doc("solve", inputs, args.p, exc)
    doc = _certificate("solve", inputs, sol.ctx, payload, checks)
    ok = all(passed for _, passed in checks)
    return doc, EXIT_OK if ok else EXIT_VERIFY


def _cmd_construct(args) -> tuple[dict, int]:
    inputs = {"n": args.n, "p": args.p}
    try:
        sol, payload, checks = _solve_common(args.n, args.p)
    except InvalidProfileError as exc:
        return _invalid_profile_doc("construct", inputs, args.p, exc)
    lift = lift_block_solution(sol.profile, sol)
    s1, s2 = power_sums(lift)
    checks = checks + [
        ("lift_on_quadric", on_quadric(lift)),
        ("lift_off_small_diagonal", not in_small_diagonal(lift)),
    ]
    payload["lift"] = _point_json(lift)
    payload["lift_sums"] = {"coordinate_sum": s1.to_json(), "square_sum": s2.to_json()}
    doc = _certificate("construct", inputs, sol.ctx, payload, checks)
    ok = all(passed for _, passed in checks)
    return doc, EXIT_OK if ok else EXIT_VERIFY


def _no_point_doc(command: str, inputs: dict, ctx, exc: NoPointFoundError):
    doc = _certificate(
        command,
        inputs,
        ctx,
        {
            "error": "NoPointFound",
            "message": str(exc),
            "suggestion": "retry over an extension field (raise the field degree)",
        },
        [("point_found", False)],
    )
    return doc, EXIT_HYPOTHESIS


def _cmd_sample(args) -> tuple[dict, int]:
    ctx = _parse_field_spec(args.field)
    inputs = {
        "n": args.n,
        "field": args.field,
        "seed": args.seed,
        "max_tries": args.max_tries,
    }
    if args.n < 5:
        raise ValueError("sampling needs n >= 5")
    try:
        point = sample_quadric_point(args.n, ctx, args.seed, args.max_tries)
    except NoPointFoundError as exc:
        return _no_point_doc("sample", inputs, ctx, exc)
    from .quadric import in_discriminant

    s1, s2 = power_sums(point)
    checks = [
        ("point_found", True),
        ("on_quadric", on_quadric(point)),
        ("off_discriminant", not in_discriminant(point)),
    ]
    payload = {
        "point": _point_json(point),
        "sums": {"coordinate_sum": s1.to_json(), "square_sum": s2.to_json()},
    }
    doc = _certificate("sample", inputs, ctx, payload, checks)
    ok = all(passed for _, passed in checks)
    return doc, EXIT_OK if ok else EXIT_VERIFY


def _cmd_borel_check(args) -> tuple[dict, int]:
    ctx = _parse_field_spec(args.field)
    inputs = {
        "n": args.n,
        "field": args.field,
        "seed": args.seed,
        "samples": args.samples,
    }
    master = SplitMix64(args.seed)
    reports = []
    all_identities = True
    for index in range(args.samples):
        point_seed = master.derive_seed()
        try:
            point = sample_quadric_point(args.n, ctx, point_seed)
        except NoPointFoundError as exc:
            return _no_point_doc("borel-check", inputs, ctx, exc)
        g = random_affine(ctx, master)
        report = invariance_report(point, g)
        all_identities = all_identities and report.identities_hold
        reports.append(
            {
                "index": index,
                "seed": point_seed,
                "point": _point_json(point),
                "map": g.to_json(),
                "report": report.to_json(),
            }
        )
    payload = {
        "characteristic_divides_n": args.n % ctx.p == 0,
        "reports": reports,
    }
    checks = [("invariance_identities_all", all_identities)]
    doc = _certificate("borel-check", inputs, ctx, payload, checks)
    return doc, EXIT_OK if all_identities else EXIT_VERIFY


def _cmd_certify(args) -> tuple[dict, int]:
    decision = check_hypotheses(args.n, args.p, args.field_degree)
    ctx = field_make(args.p, args.field_degree)
    inputs = {
        "n": args.n,
        "p": args.p,
        "field_degree": args.field_degree,
        "samples": args.samples,
        "seed": args.seed,
        "control": args.control,
        "max_tries": args.max_tries,
    }
    control_mode = not decision.applies

    block_json = None
    block_ok = True
    prof = binary_profile(args.n)
    if prof.r >= 4 and args.n % args.p == 0:
        sol = solve_block_system(prof, args.p)
        lin, quad = evaluate_system(sol)
        lift = lift_block_solution(prof, sol)
        block_ok = lin.is_zero() and quad.is_zero() and on_quadric(lift)
        block_json = sol.to_json()
        block_json["lift"] = _point_json(lift)

    master = SplitMix64(args.seed)
    samples = []
    all_satisfied = True
    all_witness = True
    ranks = []
    for index in range(args.samples):
        point_seed = master.derive_seed()
        try:
            point = sample_quadric_point(args.n, ctx, point_seed, args.max_tries)
        except NoPointFoundError as exc:
            return _no_point_doc("certify", inputs, ctx, exc)
        cert = rank_certificate(point)
        witness = faithfulness_witness(point)
        all_satisfied = all_satisfied and cert.satisfied
        all_witness = all_witness and witness
        ranks.append(cert.restricted_rank)
        samples.append(
            {
                "index": index,
                "seed": point_seed,
                "point": _point_json(point),
                "ambient_rank": cert.ambient_rank,
                "tangent_dim": cert.tangent_dim,
                "restricted_rank": cert.restricted_rank,
                "bound": cert.bound,
                "satisfied": cert.satisfied,
                "faithfulness_witness": witness,
            }
        )
    payload = {
        "hypothesis": decision.to_json(),
        "control": control_mode,
        "control_requested": args.control,
        "block_solution": block_json,
        "samples": samples,
        "observed_restricted_ranks": {"min": min(ranks), "max": max(ranks)},
        "verdict": all_satisfied and all_witness and block_ok,
    }
    checks = [
        ("hypotheses_apply", decision.applies),
        ("all_samples_within_bound", all_satisfied),
        ("faithfulness_witness_all", all_witness),
    ]
    if block_json is not None:
        checks.append(("block_solution_verified", block_ok))
    doc = _certificate("certify", inputs, ctx, payload, checks)
    if not (all_satisfied and all_witness and block_ok):
        return doc, EXIT_VERIFY
    return doc, EXIT_OK


# --- argument wiring ---------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(
        prog="quadcert",
        description="Exact finite-field constructions and rank certificates "
        "on the power-sum quadric, as reproducible JSON certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", metavar="PATH", default=None, help="write the certificate to PATH instead of stdout")

    p_check = sub.add_parser("check", help="hypothesis gate for (n, p)")
    p_check.add_argument("n", type=int)
    p_check.add_argument("p", type=int)
    p_check.add_argument("--degree", type=int, default=1, help="degree k of the working field GF(p^k)")
    add_json(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_solve = sub.add_parser("solve", help="solve the weighted block system")
    p_solve.add_argument("n", type=int)
    p_solve.add_argument("p", type=int)
    add_json(p_solve)
    p_solve.set_defaults(func=_cmd_solve)

    p_construct = sub.add_parser(
        "construct", help="solve, lift to a length-n point, verify membership"
    )
    p_construct.add_argument("n", type=int)
    p_construct.add_argument("p", type=int)
    add_json(p_construct)
    p_construct.set_defaults(func=_cmd_construct)

    p_sample = sub.add_parser(
        "sample", help="sample a distinct-coordinate point on the quadric"
    )
    p_sample.add_argument("n", type=int)
    p_sample.add_argument("--field", required=True, metavar="P^K", help="field spec, e.g. 11 or 3^4")
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.add_argument("--max-tries", type=int, default=None)
    add_json(p_sample)
    p_sample.set_defaults(func=_cmd_sample)

    p_borel = sub.add_parser(
        "borel-check", help="affine-invariance identity reports at sampled points"
    )
    p_borel.add_argument("n", type=int)
    p_borel.add_argument("--field", required=True, metavar="P^K")
    p_borel.add_argument("--seed", type=int, default=0)
    p_borel.add_argument("--samples", type=int, default=20)
    add_json(p_borel)
    p_borel.set_defaults(func=_cmd_borel_check)

    p_certify = sub.add_parser(
        "certify", help="full pipeline: gate, block solution, sampled rank certificates"
    )
    p_certify.add_argument("n", type=int)
    p_certify.add_argument("p", type=int)
    p_certify.add_argument("--field-degree", type=int, default=1)
    p_certify.add_argument("--samples", type=int, default=20)
    p_certify.add_argument("--seed", type=int, default=0)
    p_certify.add_argument("--max-tries", type=int, default=None)
    p_certify.add_argument(
        "--control",
        action="store_true",
        help="acknowledge an out-of-hypothesis run (p not dividing n); "
        "control runs are auto-detected either way and use the n-3 bound",
    )
    add_json(p_certify)
    p_certify.set_defaults(func=_cmd_certify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.func(args)
    except (EvenCharacteristicError, NotPrimeError, ValueError) as exc:
        sys.stderr.write(f"quadcert {args.command}: error: {exc}\n")
        return EXIT_USAGE
    _emit(doc, args.json)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
