"""Batch command-line front end: every decision procedure and constructor
behind one verb each, JSON in and JSON out.

Output on stdout is deterministic for a fixed --seed (keys sorted, no
timestamps); errors go to stderr as structured JSON.  Exit codes: 0 for
success or a passing certificate, 1 for domain errors, 2 for usage errors,
3 for a failing certificate or verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from .embed import (
    CoprimalityFailure,
    FFGaloisExt,
    decide_sigma_solvability,
    lemma1_check,
    lift_sigma,
    problem_from_quotient,
)
from .ffield import FieldAut, field_from_descriptor
from .groups import group_from_json
from .orepoly import (
    ore_left_lcm,
    ore_mul,
    ore_poly_from_json,
    ore_right_divmod,
    ore_right_gcd,
    ore_witness,
)
from .quat import REAL_PLACE, is_division_ring, level_local, theorem13_feasible
from .splitcon import (
    ConstructionError,
    SpecError,
    construct_lprime,
    parse_spec,
    report_from_json,
    verify_report,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_CERT = 3


def _load(arg: str):
    """Accept inline JSON or a path to a JSON file."""
    text = arg
    if not arg.lstrip().startswith(("{", "[")):
        with open(arg, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _emit(payload: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="skewgalois",
        description="decision procedures for twisted polynomial rings, "
        "embedding problems over finite fields, symmetric-group "
        "constructions, and quaternion level checks",
    )
    ap.add_argument("--pretty", action="store_true", help="indent the JSON output")
    ap.add_argument("--seed", type=int, default=0, help="seed for reproducible field moduli")
    sub = ap.add_subparsers(dest="verb", required=True)

    d = sub.add_parser("decide", help="solvability of an embedding problem over the twisted function field")
    d.add_argument("--group", required=True, help="group JSON (inline or file)")
    d.add_argument("--alpha", required=True, help='{"map": [...]} image list onto C_[L:K]')
    d.add_argument("--K", required=True, help='base field descriptor "p^n"')
    d.add_argument("--L", required=True, help='extension field descriptor "p^m"')
    d.add_argument("--sigma", type=int, required=True, help="Frobenius exponent of sigma on K")

    lt = sub.add_parser("lift-tau", help="unique same-order extension of sigma to L")
    lt.add_argument("--K", required=True)
    lt.add_argument("--L", required=True)
    lt.add_argument("--sigma", type=int, required=True)

    lm = sub.add_parser("lemma1", help="both Galois-condition characterizations for (L/K, sigma, tau)")
    lm.add_argument("--K", required=True)
    lm.add_argument("--L", required=True)
    lm.add_argument("--sigma", type=int, required=True)
    lm.add_argument("--tau", type=int, required=True)

    o = sub.add_parser("ore", help="twisted polynomial arithmetic")
    o.add_argument("--op", required=True, choices=["mul", "divmod", "gcd", "lcm", "witness"])
    o.add_argument("--f", required=True, help="polynomial JSON (inline or file)")
    o.add_argument("--g", required=True)

    tw = sub.add_parser("tower", help="nilpotent-kernel reduction tower of a solvable group")
    tw.add_argument("--group", required=True)

    cl = sub.add_parser("construct-lprime", help="certified construction with prescribed local behavior")
    cl.add_argument("--spec", action="append", required=True,
                    help='place spec "<prime>:ts|rq|ur<m>[:ramL]" or "inf:ts" (repeatable)')
    cl.add_argument("--p-kernel", type=int, required=True)
    cl.add_argument("--n-min", type=int, required=True)
    cl.add_argument("--extra-l-ram", default="",
                    help="comma-separated primes known ramified in L beyond the specs")

    lv = sub.add_parser("level", help="level of a completion of Q")
    lv.add_argument("--place", required=True, help='a prime, "REAL", or "inf"')

    fe = sub.add_parser("feasible-13", help="does some completion of the field have level >= 4")
    fe.add_argument("--field", required=True, help='"Q" or "Q(sqrt:m)"')
    fe.add_argument("--division-ring", action="store_true",
                    help="also report whether the quaternions form a division ring")

    vr = sub.add_parser("verify-report", help="re-check a construction report from its JSON")
    vr.add_argument("--report", required=True)

    st = sub.add_parser("selftest", help="run the bundled verification suites")
    st.add_argument("--only", type=int, default=None, help="run a single criterion (1-10)")
    return ap


def _verb_decide(args) -> tuple[dict, int]:
    G = group_from_json(_load(args.group))
    K = field_from_descriptor(args.K, args.seed)
    L = field_from_descriptor(args.L, args.seed)
    ext = FFGaloisExt(K, L)
    images = _load(args.alpha)["map"]
    ep = problem_from_quotient(ext, G, images)
    verdict = decide_sigma_solvability(ep, FieldAut(K, args.sigma))
    return verdict.to_json(), EXIT_OK


def _verb_lift_tau(args) -> tuple[dict, int]:
    K = field_from_descriptor(args.K, args.seed)
    L = field_from_descriptor(args.L, args.seed)
    ext = FFGaloisExt(K, L)
    tau, unique = lift_sigma(ext, FieldAut(K, args.sigma))
    return {"tau": tau.to_json(), "order": tau.order, "unique": unique}, EXIT_OK


def _verb_lemma1(args) -> tuple[dict, int]:
    K = field_from_descriptor(args.K, args.seed)
    L = field_from_descriptor(args.L, args.seed)
    ext = FFGaloisExt(K, L)
    res = lemma1_check(ext, FieldAut(K, args.sigma), FieldAut(L, args.tau))
    return res, EXIT_OK


def _verb_ore(args) -> tuple[dict, int]:
    f = ore_poly_from_json(_load(args.f))
    g = ore_poly_from_json(_load(args.g))
    if args.op == "mul":
        return {"product": ore_mul(f, g).to_json()}, EXIT_OK
    if args.op == "divmod":
        res = ore_right_divmod(f, g)
        return {"quotient": res.quotient.to_json(), "remainder": res.remainder.to_json()}, EXIT_OK
    if args.op == "gcd":
        return {"gcd": ore_right_gcd(f, g).to_json()}, EXIT_OK
    if args.op == "lcm":
        return {"lcm": ore_left_lcm(f, g).to_json()}, EXIT_OK
    r, s = ore_witness(f, g)
    return {
        "r": r.to_json(),
        "s": s.to_json(),
        "common_multiple": ore_mul(f, r).to_json(),
    }, EXIT_OK


def _verb_tower(args) -> tuple[dict, int]:
    G = group_from_json(_load(args.group))
    from .groups import solvable_tower

    steps = []
    for step in solvable_tower(G):
        steps.append(
            {
                "group_order": step.group.order,
                "N": list(step.N.elements),
                "Gp": list(step.Gp.elements),
                "phi": list(step.phi.images),
                "kernel_order": step.kernel_order(),
                "note": step.note,
            }
        )
    return {"steps": steps}, EXIT_OK


def _verb_construct(args) -> tuple[dict, int]:
    specs = [parse_spec(s) for s in args.spec]
    extra = {int(p) for p in args.extra_l_ram.split(",") if p.strip()}
    try:
        report = construct_lprime(
            specs, p_kernel=args.p_kernel, n_min=args.n_min,
            extra_L_ram=frozenset(extra), seed=args.seed,
        )
    except ConstructionError as exc:
        payload = {"error": "ConstructionError", "message": str(exc)}
        if exc.partial is not None:
            payload["partial"] = exc.partial.to_json()
        return payload, EXIT_CERT
    return report.to_json(), EXIT_OK


def _verb_level(args) -> tuple[dict, int]:
    place = args.place
    if place in (REAL_PLACE, "inf"):
        result = level_local(REAL_PLACE)
    else:
        result = level_local(int(place))
    return result.to_json(), EXIT_OK


def _verb_feasible(args) -> tuple[dict, int]:
    res = theorem13_feasible(args.field)
    payload = res.to_json()
    if args.division_ring:
        payload["division_ring"] = is_division_ring(args.field).to_json()
    return payload, EXIT_OK


def _verb_verify_report(args) -> tuple[dict, int]:
    report = report_from_json(_load(args.report))
    result = verify_report(report)
    return result.to_json(), EXIT_OK if result.ok else EXIT_CERT


def _verb_selftest(args) -> tuple[dict, int]:
    from .selftest import run_all

    summary = run_all(only=args.only)
    for r in summary["criteria"]:
        status = "PASS" if r["passed"] else "FAIL"
        print(f"{r['name']}: {status}", file=sys.stderr)
    return summary, EXIT_OK if summary["all_passed"] else EXIT_CERT


_VERBS = {
    "decide": _verb_decide,
    "lift-tau": _verb_lift_tau,
    "lemma1": _verb_lemma1,
    "ore": _verb_ore,
    "tower": _verb_tower,
    "construct-lprime": _verb_construct,
    "level": _verb_level,
    "feasible-13": _verb_feasible,
    "verify-report": _verb_verify_report,
    "selftest": _verb_selftest,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        payload, code = _VERBS[args.verb](args)
    except CoprimalityFailure as exc:
        _error({"error": "CoprimalityFailure", "message": str(exc),
                "extensions": exc.extensions})
        return EXIT_DOMAIN
    except (SpecError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        _error({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_DOMAIN
    _emit(payload, args.pretty)
    return code


def _error(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
