"""Command-line surface: expansions, coefficients, verification, cache.

Exit codes: 0 success, 1 a verification found a counterexample or a
computation hit a genuine degeneration, 2 malformed input, 3 an internal
invariant was violated (diagnostic on stderr).  All output for fixed
arguments is byte-stable; randomized suites take explicit seeds and echo
them in the report.
"""

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .cache import (
    clear_cache,
    inspect_cache,
    load_cache,
    resolve_cache_path,
    save_cache,
)
from .coefficients import (
    C_coefficient,
    CValue,
    USpec,
    check_lemma2,
    check_recurrence_5,
    check_remark_recurrence,
)
from .errors import InternalInvariant, QtsymError, SingularSystem
from .expansion import (
    ExpansionTerm,
    part_multiplicities,
    reconstruct_e_expansion,
    reconstruct_theorem1,
    reconstruct_theorem2,
    schur_check,
    theorem1_expand,
    theorem2_expand,
    theorem3_expand,
    theorem4_expand,
)
from .operators import (
    apply_D,
    apply_E,
    check_lemma1,
    d_eigenvalue,
    e_eigenvalue,
)
from .partitions import partitions_of, vectors_with_sum_at_most
from .render import render_coefficient, render_expansion
from .symfunc import (
    expand_in_g_basis,
    expand_in_variables,
    macdonald_P,
    macdonald_Q,
    set_degree_cap,
)

SUITES = (
    "theorem1",
    "theorem3",
    "lemma1",
    "lemma2",
    "recurrence5",
    "remark",
    "eigen",
    "schur",
)

_RECURRENCE_SHAPES = ((2, 1, 1), (2, 2, 1), (3, 1, 0), (3, 2, 1))


def _parse_int_vector(text: str, what: str) -> tuple:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be comma-separated integers")
    if any(p < 0 for p in parts):
        raise argparse.ArgumentTypeError(f"{what} entries must be nonnegative")
    return parts


def _parse_partition(text: str) -> tuple:
    parts = _parse_int_vector(text, "partition")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise argparse.ArgumentTypeError("partition must be weakly decreasing")
    return parts


def _parse_theta(text: str) -> tuple:
    return _parse_int_vector(text, "theta")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtsym",
        description="Exact expansions of two-parameter orthogonal "
        "symmetric functions, with verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    expand = sub.add_parser("expand", help="expand one basis element")
    expand.add_argument("--lambda", dest="lam", type=_parse_partition, required=True)
    expand.add_argument("--theorem", type=int, choices=(1, 2, 3, 4), default=1)
    expand.add_argument("--q-equals-t", action="store_true")
    expand.add_argument("--format", choices=("json", "latex", "text"), default="text")
    expand.add_argument("--degree-cap", type=int, default=None)
    expand.add_argument("--cache", default=None)
    expand.add_argument(
        "--verify",
        action="store_true",
        help="check the expansion against its independent oracle",
    )
    expand.set_defaults(run=cmd_expand)

    coeff = sub.add_parser("coeff", help="evaluate one expansion coefficient")
    coeff.add_argument("--theta", type=_parse_theta, required=True)
    coeff.add_argument("--lambda", dest="lam", type=_parse_partition, required=True)
    coeff.add_argument("--q-equals-t", action="store_true")
    coeff.add_argument("--format", choices=("json", "latex", "text"), default="text")
    coeff.set_defaults(run=cmd_coeff)

    verify = sub.add_parser("verify", help="run an identity suite")
    verify.add_argument("--suite", choices=SUITES + ("all",), required=True)
    verify.add_argument("--max-weight", type=int, default=4)
    verify.add_argument("--max-length", type=int, default=3)
    verify.add_argument("--n", type=int, default=2)
    verify.add_argument("--samples", type=int, default=5)
    verify.add_argument("--seed", type=int, default=1)
    verify.add_argument("--parallelism", type=int, default=1)
    verify.add_argument("--degree-cap", type=int, default=None)
    verify.set_defaults(run=cmd_verify)

    cache = sub.add_parser("cache", help="inspect or clear the basis cache")
    cache.add_argument("action", choices=("inspect", "clear"))
    cache.add_argument("--cache", default=None)
    cache.set_defaults(run=cmd_cache)

    return parser


def _specialized_terms(terms: list) -> list:
    out = []
    for term in terms:
        coeff = term.coefficient.specialize_t_to_q()
        if not coeff.is_zero():
            out.append(ExpansionTerm(term.theta, coeff, term.row, term.target))
    return out


def _specialized_indexed(indexed: dict) -> dict:
    out = {}
    for key, coeff in indexed.items():
        spec = coeff.specialize_t_to_q()
        if not spec.is_zero():
            out[key] = spec
    return out


def cmd_expand(args) -> int:
    if args.degree_cap is not None:
        set_degree_cap(args.degree_cap)
    cache_path = resolve_cache_path(args.cache)
    if cache_path:
        load_cache(cache_path)

    lam = args.lam
    if args.theorem in (1, 3):
        terms = theorem1_expand(lam) if args.theorem == 1 else None
        indexed = theorem3_expand(lam) if args.theorem == 3 else None
    else:
        ms = part_multiplicities(lam)
        terms = theorem2_expand(ms) if args.theorem == 2 else None
        indexed = theorem4_expand(ms) if args.theorem == 4 else None

    if args.verify:
        if args.theorem == 1:
            ok = reconstruct_theorem1(terms) == macdonald_Q(lam)
        elif args.theorem == 2:
            ok = reconstruct_theorem2(terms) == macdonald_P(lam)
        elif args.theorem == 3:
            ok = indexed == expand_in_g_basis(macdonald_Q(lam))
        else:
            ok = reconstruct_e_expansion(indexed) == macdonald_P(lam)
        if not ok:
            print(f"verification failed for {lam}", file=sys.stderr)
            return 1

    if args.q_equals_t:
        if terms is not None:
            terms = _specialized_terms(terms)
        else:
            indexed = _specialized_indexed(indexed)

    print(
        render_expansion(
            lam,
            args.theorem,
            args.format,
            terms=terms,
            indexed=indexed,
            q_equals_t=args.q_equals_t,
        )
    )
    if cache_path:
        save_cache(cache_path)
    return 0


def cmd_coeff(args) -> int:
    if len(args.theta) != max(len(args.lam) - 1, 0):
        print(
            f"theta length {len(args.theta)} does not match "
            f"partition length {len(args.lam)} minus one",
            file=sys.stderr,
        )
        return 2
    value = C_coefficient(args.theta, USpec.from_partition(args.lam))
    if args.q_equals_t:
        value = CValue(value.value.specialize_t_to_q(), value.regularized)
    print(render_coefficient(value, args.format))
    return 0


def _shapes(max_weight: int, max_length: int):
    for weight in range(1, max_weight + 1):
        for parts in partitions_of(weight):
            if len(parts) <= max_length:
                yield parts


def _run_cases(cases, check, parallelism: int) -> list:
    """Apply check to each case, collecting failure witnesses in order."""
    if parallelism > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            flags = list(pool.map(check, cases))
    else:
        flags = [check(case) for case in cases]
    return [str(case) for case, ok in zip(cases, flags) if not ok]


def _suite_theorem1(args) -> dict:
    cases = list(_shapes(args.max_weight, args.max_length))

    def check(parts):
        return reconstruct_theorem1(theorem1_expand(parts)) == macdonald_Q(parts)

    failures = _run_cases(cases, check, args.parallelism)
    return _report("theorem1", cases, failures, {
        "max_weight": args.max_weight, "max_length": args.max_length,
    })


def _suite_theorem3(args) -> dict:
    cases = list(_shapes(args.max_weight, args.max_length))

    def check(parts):
        return theorem3_expand(parts) == expand_in_g_basis(macdonald_Q(parts))

    failures = _run_cases(cases, check, args.parallelism)
    return _report("theorem3", cases, failures, {
        "max_weight": args.max_weight, "max_length": args.max_length,
    })


def _suite_lemma1(args) -> dict:
    cases = list(range(1, args.n + 1))
    failures = []
    for n in cases:
        try:
            check_lemma1(n, args.samples, args.seed)
        except QtsymError as exc:
            failures.append(f"n={n}: {exc}")
    return _report("lemma1", cases, failures, {
        "n": args.n, "samples": args.samples,
    })


def _suite_lemma2(args) -> dict:
    cases = list(_shapes(args.max_weight, args.max_length))
    failures = _run_cases(cases, check_lemma2, args.parallelism)
    return _report("lemma2", cases, failures, {
        "max_weight": args.max_weight, "max_length": args.max_length,
    })


def _recurrence_cases():
    cases = []
    for shape in _RECURRENCE_SHAPES:
        n = len(shape) - 1
        for theta in vectors_with_sum_at_most(n, 2):
            cases.append((shape, theta))
    return cases


def _suite_recurrence(name: str, checker, args) -> dict:
    cases = _recurrence_cases()

    def check(case):
        shape, theta = case
        return checker(theta, USpec.from_partition(shape))

    failures = _run_cases(cases, check, args.parallelism)
    return _report(name, cases, failures, {"theta_cap": 2})


def _suite_eigen(args) -> dict:
    cases = []
    for n in range(1, args.n + 1):
        for parts in _shapes(args.max_weight, n):
            cases.append((n, parts))

    def check(case):
        n, parts = case
        f = expand_in_variables(macdonald_P(parts), n)
        if apply_E(f) != f.scale(e_eigenvalue(parts, n)):
            return False
        ev = d_eigenvalue(parts, n)
        return apply_D(f) == [f.scale(ev.coeff(k)) for k in range(n + 1)]

    failures = _run_cases(cases, check, args.parallelism)
    return _report("eigen", cases, failures, {
        "n": args.n, "max_weight": args.max_weight,
    })


def _suite_schur(args) -> dict:
    cases = list(_shapes(args.max_weight, args.max_weight))
    failures = _run_cases(cases, schur_check, args.parallelism)
    return _report("schur", cases, failures, {"max_weight": args.max_weight})


def _report(name: str, cases, failures: list, bounds: dict) -> dict:
    return {
        "suite": name,
        "bounds": bounds,
        "cases": len(list(cases)),
        "failures": failures,
        "pass": not failures,
    }


def cmd_verify(args) -> int:
    if args.parallelism < 1:
        print("parallelism must be at least 1", file=sys.stderr)
        return 2
    if args.degree_cap is not None:
        set_degree_cap(args.degree_cap)
    runners = {
        "theorem1": _suite_theorem1,
        "theorem3": _suite_theorem3,
        "lemma1": _suite_lemma1,
        "lemma2": _suite_lemma2,
        "recurrence5": lambda a: _suite_recurrence(
            "recurrence5", check_recurrence_5, a
        ),
        "remark": lambda a: _suite_recurrence(
            "remark", check_remark_recurrence, a
        ),
        "eigen": _suite_eigen,
        "schur": _suite_schur,
    }
    names = SUITES if args.suite == "all" else (args.suite,)
    suites = [runners[name](args) for name in names]
    report = {
        "seed": args.seed,
        "parallelism": args.parallelism,
        "suites": suites,
        "pass": all(s["pass"] for s in suites),
    }
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0 if report["pass"] else 1


def cmd_cache(args) -> int:
    path = resolve_cache_path(args.cache)
    if not path:
        print("no cache path: pass --cache or set QTSYM_CACHE", file=sys.stderr)
        return 2
    if args.action == "inspect":
        print(json.dumps(inspect_cache(path), indent=2, sort_keys=True))
    else:
        removed = clear_cache(path)
        print(json.dumps({"cleared": removed, "path": path}, sort_keys=True))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.run(args)
    except (InternalInvariant, SingularSystem) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except QtsymError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())
