"""Session-file ingestion, query execution and JSON reporting.

A session file declares a ring, named primes, one or more modules and named
ideals, then lists queries (att, realize, reduce-dim1, combine, enumerate,
lemma25).  Everything is validated before any computation; query failures
after validation are reported per query without aborting the session.
Reports go to stdout as JSON and are byte-identical across runs unless
timings are requested; diagnostics go to stderr.

Exit codes: 0 success, 1 input or validation error, 2 unsupported or failed
construction, 3 internal verification fault (including self-test mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .corpus import example24
from .idealops import Ideal, NonHomogeneousError, PrimeIdeal, dim_quotient
from .lctop import (
    AttachedSet,
    EmptyAttachedSetError,
    ModulePresentation,
    UnsupportedConstructionError,
    att_top,
    check_lemma25,
    present_module,
    reduce_to_dim1,
)
from .polycore import GREVLEX, LEX, Field, ParseError, Ring
from .realize import (
    DEFAULT_MAX_COEFF,
    MAX_ENUMERATION_PRIMES,
    ConstructionFailedError,
    VerificationFaultError,
    combine_intersection,
    enumerate_all,
    realize_subset,
)

__all__ = ["SessionValidationError", "load_session", "run_session", "selftest_example24", "main"]

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_UNSUPPORTED = 2
EXIT_FAULT = 3

_ORDERS = {"grevlex": GREVLEX, "lex": LEX}
_QUERY_OPS = ("att", "realize", "reduce-dim1", "combine", "enumerate", "lemma25")


class SessionValidationError(ValueError):
    """Invalid session content; carries the JSON-path-style location."""

    def __init__(self, message: str, location: str):
        super().__init__(f"{location}: {message}")
        self.location = location


@dataclass
class Session:
    ring: Ring
    primes: dict              # name -> PrimeIdeal
    modules: dict             # name -> ModulePresentation
    module_prime_names: dict  # module name -> declared prime-name tuple
    ideals: dict              # name -> Ideal
    queries: list             # validated query dicts


def _expect(condition, message, location):
    if not condition:
        raise SessionValidationError(message, location)


def load_session(data: dict) -> Session:
    """Validate a session document; every referenced name must resolve."""
    _expect(isinstance(data, dict), "session must be a JSON object", "$")

    ring_spec = data.get("ring")
    _expect(isinstance(ring_spec, dict), "missing ring declaration", "ring")
    variables = ring_spec.get("variables")
    _expect(
        isinstance(variables, list) and variables and all(isinstance(v, str) for v in variables),
        "ring.variables must be a nonempty list of names",
        "ring.variables",
    )
    characteristic = ring_spec.get("characteristic", 0)
    _expect(isinstance(characteristic, int), "characteristic must be an integer", "ring.characteristic")
    try:
        ring = Ring(tuple(variables), Field(characteristic))
    except ValueError as exc:
        raise SessionValidationError(str(exc), "ring") from exc

    primes = {}
    prime_spec = data.get("primes", {})
    _expect(isinstance(prime_spec, dict), "primes must be an object", "primes")
    for name, spec in prime_spec.items():
        where = f"primes.{name}"
        if isinstance(spec, list):
            spec = {"generators": spec}
        _expect(isinstance(spec, dict), "prime must be an object or generator list", where)
        gens = spec.get("generators")
        _expect(
            isinstance(gens, list) and gens and all(isinstance(g, str) for g in gens),
            "generators must be a nonempty list of strings",
            f"{where}.generators",
        )
        certificate = spec.get("certificate", "auto")
        _expect(
            certificate in ("auto", "linear", "asserted"),
            "certificate must be 'linear' or 'asserted'",
            f"{where}.certificate",
        )
        try:
            ideal = Ideal.parse(ring, *gens)
            if certificate == "auto":
                try:
                    prime = PrimeIdeal.linear(ideal)
                except ValueError:
                    prime = PrimeIdeal.asserted(ideal)
            elif certificate == "linear":
                prime = PrimeIdeal.linear(ideal)
            else:
                prime = PrimeIdeal.asserted(ideal)
        except (ParseError, NonHomogeneousError, ValueError) as exc:
            raise SessionValidationError(str(exc), where) from exc
        primes[name] = prime

    modules = {}
    module_prime_names = {}
    module_spec = data.get("modules", {})
    _expect(isinstance(module_spec, dict), "modules must be an object", "modules")
    for name, prime_names in module_spec.items():
        where = f"modules.{name}"
        _expect(
            isinstance(prime_names, list) and prime_names,
            "module must list at least one prime name",
            where,
        )
        for p in prime_names:
            _expect(p in primes, f"undeclared prime {p!r}", where)
        try:
            modules[name] = present_module(ring, [primes[p] for p in prime_names])
        except ValueError as exc:
            raise SessionValidationError(str(exc), where) from exc
        module_prime_names[name] = tuple(prime_names)

    ideals = {}
    ideal_spec = data.get("ideals", {})
    _expect(isinstance(ideal_spec, dict), "ideals must be an object", "ideals")
    for name, gens in ideal_spec.items():
        where = f"ideals.{name}"
        _expect(
            isinstance(gens, list) and all(isinstance(g, str) for g in gens),
            "ideal must be a list of generator strings",
            where,
        )
        try:
            ideals[name] = Ideal.parse(ring, *gens)
        except (ParseError, NonHomogeneousError) as exc:
            raise SessionValidationError(str(exc), where) from exc

    raw_queries = data.get("queries", [])
    _expect(isinstance(raw_queries, list), "queries must be a list", "queries")
    queries = []
    for k, query in enumerate(raw_queries):
        where = f"queries[{k}]"
        _expect(isinstance(query, dict), "query must be an object", where)
        op = query.get("op")
        _expect(op in _QUERY_OPS, f"unknown op {op!r}", f"{where}.op")
        module_name = query.get("module")
        if module_name is None:
            _expect(len(modules) == 1, "query must name a module", f"{where}.module")
            module_name = next(iter(modules))
        _expect(module_name in modules, f"undeclared module {module_name!r}", f"{where}.module")
        checked = {"op": op, "module": module_name}
        if op in ("att", "reduce-dim1"):
            ideal_name = query.get("ideal")
            _expect(ideal_name in ideals, f"undeclared ideal {ideal_name!r}", f"{where}.ideal")
            checked["ideal"] = ideal_name
        elif op == "combine":
            pair = query.get("ideals")
            _expect(
                isinstance(pair, list) and len(pair) == 2,
                "combine takes exactly two ideal names",
                f"{where}.ideals",
            )
            for nm in pair:
                _expect(nm in ideals, f"undeclared ideal {nm!r}", f"{where}.ideals")
            checked["ideals"] = tuple(pair)
        elif op in ("realize", "lemma25"):
            checked["subset"] = _validate_subset(
                query.get("subset"), module_name, modules, module_prime_names, f"{where}.subset"
            )
        else:  # enumerate
            _expect(
                modules[module_name].assh_size <= MAX_ENUMERATION_PRIMES,
                f"enumeration is limited to {MAX_ENUMERATION_PRIMES} maximal-dimension primes",
                where,
            )
        queries.append(checked)

    return Session(
        ring=ring,
        primes=primes,
        modules=modules,
        module_prime_names=module_prime_names,
        ideals=ideals,
        queries=queries,
    )


def _validate_subset(entries, module_name, modules, module_prime_names, where):
    """Resolve prime names or declaration indices to canonical assh positions."""
    _expect(isinstance(entries, list), "subset must be a list", where)
    module = modules[module_name]
    declared = module_prime_names[module_name]
    assh_ideals = [p.ideal for p in module.assh_primes]

    def position_of(prime_name):
        target = None
        for i, name in enumerate(declared):
            if name == prime_name:
                target = module.minimal_primes[i].ideal
        _expect(target is not None, f"prime {prime_name!r} not in module", where)
        for pos, ideal in enumerate(assh_ideals):
            if ideal == target:
                return pos
        raise SessionValidationError(
            f"prime {prime_name!r} is not of maximal dimension", where
        )

    positions = []
    for entry in entries:
        if isinstance(entry, str):
            positions.append(position_of(entry))
        elif isinstance(entry, int):
            _expect(0 <= entry < len(declared), f"index {entry} out of range", where)
            positions.append(position_of(declared[entry]))
        else:
            raise SessionValidationError("subset entries must be names or indices", where)
    return tuple(positions)


# ---------------------------------------------------------------------------
# Execution.


def _attached_names(att: AttachedSet, module: ModulePresentation, session: Session, module_name: str):
    declared = session.module_prime_names[module_name]
    names = []
    for pos in att:
        ideal = module.assh_primes[pos].ideal
        name = next(
            declared[i]
            for i in range(len(declared))
            if session.modules[module_name].minimal_primes[i].ideal == ideal
        )
        names.append(name)
    return sorted(names)


def _ideal_json(ideal: Ideal, order):
    return list(ideal.canonical_generators(order))


def _certificates_json(report, module, session, module_name, order):
    declared_names = _attached_names(module.full_attached(), module, session, module_name)
    out = []
    for cert in report.certificates:
        out.append(
            {
                "excluded": declared_names[cert.excluded_index],
                "prime": _ideal_json(cert.prime.ideal, order),
                "certificate": cert.prime.certificate,
                "rank": cert.rank,
                "dim": cert.dim,
                "witness": cert.witness.render(),
            }
        )
    return out


def _execute_query(session: Session, query: dict, options) -> dict:
    module_name = query["module"]
    module = session.modules[module_name]
    order = options["order"]
    max_coeff = options["max_coeff"]
    result = {"op": query["op"], "module": module_name}

    def names(att):
        return _attached_names(att, module, session, module_name)

    op = query["op"]
    if op == "att":
        result["ideal"] = query["ideal"]
        att = att_top(session.ideals[query["ideal"]], module)
        result["attached"] = names(att)
    elif op == "realize":
        subset = module.attached(query["subset"])
        result["subset"] = names(subset)
        report = realize_subset(subset, module, max_coeff=max_coeff)
        result["ideal"] = _ideal_json(report.ideal, order)
        result["path"] = report.path
        result["attached"] = names(report.attached)
        result["certificates"] = _certificates_json(report, module, session, module_name, order)
    elif op == "reduce-dim1":
        result["ideal"] = query["ideal"]
        b = reduce_to_dim1(session.ideals[query["ideal"]], module, max_coeff=max_coeff)
        result["reduced"] = _ideal_json(b, order)
        result["dim"] = dim_quotient(b)
        result["attached"] = names(att_top(b, module))
    elif op == "combine":
        first, second = query["ideals"]
        result["ideals"] = [first, second]
        combined = combine_intersection(
            session.ideals[first], session.ideals[second], module, max_coeff=max_coeff
        )
        result["ideal"] = _ideal_json(combined, order)
        result["attached"] = names(att_top(combined, module))
    elif op == "lemma25":
        subset = module.attached(query["subset"])
        result["subset"] = names(subset)
        result["holds"] = check_lemma25(subset, module)
    else:  # enumerate
        reports = enumerate_all(module, max_coeff=max_coeff)
        rows = []
        for subset, report in reports.items():
            rows.append(
                {
                    "subset": names(subset),
                    "ideal": _ideal_json(report.ideal, order),
                    "attached": names(report.attached),
                }
            )
        result["rows"] = rows
        result["distinct_count"] = len({tuple(r["attached"]) for r in rows})
        result["expected_count"] = 1 << module.assh_size
    result["status"] = "ok"
    return result


_ERROR_KINDS = (
    (VerificationFaultError, "verification-fault", EXIT_FAULT),
    (UnsupportedConstructionError, "unsupported", EXIT_UNSUPPORTED),
    (ConstructionFailedError, "construction-failed", EXIT_UNSUPPORTED),
    (EmptyAttachedSetError, "empty-attached-set", EXIT_VALIDATION),
)


def _run_query_guarded(session, query, options):
    started = time.perf_counter()
    try:
        result = _execute_query(session, query, options)
        exit_code = EXIT_OK
    except Exception as exc:  # per-query isolation; session continues
        kind, exit_code = "error", EXIT_FAULT
        for klass, label, code in _ERROR_KINDS:
            if isinstance(exc, klass):
                kind, exit_code = label, code
                break
        result = {
            "op": query["op"],
            "module": query["module"],
            "status": "error",
            "error": {"kind": kind, "message": str(exc)},
        }
    if options["timings"]:
        result["ms"] = round((time.perf_counter() - started) * 1000, 3)
    return result, exit_code


def run_session(session: Session, options) -> tuple[dict, int]:
    """Execute all queries; the report preserves session order."""
    if options["parallel"] and len(session.queries) > 1:
        with ThreadPoolExecutor() as pool:
            outcomes = list(
                pool.map(lambda q: _run_query_guarded(session, q, options), session.queries)
            )
    else:
        outcomes = [_run_query_guarded(session, q, options) for q in session.queries]
    results = [r for r, _ in outcomes]
    exit_code = max((c for _, c in outcomes), default=EXIT_OK)
    report = {
        "tool": "attprimes",
        "queries": results,
        "status": "ok" if exit_code == EXIT_OK else "error",
    }
    return report, exit_code


# ---------------------------------------------------------------------------
# Built-in self-test.


def selftest_example24(*, max_coeff: int = DEFAULT_MAX_COEFF, corpus=None) -> tuple[dict, int]:
    """Evaluate every corpus ideal against its published attached set, then
    enumerate all subsets and check the distinct count."""
    data = corpus if corpus is not None else example24()
    checks = []
    failures = 0
    for name in sorted(data.expected_att, key=_selftest_order):
        att = att_top(data.ideals[name], data.module)
        computed = sorted(data.att_names(att))
        expected = sorted(data.expected_att[name])
        ok = computed == expected
        failures += not ok
        checks.append(
            {"ideal": name, "expected": expected, "computed": computed, "pass": ok}
        )
    reports = enumerate_all(data.module, max_coeff=max_coeff)
    distinct = len({report.attached.indices for report in reports.values()})
    expected_count = 1 << data.module.assh_size
    count_ok = distinct == expected_count
    report = {
        "tool": "attprimes",
        "selftest": "example-2.4",
        "checks": checks,
        "enumerate": {
            "distinct_count": distinct,
            "expected_count": expected_count,
            "pass": count_ok,
        },
        "status": "ok" if failures == 0 and count_ok else "fail",
    }
    return report, EXIT_OK if report["status"] == "ok" else EXIT_FAULT


def _selftest_order(name: str):
    return (len(name), name)


def _selftest_diff(report, stream):
    for check in report["checks"]:
        if not check["pass"]:
            print(
                f"att({check['ideal']}): expected {check['expected']}, got {check['computed']}",
                file=stream,
            )
    if not report["enumerate"]["pass"]:
        print(
            f"enumerate: expected {report['enumerate']['expected_count']} distinct attached "
            f"sets, got {report['enumerate']['distinct_count']}",
            file=stream,
        )


# ---------------------------------------------------------------------------
# Entry point.


def _build_argparser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="attprimes",
        description="Attached primes of top local cohomology: decide and realize.",
    )
    parser.add_argument("--max-coeff", type=int, default=DEFAULT_MAX_COEFF,
                        help="coefficient bound for the linear-form search")
    parser.add_argument("--order", choices=sorted(_ORDERS), default="grevlex",
                        help="monomial order used to render output ideals")
    parser.add_argument("--timings", action="store_true",
                        help="include per-query wall times (breaks byte-determinism)")
    parser.add_argument("--parallel", action="store_true",
                        help="evaluate independent queries concurrently")
    parser.add_argument("--indent", type=int, default=2, help="JSON indentation")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="execute a session file")
    run.add_argument("session", help="path to the JSON session file")
    sub.add_parser("selftest", help="run the built-in golden-corpus checks")
    enum = sub.add_parser("enumerate", help="realize all subsets for one module")
    enum.add_argument("session", help="path to the JSON session file")
    enum.add_argument("--module", required=True, help="module name to enumerate")
    return parser


def _emit(report: dict, indent: int):
    json.dump(report, sys.stdout, indent=indent)
    sys.stdout.write("\n")


def main(argv=None) -> int:
    args = _build_argparser().parse_args(argv)
    options = {
        "max_coeff": args.max_coeff,
        "order": _ORDERS[args.order],
        "timings": args.timings,
        "parallel": args.parallel,
    }

    if args.command == "selftest":
        report, code = selftest_example24(max_coeff=args.max_coeff)
        _emit(report, args.indent)
        if code != EXIT_OK:
            _selftest_diff(report, sys.stderr)
        return code

    try:
        with open(args.session, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        print(f"cannot read session file: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except json.JSONDecodeError as exc:
        print(f"session file is not valid JSON: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    try:
        session = load_session(data)
    except SessionValidationError as exc:
        print(f"invalid session: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    if args.command == "enumerate":
        if args.module not in session.modules:
            print(f"invalid session: undeclared module {args.module!r}", file=sys.stderr)
            return EXIT_VALIDATION
        if session.modules[args.module].assh_size > MAX_ENUMERATION_PRIMES:
            print(
                f"refused: enumeration is limited to {MAX_ENUMERATION_PRIMES} "
                "maximal-dimension primes",
                file=sys.stderr,
            )
            return EXIT_VALIDATION
        session.queries = [{"op": "enumerate", "module": args.module}]

    report, code = run_session(session, options)
    _emit(report, args.indent)
    if code != EXIT_OK:
        print("one or more queries failed; see report", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
