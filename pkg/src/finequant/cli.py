"""Command-line front end: ``finequant {quantize,verify,casimir,critical}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 critical weight.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from ._graded import bits
from .checks import SUITES, Setting, run_suites
from .contactfields import spo_basis, superdimension
from .errors import AlgebraError, CriticalValueError
from .finesymbols import basis_symbols
from .parser import CONTACT_SYMBOL, parse
from .quantmaps import (C_CRIT, C_PRIME, I_DELTA, alpha, casimir, critical_report,
                        enumerate_critical, quantize, sq_map)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CRITICAL = 0, 1, 2, 3

SET_LABELS = {I_DELTA: "I_δ", C_PRIME: "C′", C_CRIT: "C_crit"}
SET_KEYS = {I_DELTA: "I_delta", C_PRIME: "C_prime", C_CRIT: "C_crit"}
_RATIONAL = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


def rational(text):
    m = _RATIONAL.match(text)
    if not m or (m.group(2) is not None and int(m.group(2)) == 0):
        raise argparse.ArgumentTypeError(f"expected an exact rational p or p/q, got {text!r}")
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


def half_integer(text):
    value = rational(text)
    if value < 0 or (2 * value).denominator != 1:
        raise argparse.ArgumentTypeError(f"expected a nonnegative half-integer, got {text!r}")
    return value


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def nonnegative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def q(value):
    """Serialize a rational as a ``num/den`` string."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _witness_json(witness):
    return {k: (q(v) if isinstance(v, Fraction) else v) for k, v in witness.items()}


def _witness_text(witness):
    return " ".join(f"{k}={v}" for k, v in witness.items())


def _emit(payload, as_json, lines):
    if as_json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


# -- quantize -------------------------------------------------------------------------

def _superpoly_json(A):
    return [{"x": e[0], "theta": [b + 1 for b in bits(m)], "coef": q(c)}
            for (e, m), c in sorted(A.terms.items(), key=lambda kv: A._sort_key(kv[0]))]


def cmd_quantize(args):
    delta = args.mu - args.lam
    S = parse(args.symbol, args.n, CONTACT_SYMBOL, delta)
    D = quantize(S, args.lam, args.mu)
    payload = {
        "command": "quantize",
        "n": args.n,
        "lambda": q(args.lam),
        "mu": q(args.mu),
        "delta": q(delta),
        "symbol": str(S),
        "operator": str(D),
        "terms": [{"dx": c, "dbar": [b + 1 for b in bits(K)], "coefficient": _superpoly_json(A)}
                  for (c, K), A in D.sorted_terms()],
    }
    _emit(payload, args.json, [str(D)])
    return EXIT_OK


# -- verify ---------------------------------------------------------------------------

def cmd_verify(args):
    st = Setting(args.n, args.lam, args.mu, args.dmax)
    suites = SUITES if args.suite == "all" else (args.suite,)
    results = run_suites(st, suites)
    failed = [r for r in results if not r.info and not r.passed]
    lines = []
    for r in results:
        if r.info:
            lines.append(f"INFO {r.name}: {r.failures}/{r.cases} cases differ (known variant, not counted)")
        elif r.passed:
            lines.append(f"PASS {r.name} ({r.cases} cases)")
        else:
            case, lhs, rhs = r.first
            lines.append(f"FAIL {r.name}: {r.failures}/{r.cases} cases; first at {case}")
            lines.append(f"     lhs: {lhs}")
            lines.append(f"     rhs: {rhs}")
    lines.append(f"{len(results) - len(failed)}/{len(results)} identities hold"
                 f" (n={st.n}, lambda={st.lam}, mu={st.mu}, delta={st.delta}, dmax={st.d_max})")
    checks = []
    for r in results:
        entry = {"name": r.name, "suite": r.suite, "cases": r.cases, "failures": r.failures,
                 "status": "info" if r.info else ("pass" if r.passed else "fail"),
                 "counterexample": None}
        if r.first is not None:
            entry["counterexample"] = dict(zip(("case", "lhs", "rhs"), r.first))
        checks.append(entry)
    payload = {"command": "verify", "n": st.n, "lambda": q(st.lam), "mu": q(st.mu),
               "delta": q(st.delta), "dmax": q(st.d_max), "suite": args.suite,
               "passed": not failed, "checks": checks}
    _emit(payload, args.json, lines)
    return EXIT_FAIL if failed else EXIT_OK


# -- casimir --------------------------------------------------------------------------

def cmd_casimir(args):
    k, d = args.k, args.d
    if not (d <= k <= 2 * d):
        raise argparse.ArgumentTypeError(f"bigrade (k={k}, d={d}) needs ceil(d) <= k <= 2d")
    m = superdimension(args.n)
    mu = args.lam + args.delta
    eigen = alpha(k, d, m, args.delta)
    basis = spo_basis(args.n)
    symbols = [s for s in basis_symbols(args.n, d_max=d, delta=args.delta)
               if s.bigrade() == (k, d)]
    residual = None
    for s in symbols:
        if args.rep == "fine":
            v = s
        elif args.rep == "classical":
            v = sq_map(s)
        else:
            v = quantize(s, args.lam, mu)
        r = casimir(args.rep, v, basis) - v.scale(eigen)
        if r:
            residual = (str(s), str(r))
            break
    payload = {"command": "casimir", "rep": args.rep, "n": args.n, "delta": q(args.delta),
               "lambda": q(args.lam), "k": k, "d": q(d), "eigenvalue": q(eigen),
               "checked": len(symbols), "residual": "0" if residual is None else residual[1]}
    lines = [f"eigenvalue alpha(k={k}, d={d}) = {eigen}"]
    if residual is None:
        lines.append(f"residual 0 ({len(symbols)} basis symbols, {args.rep} representation)")
    else:
        lines.append(f"residual {residual[1]} at symbol {residual[0]}")
    _emit(payload, args.json, lines)
    return EXIT_OK if residual is None else EXIT_FAIL


# -- critical -------------------------------------------------------------------------

def cmd_critical(args):
    if args.delta is None:
        triples = enumerate_critical(args.n, args.kmax, args.dmax)
        grouped = {}
        for name, value, witness in triples:
            grouped.setdefault(name, set()).add(value)
        payload = {"command": "critical", "n": args.n, "kmax": args.kmax, "dmax": q(args.dmax),
                   "sets": {SET_KEYS[name]: [q(v) for v in sorted(grouped.get(name, ()))]
                            for name in (I_DELTA, C_PRIME, C_CRIT)}}
        lines = [f"{SET_LABELS[name]}: " + ", ".join(str(v) for v in sorted(grouped.get(name, ())))
                 for name in (I_DELTA, C_PRIME, C_CRIT)]
        _emit(payload, args.json, lines)
        return EXIT_OK
    report = critical_report(args.delta, args.n, args.kmax, args.dmax)
    hits = [{"set": SET_KEYS[name], "witness": _witness_json(w)} for name, w in report.hits]
    payload = {"command": "critical", "n": args.n, "kmax": args.kmax, "dmax": q(args.dmax),
               "delta": q(args.delta), "critical": report.critical, "hits": hits}
    if report.critical:
        name, w = report.hits[0]
        lines = [f"critical ({SET_LABELS[name]} witness {_witness_text(_short(name, w))})"]
        lines += [f"  {SET_LABELS[n_]}: {_witness_text(w_)}" for n_, w_ in report.hits]
    else:
        lines = [f"non-critical (delta = {args.delta}, n = {args.n}, kmax = {args.kmax}, dmax = {args.dmax})"]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _short(name, witness):
    """The parameters that determine the critical value."""
    keep = {I_DELTA: ("c", "j"), C_PRIME: ("k", "i"), C_CRIT: ("k", "kp", "d", "dp")}[name]
    return {k: witness[k] for k in keep}


# -- entry point ----------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="finequant",
                                description="Fine spo(2|n)-equivariant quantization on S^{1|n}.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("quantize", help="quantize a contact-moment symbol")
    sp.add_argument("--n", type=positive_int, required=True)
    sp.add_argument("--lambda", dest="lam", type=rational, metavar="Q", required=True)
    sp.add_argument("--mu", type=rational, metavar="Q", required=True)
    sp.add_argument("--symbol", required=True, help='e.g. "x*z*g1 + t1*z"')
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_quantize)

    sp = sub.add_parser("verify", help="sweep the identity catalog")
    sp.add_argument("--n", type=positive_int, required=True)
    sp.add_argument("--lambda", dest="lam", type=rational, metavar="Q", required=True)
    sp.add_argument("--mu", type=rational, metavar="Q", required=True)
    sp.add_argument("--dmax", type=half_integer, metavar="HALFINT", required=True)
    sp.add_argument("--suite", choices=("all",) + SUITES, default="all")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("casimir", help="Casimir eigenvalue and residual on a bigrade")
    sp.add_argument("--rep", choices=("fine", "classical", "operators"), required=True)
    sp.add_argument("--n", type=positive_int, required=True)
    sp.add_argument("--delta", type=rational, metavar="Q", required=True)
    sp.add_argument("--k", type=nonnegative_int, required=True)
    sp.add_argument("--d", type=half_integer, metavar="HALFINT", required=True)
    sp.add_argument("--lambda", dest="lam", type=rational, metavar="Q", default=Fraction(1, 3),
                    help="source weight for the operators representation (default 1/3)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_casimir)

    sp = sub.add_parser("critical", help="enumerate critical weights or test one")
    sp.add_argument("--n", type=positive_int, required=True)
    sp.add_argument("--kmax", type=nonnegative_int, required=True)
    sp.add_argument("--dmax", type=half_integer, metavar="HALFINT", required=True)
    sp.add_argument("--delta", type=rational, metavar="Q")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_critical)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CriticalValueError as exc:
        print(f"critical value: {exc}", file=sys.stderr)
        return EXIT_CRITICAL
    except (AlgebraError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
