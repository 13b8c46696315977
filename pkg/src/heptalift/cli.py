"""Command-line interface: one binary, subcommand per capability.

All output is JSON with a fixed key order, so identical inputs give
byte-identical bytes on stdout (the census subcommand adds a wall-clock
field, which is the one deliberate exception).  Exact values are emitted
as strings: integers in decimal, rationals as "num/den"; the floating
L-value results carry explicit error-bound strings next to each value.

Exit codes: 0 success, 2 usage error (bad flags, malformed or out-of-domain
input), 1 computational failure (a verified identity did not hold, or a
series could not be driven to the requested accuracy).  Both error paths
write a one-object JSON diagnostic to stderr.

The default thread count for the census comes from HEPTALIFT_THREADS, then
from the CPU count.
"""

import argparse
import itertools
import json
import sys
import time
from fractions import Fraction

import mpmath

from . import acceptance
from .census import _thread_count, beta_from_census, census_f2
from .density import beta_exps, igusa_verify, mass
from .exactnum import frac_str
from .genfun import (
    exponent_triples,
    gamma_k,
    gamma_k_derived,
    H_verify,
    rs_closed_residue,
    rs_euler_factors,
)
from .jordan import JordanElement
from .lift import eigen_delta, eigen_from_csv, fourier_coeff, local_factor
from .lvalue import CRITICAL_POINTS, MAX_DIGITS, period_report, rationality_probe
from .padic import factorize, genus_invariants, is_prime, reduce_at
from .siegel import f_poly

_EIGEN_PRIME_CAP = 10 ** 6


class UsageError(Exception):
    """Bad invocation or bad input file; maps to exit code 2."""


class ComputeError(Exception):
    """A computation failed or an identity did not verify; exit code 1."""

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error(message)
        raise SystemExit(2)


def _emit_error(message):
    sys.stderr.write(json.dumps({"error": str(message)}) + "\n")


def _emit(payload, out_path):
    text = json.dumps(payload, indent=2) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _num_str(v):
    """Decimal string for an int, 'num/den' for a rational."""
    if isinstance(v, Fraction):
        return frac_str(v)
    return str(v)


def _mp_str(x, sig):
    return mpmath.nstr(x, sig)


def _check_prime(p):
    if not is_prime(p):
        raise UsageError("--prime must be a prime number, got %r" % (p,))
    return p


def _int_csv(text, n, flag):
    parts = text.split(",")
    if len(parts) != n:
        raise UsageError("%s expects %d comma-separated integers" % (flag, n))
    try:
        return tuple(int(v) for v in parts)
    except ValueError:
        raise UsageError("%s expects integers, got %r" % (flag, text))


def _load_element(path):
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path) as fh:
                data = json.load(fh)
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise UsageError("malformed JSON in %s: %s" % (path, exc))
    try:
        return JordanElement.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError("not a valid element description: %s" % (exc,))


def _load_eigen(source, k, max_prime):
    """Eigenvalue table from 'tau' (builtin) or a CSV path."""
    if source == "tau":
        if k != 10:
            raise UsageError("builtin eigen table has weight parameter 10")
        if max_prime > _EIGEN_PRIME_CAP:
            raise UsageError(
                "builtin eigen table caps at primes <= %d" % _EIGEN_PRIME_CAP
            )
        return eigen_delta(max(100, max_prime))
    try:
        return eigen_from_csv(source, k)
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (source, exc))
    except ValueError as exc:
        raise UsageError("bad eigen CSV %s: %s" % (source, exc))


# ---------------------------------------------------------------------------
# subcommand handlers; each returns the payload dict in final key order


def _cmd_reduce(args):
    p = _check_prime(args.prime)
    if args.precision is not None and args.precision < 1:
        raise UsageError("--precision must be >= 1")
    T = _load_element(args.input)
    r = reduce_at(T, p, args.precision)
    return {
        "prime": p,
        "divisors": list(r.divisors.exps),
        "precision": r.precision,
        "word_length": len(r.word),
    }


def _cmd_siegel(args):
    p = _check_prime(args.prime)
    m1, m2, m3 = _int_csv(args.m, 3, "--m")
    try:
        f = f_poly(p, m1, m2, m3)
    except ValueError as exc:
        raise UsageError("bad exponents %r: %s" % (args.m, exc))
    payload = {
        "prime": p,
        "m": [m1, m2, m3],
        "weight": f.weight,
        "coefficients": [_num_str(c) for c in f.coeffs()],
    }
    if args.eval is not None:
        name, _, rhs = args.eval.partition("=")
        if name != "X" or not rhs:
            raise UsageError("--eval expects X=<rational>, got %r" % (args.eval,))
        try:
            x = Fraction(rhs)
        except (ValueError, ZeroDivisionError):
            raise UsageError("--eval expects a rational, got %r" % (rhs,))
        payload["eval"] = {"X": frac_str(x), "value": frac_str(f.evaluate(x))}
    return payload


def _cmd_density(args):
    p = _check_prime(args.prime)
    exps = _int_csv(args.divisors, 3, "--divisors")
    try:
        beta = beta_exps(p, exps)
    except ValueError as exc:
        raise UsageError("bad divisors %r: %s" % (args.divisors, exc))
    return {"prime": p, "divisors": list(exps), "beta": frac_str(beta)}


def _cmd_mass(args):
    T = _load_element(args.input)
    try:
        m = mass(T)
    except ValueError as exc:
        raise UsageError(str(exc))
    return {"det": str(T.det()), "mass": frac_str(m)}


def _cmd_igusa_verify(args):
    p = _check_prime(args.prime)
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    ok, rows = igusa_verify(p, args.order)
    payload = {
        "prime": p,
        "order": args.order,
        "ok": ok,
        "rows": [
            {
                "m": r["m"],
                "lhs": frac_str(r["lhs"]),
                "rhs": frac_str(r["rhs"]),
                "equal": r["equal"],
            }
            for r in rows
        ],
    }
    if not ok:
        raise ComputeError("series identity failed for p=%d" % p, payload)
    return payload


def _cmd_hp_verify(args):
    p = _check_prime(args.prime)
    if args.tmax < 1:
        raise UsageError("--tmax must be >= 1")
    ok, report = H_verify(p, args.tmax, table_route=args.table_route)
    payload = {"prime": p, "tmax": args.tmax, "ok": ok}
    if not ok:
        payload["first_discrepancy"] = report
        raise ComputeError("generating identity failed for p=%d" % p, payload)
    return payload


def _cmd_gamma_k(args):
    if args.k < 10:
        raise UsageError("--k must be an integer >= 10")
    payload = {"k": args.k, "gamma_k": frac_str(gamma_k(args.k))}
    if args.derived:
        payload["derived"] = frac_str(gamma_k_derived(args.k))
        payload["residue"] = rs_closed_residue(args.k).serialize()
    return payload


def _cmd_lift_coeff(args):
    T = _load_element(args.input)
    if not T.is_positive():
        raise UsageError("element must be positive definite")
    genus = genus_invariants(T)
    max_prime = max(genus, default=2)
    eigen = _load_eigen(args.eigen, args.k, max_prime)
    try:
        a = fourier_coeff(T, eigen)
    except KeyError as exc:
        raise UsageError("eigen table is missing a_p for p = %s" % (exc,))
    return {
        "k": args.k,
        "det": str(T.det()),
        "divisors": {str(p): list(d.exps) for p, d in genus.items()},
        "coefficient": _num_str(a),
    }


def _cmd_lift_table(args):
    if args.max_det < 1:
        raise UsageError("--max-det must be >= 1")
    eigen = _load_eigen(args.eigen, args.k, args.max_det)
    rows = []
    for n in range(1, args.max_det + 1):
        fac = factorize(n)
        primes = sorted(fac)
        per_prime = [list(exponent_triples(fac[p])) for p in primes]
        for combo in itertools.product(*per_prime):
            coeff = 1
            for p, exps in zip(primes, combo):
                try:
                    coeff *= local_factor(p, exps, eigen)
                except KeyError as exc:
                    raise UsageError("eigen table is missing a_p for p = %s" % (exc,))
            rows.append(
                {
                    "det": str(n),
                    "divisors": {
                        str(p): list(exps) for p, exps in zip(primes, combo)
                    },
                    "coefficient": _num_str(coeff),
                }
            )
    return {"k": args.k, "max_det": args.max_det, "rows": rows}


def _cmd_rs_euler(args):
    p = _check_prime(args.prime)
    r = rs_euler_factors(p)
    payload = {
        "prime": p,
        "prefactor": frac_str(r["prefactor"]),
        "t2_numerators": [repr(f) for f in r["t2_numerators"]],
        "zeta_denominators": [repr(f) for f in r["zeta_denominators"]],
        "sym2_denominators": [[repr(f) for f in tri] for tri in r["sym2_denominators"]],
        "consistent": r["consistent"],
    }
    if not r["consistent"]:
        raise ComputeError("euler factor rewrite failed for p=%d" % p, payload)
    return payload


def _check_digits(digits):
    if not 1 <= digits <= MAX_DIGITS:
        raise UsageError("--digits must be between 1 and %d" % MAX_DIGITS)
    return digits


def _cmd_period(args):
    _check_digits(args.digits)
    eigen = _load_eigen(args.eigen, args.k, 80 * args.digits)
    try:
        report = period_report(args.k, eigen, digits=args.digits)
    except ValueError as exc:
        raise ComputeError(str(exc))
    value = report["value"]
    return {
        "k": args.k,
        "digits": args.digits,
        "value": _mp_str(value.value, args.digits),
        "error_bound": _mp_str(value.err, 3),
        "gamma_k": frac_str(report["gamma_k"]),
        "pi_power": report["pi_power"],
        "lvalues": [
            {"s": s, "value": _mp_str(lv.value, args.digits), "error_bound": _mp_str(lv.err, 3)}
            for s, lv in zip(CRITICAL_POINTS, report["lvalues"])
        ],
    }


def _cmd_probe(args):
    d1, d2 = _int_csv(args.digits, 2, "--digits")
    _check_digits(d1)
    _check_digits(d2)
    if d1 >= d2:
        raise UsageError("--digits expects an increasing pair")
    eigen = _load_eigen(args.eigen, args.k, 80 * d2)
    try:
        out = rationality_probe(eigen, args.k, digits=(d1, d2))
    except ValueError as exc:
        raise ComputeError(str(exc))
    return {
        "k": args.k,
        "digits": [d1, d2],
        "r5": None if out["r5"] is None else frac_str(out["r5"]),
        "r9": None if out["r9"] is None else frac_str(out["r9"]),
    }


def _cmd_census(args):
    if args.prime != 2:
        raise UsageError("the exhaustive census is implemented for --prime 2 only")
    threads = _thread_count(args.threads)
    t0 = time.perf_counter()
    counts = census_f2(threads)
    elapsed = time.perf_counter() - t0
    try:
        beta = beta_from_census(2, counts)
    except ArithmeticError as exc:
        raise ComputeError(str(exc), {"prime": 2, "counts": counts})
    return {
        "prime": 2,
        "threads": threads,
        "counts": {
            "rank0": counts["rank0"],
            "rank1": counts["rank1"],
            "rank2": counts["rank2"],
            "rank3": counts["rank3"],
        },
        "beta": frac_str(beta),
        "elapsed_seconds": round(elapsed, 3),
    }


def _cmd_selftest(args):
    results = []
    ok = True
    for criterion in acceptance.CRITERIA:
        r = acceptance.run(criterion)
        ok = ok and r.ok
        sys.stderr.write(
            "criterion %2d %-22s %s (%.2fs)\n"
            % (r.number, r.slug, "PASS" if r.ok else "FAIL", r.seconds)
        )
        results.append(
            {
                "number": r.number,
                "slug": r.slug,
                "ok": r.ok,
                "seconds": round(r.seconds, 2),
                "detail": r.detail,
            }
        )
    payload = {"ok": ok, "criteria": results}
    if not ok:
        raise ComputeError("acceptance criteria failed", payload)
    return payload


# ---------------------------------------------------------------------------
# parser assembly and dispatch


def build_parser():
    parser = _Parser(prog="heptalift", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, handler, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(handler=handler)
        sp.add_argument("--out", default=None, help="write JSON here instead of stdout")
        return sp

    sp = add("reduce", _cmd_reduce, "local elementary divisors of an element")
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--precision", type=int, default=None)
    sp.add_argument("--input", required=True, help="element JSON path, or - for stdin")

    sp = add("siegel", _cmd_siegel, "local series polynomial for a divisor profile")
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--m", required=True, help="m1,m2,m3")
    sp.add_argument("--eval", default=None, help="X=<rational> to also evaluate")

    sp = add("density", _cmd_density, "local density for a divisor triple")
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--divisors", required=True, help="a1,a2,a3")

    sp = add("mass", _cmd_mass, "exact mass of the genus of an element")
    sp.add_argument("--input", required=True, help="element JSON path, or - for stdin")

    sp = add("igusa-verify", _cmd_igusa_verify, "check the density series identity")
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--order", type=int, required=True)

    sp = add("hp-verify", _cmd_hp_verify, "check the generating identity through t^M")
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--tmax", type=int, required=True)
    sp.add_argument("--table-route", action="store_true")

    sp = add("gamma-k", _cmd_gamma_k, "rational period constant")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--derived", action="store_true")

    sp = add("lift-coeff", _cmd_lift_coeff, "lift Fourier coefficient at an element")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--eigen", default="tau", help="'tau' or CSV path with p,a_p rows")
    sp.add_argument("--input", required=True, help="element JSON path, or - for stdin")

    sp = add("lift-table", _cmd_lift_table, "coefficients for all profiles up to a det")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--max-det", type=int, required=True)
    sp.add_argument("--eigen", default="tau", help="'tau' or CSV path with p,a_p rows")

    sp = add("rs-euler", _cmd_rs_euler, "euler factor rewrite of the self series")
    sp.add_argument("--prime", type=int, required=True)

    sp = add("period", _cmd_period, "Petersson norm of the lift")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--digits", type=int, default=20)
    sp.add_argument("--eigen", default="tau", help="'tau' or CSV path with p,a_p rows")

    sp = add("probe", _cmd_probe, "rationality probe for the L-value ratios")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--digits", default="20,30", help="two increasing digit counts")
    sp.add_argument("--eigen", default="tau", help="'tau' or CSV path with p,a_p rows")

    sp = add("census", _cmd_census, "exhaustive rank census of the 2^27 residue space")
    sp.add_argument("--prime", type=int, default=2)
    sp.add_argument("--threads", type=int, default=None)

    add("selftest", _cmd_selftest, "run the full acceptance suite")

    return parser


def dispatch(argv):
    """Parse and run; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        payload = args.handler(args)
    except UsageError as exc:
        _emit_error(exc)
        return 2
    except ComputeError as exc:
        if exc.payload is not None:
            _emit(exc.payload, args.out)
        _emit_error(exc)
        return 1
    except (ArithmeticError, AssertionError) as exc:
        _emit_error(exc)
        return 1
    except (ValueError, KeyError) as exc:
        _emit_error(exc)
        return 2
    _emit(payload, args.out)
    return 0


def main(argv=None):
    return dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
