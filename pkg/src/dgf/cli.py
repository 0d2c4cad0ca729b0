"""Command-line interface.

Exit codes: 0 success, 1 usage problems, 2 expression errors,
3 math-domain errors (non-integral shifts, divergent evaluation points,
missing rational forms), 4 verification mismatches.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from .bell import DEFAULT_DEGREE_CAP
from .catalog import CATALOG, make
from .errors import (BFileError, CatalogError, DegreeBoundError,
                     DivergenceError, MasterEquationError, ParseError)
from .euler import (INFINITE, abscissa, expand_factor_list, factor_bell,
                    finite_zeta_form, zeta_factors_from_euler,
                    zeta_form_to_coeffs)
from .numeric import eval_euler_product, eval_partial_sum, eval_zeta_form
from .parser import parse_function
from .polys import series_eq
from .sequences import compare_bfile, terms


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _cmd_catalog(ns) -> int:
    if not ns.name:
        if ns.json:
            rows = [{"name": name,
                     "params": [{"name": p.name, "min": p.lo, "max": p.hi,
                                 "prime": p.prime}
                                for p in CATALOG[name].params],
                     "summary": CATALOG[name].summary}
                    for name in sorted(CATALOG)]
            print(json.dumps(rows, indent=2))
            return 0
        width = max(len(n) for n in CATALOG)
        for name in sorted(CATALOG):
            entry = CATALOG[name]
            sig = name
            if entry.params:
                sig += "(%s)" % ",".join(p.name for p in entry.params)
            print("%-*s  %s" % (width + 10, sig, entry.summary))
        return 0
    entry = CATALOG.get(ns.name)
    if entry is None:
        raise CatalogError("unknown function %r" % ns.name)
    print("%s: %s" % (ns.name, entry.summary))
    for p in entry.params:
        extra = ", prime" if p.prime else ""
        print("  parameter %s in [%d, %d]%s" % (p.name, p.lo, p.hi, extra))
    if ns.args or not entry.params:
        f = entry.make(*ns.args)
        b = f.bell
        print("  bell series: %s" % (b if b is not None else "not rational"))
        zf = finite_zeta_form(f)
        print("  dirichlet series: %s" % zf)
    return 0


def _cmd_bell(ns) -> int:
    f = parse_function(ns.expr)
    b = f.bell
    if b is None:
        print("no rational closed form within degree %d" % DEFAULT_DEGREE_CAP)
    else:
        print(b)
    ser = f.series(ns.K)
    print("series: " + ", ".join(str(c) for c in ser))
    return 0


def _cmd_factorize(ns) -> int:
    f = parse_function(ns.expr)
    efl = factor_bell(f, ns.U)
    conv = abscissa(efl)
    if ns.json:
        doc = efl.to_json()
        doc["abscissa"] = str(conv.abscissa)
        print(json.dumps(doc, indent=2))
        return 0
    print(efl)
    if efl.truncated_at is not None:
        print("truncated at order %d" % efl.truncated_at)
    print("abscissa: %s" % conv)
    return 0


def _cmd_zetaform(ns) -> int:
    f = parse_function(ns.expr)
    zf = finite_zeta_form(f)
    if ns.json:
        if zf == INFINITE:
            print(json.dumps({"infinite": True}))
        else:
            print(json.dumps(zf.to_json(), indent=2))
        return 0
    print(zf)
    if zf != INFINITE:
        print("abscissa: %s" % abscissa(zf))
    return 0


def _cmd_terms(ns) -> int:
    f = parse_function(ns.expr)
    vals = terms(f, ns.count)
    if ns.json:
        print(json.dumps(vals))
    else:
        print(",".join(str(v) for v in vals))
    if ns.bfile:
        compare_bfile(ns.bfile, vals)
        print("b-file check passed", file=sys.stderr)
    return 0


def _cmd_eval(ns) -> int:
    f = parse_function(ns.expr)
    method = ns.method
    if method == "auto":
        zf = finite_zeta_form(f)
        method = "zeta" if zf != INFINITE else "euler"
    if method == "zeta":
        zf = finite_zeta_form(f)
        if zf == INFINITE:
            raise DegreeBoundError(
                "no finite zeta form; use --method euler or sum")
        res = eval_zeta_form(zf, ns.s)
    elif method == "euler":
        res = eval_euler_product(f, ns.s, P=ns.P, accel=ns.accel)
    else:
        res = eval_partial_sum(f, ns.s, N=ns.N)
    print(res)
    return 0


def _cmd_verify(ns) -> int:
    f = parse_function(ns.expr)
    failed = []

    def check(label, ok):
        print("%s %s" % ("ok  " if ok else "FAIL", label))
        if not ok:
            failed.append(label)

    b = f.bell
    if b is not None:
        check("closed Bell series matches the prime-power rule",
              series_eq(b.series(ns.U + 6), f.series(ns.U + 6), ns.U + 6))
    efl = factor_bell(f, ns.U)
    check("Euler factors multiply back to the Bell series",
          series_eq(expand_factor_list(efl, ns.U), f.series(ns.U), ns.U)
          and efl.residual_ok)
    zf = finite_zeta_form(f)
    if zf != INFINITE:
        seq = terms(f, ns.count)
        check("zeta form reproduces the first %d terms" % ns.count,
              zeta_form_to_coeffs(zf, ns.count) == seq)
        conv = [z for z in zeta_factors_from_euler(efl) if z.u <= ns.U]
        want = [z for z in zf.zeta_factors if z.u <= ns.U]
        check("Euler factors agree with the zeta form through order %d" % ns.U,
              sorted((z.u, z.l, z.gamma) for z in conv) ==
              sorted((z.u, z.l, z.gamma) for z in want))
    seq = terms(f, ns.count)
    ok = True
    for m in range(2, ns.count + 1):
        if not ok:
            break
        for n in range(m + 1, ns.count // m + 1):
            if math.gcd(m, n) == 1 and seq[m * n - 1] != seq[m - 1] * seq[n - 1]:
                ok = False
                break
    check("values are multiplicative on coprime pairs", ok)
    if ns.bfile:
        compare_bfile(ns.bfile, seq)
        print("ok   b-file values match")
    return 4 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    p = _ArgParser(prog="dgf", description=__doc__.splitlines()[0]
                   if __doc__ else None)
    sub = p.add_subparsers(dest="command", parser_class=_ArgParser)

    c = sub.add_parser("catalog", help="list built-in functions")
    c.add_argument("name", nargs="?", help="entry to describe")
    c.add_argument("args", nargs="*", type=int, help="parameter values")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=_cmd_catalog)

    c = sub.add_parser("bell", help="Bell series of an expression")
    c.add_argument("expr")
    c.add_argument("-K", "--order", dest="K", type=int, default=8,
                   help="series order (default 8)")
    c.set_defaults(func=_cmd_bell)

    c = sub.add_parser("factorize", help="Euler product factorisation")
    c.add_argument("expr")
    c.add_argument("-U", "--order", dest="U", type=int, default=8,
                   help="peel factors up to x^U (default 8)")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=_cmd_factorize)

    c = sub.add_parser("zetaform", help="finite zeta-product form")
    c.add_argument("expr")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=_cmd_zetaform)

    c = sub.add_parser("terms", help="sequence values a(1..N)")
    c.add_argument("expr")
    c.add_argument("-n", "--count", type=int, required=True)
    c.add_argument("--bfile", help="compare against a b-file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=_cmd_terms)

    c = sub.add_parser("eval", help="numeric value of the Dirichlet series")
    c.add_argument("expr")
    c.add_argument("-s", "--s", dest="s", type=float, required=True)
    c.add_argument("--method", choices=["auto", "zeta", "euler", "sum"],
                   default="auto")
    c.add_argument("-P", "--primes", dest="P", type=int, default=10**5,
                   help="prime bound for --method euler")
    c.add_argument("-N", "--sum", dest="N", type=int, default=10**4,
                   help="term bound for --method sum")
    c.add_argument("--accel", "--accelerate", dest="accel",
                   choices=["wynn", "none"], default="wynn")
    c.set_defaults(func=_cmd_eval)

    c = sub.add_parser("verify", help="internal consistency checks")
    c.add_argument("expr")
    c.add_argument("-n", "--count", type=int, default=200)
    c.add_argument("-U", "--order", dest="U", type=int, default=6)
    c.add_argument("--bfile", help="also compare against a b-file")
    c.set_defaults(func=_cmd_verify)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    if not getattr(ns, "func", None):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return ns.func(ns) or 0
    except ParseError as e:
        print("parse error: %s" % e, file=sys.stderr)
        return 2
    except CatalogError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except (MasterEquationError, DegreeBoundError, DivergenceError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    except BFileError as e:
        print("verification failed: %s" % e, file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
