"""Command-line front end.

Exit codes: 0 success / all suite cases pass; 1 verification failure or
mathematical obstruction (pole, non-member); 2 usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from .ratfunc import PoleError, rat_to_obj
from .partitions import (InvalidParameters, as_partition, beta_value,
                         enumerate_admissible, is_admissible)
from .sympoly import MSymPoly, ExpandedPoly
from .jack import (JackCache, SpecializationPole, jack_symbolic,
                   principal_specialization, specialize, verify_eigensystem)
from .ideal import (build_basis, reduce_membership, verify_closure,
                    verify_lassalle, verify_phi3, verify_pieri,
                    verify_regularity, verify_restriction, verify_wheel)
from .operators import verify_commutators


class UsageError(Exception):
    pass


def parse_partition(text):
    if text in ("", "0", "[]"):
        return ()
    try:
        return as_partition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError("bad partition %r: %s" % (text, exc))


def parse_beta(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError("bad beta %r: %s" % (text, exc))


def emit(obj, fmt, text_lines=None):
    if fmt == "json":
        print(json.dumps(obj, default=lambda o: o.to_obj()))
    else:
        for line in (text_lines if text_lines is not None else
                     [json.dumps(obj, default=lambda o: o.to_obj())]):
            print(line)


def make_cache(args):
    cache_dir = getattr(args, "cache_dir", None)
    return JackCache(cache_dir) if cache_dir else None


def add_common(sub, *names):
    for name in names:
        if name == "k":
            sub.add_argument("--k", type=int, required=True)
        elif name == "k?":
            sub.add_argument("--k", type=int)
        elif name == "r":
            sub.add_argument("--r", type=int, required=True)
        elif name == "r?":
            sub.add_argument("--r", type=int)
        elif name == "n":
            sub.add_argument("--n", type=int, required=True)
        elif name == "dmax":
            sub.add_argument("--dmax", type=int, required=True)
        elif name == "lambda":
            sub.add_argument("--lambda", dest="lam", required=True,
                             help="partition as comma-separated parts")
        elif name == "lambda?":
            sub.add_argument("--lambda", dest="lam",
                             help="partition as comma-separated parts")
    sub.add_argument("--format", choices=("json", "text"), default="json")
    sub.add_argument("--cache-dir", dest="cache_dir")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="jackideal",
        description="Exact Jack polynomials and their admissible-partition "
                    "span at beta = -(r-1)/(k+1)")
    sp = ap.add_subparsers(dest="command", required=True)

    s = sp.add_parser("partitions", help="enumerate admissible partitions "
                                         "or test one")
    add_common(s, "k", "r", "n", "lambda?")
    s.add_argument("--dmax", type=int)

    s = sp.add_parser("character", help="admissible count per degree")
    add_common(s, "k", "r", "n", "dmax")

    s = sp.add_parser("jack", help="compute one Jack polynomial")
    add_common(s, "lambda", "n", "k?", "r?")
    s.add_argument("--symbolic", action="store_true")
    s.add_argument("--beta", help="rational evaluation point p/q "
                                  "(write --beta=-1/2 for negatives)")

    s = sp.add_parser("specialize-principal",
                      help="product formula for the all-ones value")
    add_common(s, "lambda", "n")
    s.add_argument("--beta", help="rational evaluation point p/q "
                                  "(write --beta=-1/2 for negatives)")

    s = sp.add_parser("ideal", help="basis construction and membership")
    isp = s.add_subparsers(dest="ideal_command", required=True)
    b = isp.add_parser("basis")
    add_common(b, "k", "r", "n", "dmax")
    b.add_argument("--out", help="directory for per-degree JSON files")
    b.add_argument("--workers", type=int)
    m = isp.add_parser("member")
    add_common(m, "k", "r", "n", "dmax")
    m.add_argument("--input", default="-",
                   help="polynomial JSON file, '-' for stdin")
    m.add_argument("--workers", type=int)

    s = sp.add_parser("verify", help="run a verification suite")
    vsp = s.add_subparsers(dest="suite", required=True)

    v = vsp.add_parser("commutators")
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--dmax", type=int, default=5)
    v.add_argument("--trials", type=int, default=25)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tmax", type=int, default=3)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--cache-dir", dest="cache_dir")

    for name in ("pieri", "lassalle"):
        v = vsp.add_parser(name)
        add_common(v, "n", "dmax", "k?", "r?")
        v.add_argument("--symbolic", action="store_true", default=None)

    v = vsp.add_parser("closure")
    add_common(v, "k", "r", "n", "dmax")
    v.add_argument("--mmax", type=int, default=4)
    v.add_argument("--tmax", type=int, default=4)
    v.add_argument("--workers", type=int)

    v = vsp.add_parser("restriction")
    add_common(v, "k", "r", "n", "dmax")
    v.add_argument("--jmax", type=int, default=2)

    v = vsp.add_parser("regularity")
    add_common(v, "k", "r", "n", "dmax")

    v = vsp.add_parser("wheel")
    add_common(v, "k", "n", "dmax")
    v.add_argument("--workers", type=int)

    v = vsp.add_parser("phi3")
    add_common(v, "r")

    v = vsp.add_parser("sekiguchi")
    add_common(v, "n", "dmax")
    return ap


def read_poly(path):
    if path == "-":
        obj = json.load(sys.stdin)
    else:
        with open(path) as fh:
            obj = json.load(fh)
    try:
        if obj.get("basis") == "expanded":
            return ExpandedPoly.from_obj(obj).to_msym()
        return MSymPoly.from_obj(obj)
    except (AttributeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError("bad polynomial input: %s" % exc)


def run_report(rep, fmt):
    emit(rep.to_obj(), fmt, rep.text_lines())
    return 0 if rep.all_pass() else 1


def run(args):
    fmt = getattr(args, "format", "json")
    cache = make_cache(args)

    if args.command == "partitions":
        if args.lam is not None:
            lam = parse_partition(args.lam)
            ok = is_admissible(lam, args.k, args.r, args.n)
            emit({"partition": list(lam), "k": args.k, "r": args.r,
                  "n": args.n, "admissible": ok}, fmt,
                 ["%s: %s" % (list(lam),
                              "admissible" if ok else "not admissible")])
            return 0
        if args.dmax is None:
            raise UsageError("need --dmax (or --lambda for a single test)")
        fam = enumerate_admissible(args.k, args.r, args.n, args.dmax)
        lines = ["degree %d: %s" % (d, [list(p) for p in fam.by_degree[d]])
                 for d in sorted(fam.by_degree)]
        emit(fam.to_obj(), fmt, lines)
        return 0

    if args.command == "character":
        fam = enumerate_admissible(args.k, args.r, args.n, args.dmax)
        emit(fam.character(), fmt)
        return 0

    if args.command == "jack":
        lam = parse_partition(args.lam)
        if (args.k is None) != (args.r is None):
            raise UsageError("--k and --r go together")
        if args.k is not None:
            sp = specialize(lam, args.n, args.k, args.r, cache)
            emit(sp.to_obj(), fmt, [str(sp.poly)])
            return 0
        jp = jack_symbolic(lam, args.n, cache)
        if args.beta is not None:
            b0 = parse_beta(args.beta)
            terms = {}
            for mu, u in jp.coeffs.items():
                v = u(b0)
                if v:
                    terms[mu] = v
            P = MSymPoly(args.n, terms)
            obj = P.to_obj()
            obj["beta"] = {"num": str(b0.numerator),
                           "den": str(b0.denominator)}
            emit(obj, fmt, [str(P)])
            return 0
        emit(jp.to_obj(), fmt, [str(jp.msym())])
        return 0

    if args.command == "specialize-principal":
        lam = parse_partition(args.lam)
        val = principal_specialization(lam, args.n)
        if args.beta is not None:
            v = val(parse_beta(args.beta))
            emit({"partition": list(lam), "n": args.n,
                  "value": rat_to_obj(v)}, fmt, [str(v)])
        else:
            emit({"partition": list(lam), "n": args.n,
                  "value": val.to_obj()}, fmt, [str(val)])
        return 0

    if args.command == "ideal":
        if args.ideal_command == "basis":
            basis = build_basis(args.k, args.r, args.n, args.dmax,
                                cache, args.workers)
            if args.out:
                basis.to_dir(args.out)
                emit({"k": args.k, "r": args.r, "n": args.n,
                      "dmax": args.dmax, "character": basis.character(),
                      "written": args.out}, fmt)
            else:
                obj = {"k": args.k, "r": args.r, "n": args.n,
                       "dmax": args.dmax, "character": basis.character(),
                       "elements": [e.to_obj() for e in basis]}
                emit(obj, fmt,
                     ["%s: %s" % (list(e.lam), e.poly) for e in basis])
            return 0
        basis = build_basis(args.k, args.r, args.n, args.dmax,
                            cache, args.workers)
        P = read_poly(args.input)
        cert = reduce_membership(P, basis)
        emit(cert.to_obj(), fmt,
             ["member" if cert.member
              else "non-member, obstruction %s" % (list(cert.obstruction),)])
        return 0 if cert.member else 1

    if args.command == "verify":
        if args.suite == "commutators":
            rep = verify_commutators(args.n, args.dmax, args.trials,
                                     args.seed, args.tmax)
        elif args.suite == "pieri":
            if (args.k is None) != (args.r is None):
                raise UsageError("--k and --r go together")
            rep = verify_pieri(args.n, args.dmax, args.k, args.r,
                               args.symbolic, cache)
        elif args.suite == "lassalle":
            if (args.k is None) != (args.r is None):
                raise UsageError("--k and --r go together")
            rep = verify_lassalle(args.n, args.dmax, args.k, args.r,
                                  args.symbolic, cache)
        elif args.suite == "closure":
            rep = verify_closure(args.k, args.r, args.n, args.dmax,
                                 args.mmax, args.tmax, cache, args.workers)
        elif args.suite == "restriction":
            rep = verify_restriction(args.k, args.r, args.n, args.dmax,
                                     args.jmax, cache)
        elif args.suite == "regularity":
            rep = verify_regularity(args.k, args.r, args.n, args.dmax, cache)
        elif args.suite == "wheel":
            rep = verify_wheel(args.k, args.n, args.dmax, cache, args.workers)
        elif args.suite == "phi3":
            rep = verify_phi3(args.r, cache)
        else:
            rep = verify_eigensystem(args.n, args.dmax, cache)
        return run_report(rep, fmt)

    raise UsageError("unknown command %r" % args.command)


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return run(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except InvalidParameters as exc:
        print("invalid parameters: %s" % exc, file=sys.stderr)
        return 2
    except SpecializationPole as exc:
        print("pole at the requested specialization: %s" % exc,
              file=sys.stderr)
        return 1
    except PoleError as exc:
        print("pole at the requested evaluation point: %s" % exc,
              file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
