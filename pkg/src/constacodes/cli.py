"""Command-line front end: factorization, chain-code tables, verification.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical inapplicability
(a hypothesis of the requested operation fails), 3 enumeration cap exceeded.
"""

import argparse
import json
import sys

from .errors import CapExceeded, Inapplicable, NoRootError
from .ffield import Field, make_field
from .chainring import make_chain_ring
from .factor import (factor_xn_minus_lambda_field, factor_xn_minus_one_field,
                     hensel_lift_factorization)
from .codes import ChainQuotient, chain_code
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INAPPLICABLE = 2
EXIT_CAP = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_ring_spec(spec):
    """`Fq:p^r`, `Z:p^e`, `GR:p^e:r` or `U:p^r:e` -> Field or chain ring."""
    parts = spec.split(":")
    try:
        if parts[0] == "Fq" and len(parts) == 2:
            p, r = _split_power(parts[1])
            return make_field(p, r)
        if parts[0] == "Z" and len(parts) == 2:
            p, e = _split_power(parts[1])
            return make_chain_ring("galois", p, e, 1)
        if parts[0] == "GR" and len(parts) == 3:
            p, e = _split_power(parts[1])
            return make_chain_ring("galois", p, e, int(parts[2]))
        if parts[0] == "U" and len(parts) == 3:
            p, r = _split_power(parts[1])
            return make_chain_ring("u_adic", p, int(parts[2]), r)
    except (ValueError, CapExceeded) as exc:
        raise UsageError(f"bad ring spec {spec!r}: {exc}") from exc
    raise UsageError(f"bad ring spec {spec!r} (expected Fq:p^r, Z:p^e, "
                     f"GR:p^e:r or U:p^r:e)")


def _split_power(text):
    if "^" in text:
        base, exp = text.split("^", 1)
        return int(base), int(exp)
    return int(text), 1


def parse_element(R, text):
    """Element expressions: integer, `g^k` (fields), or `[c0,c1,...]`."""
    text = text.strip()
    try:
        if text.startswith("[") and text.endswith("]"):
            coords = [int(t) for t in text[1:-1].split(",") if t.strip()]
            if isinstance(R, Field):
                return R.elem(tuple(coords))
            if R.family == "galois":
                return R.elem(tuple(coords))
            return R.elem(tuple(R.residue.from_int(c) for c in coords))
        if text.startswith("g^") or text == "g":
            if not isinstance(R, Field):
                raise UsageError("g^k expressions require a field ring spec")
            k = 1 if text == "g" else int(text[2:])
            return R.g ** k
        return R.from_int(int(text))
    except UsageError:
        raise
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad element expression {text!r}: {exc}") from exc


def cmd_factor(args):
    R = parse_ring_spec(args.ring)
    lam = parse_element(R, args.lam)
    if not R.is_unit(lam):
        raise Inapplicable(f"lambda = {lam} is not a unit")
    if isinstance(R, Field):
        fact = (factor_xn_minus_one_field(R, args.n) if lam == R.one()
                else factor_xn_minus_lambda_field(R, args.n, lam))
    else:
        mu_lam = R.mu(lam)
        K = R.residue
        field_fact = (factor_xn_minus_one_field(K, args.n) if mu_lam == K.one()
                      else factor_xn_minus_lambda_field(K, args.n, mu_lam))
        fact = hensel_lift_factorization(R, field_fact, lam)
    if args.json:
        print(json.dumps({"ring": R.spec_string(), "n": args.n,
                          "lambda": lam.to_json(),
                          "factorization": fact.to_json()}))
    else:
        print(str(fact).replace(" ", ""))
    return EXIT_OK


def cmd_chaincodes(args):
    R = make_chain_ring("galois", args.p, args.e, args.r)
    alpha = R.from_int(args.alpha)
    beta = R.from_int(args.beta)
    cq = ChainQuotient(R, args.s, alpha, beta,
                       cap=args.cap if args.cap else 1 << 62)
    if args.cap and cq.Q.size > args.cap:
        raise CapExceeded(f"quotient size {cq.Q.size} exceeds cap {args.cap}")
    rows = []
    for i in range(cq.max_index + 1):
        C = chain_code(cq, i)
        rows.append({"i": i, "generator": str(cq.pi ** i),
                     "cardinality": C.cardinality})
    if args.json:
        print(json.dumps({"ring": R.spec_string(), "s": args.s,
                          "alpha": alpha.to_json(), "beta": beta.to_json(),
                          "lambda": cq.lam.to_json(), "ideals": rows}))
    else:
        print(f"ideals of {R!r}[x]/(x^{cq.n} - {cq.lam}), pi = {cq.pi}")
        width = max(len(str(r["generator"])) for r in rows)
        for r in rows:
            print(f"{r['i']:>4}  <pi^{r['i']}> = <{r['generator']:<{width}}>"
                  f"  |C| = {r['cardinality']}")
    return EXIT_OK


def cmd_verify(args):
    if args.suite not in SUITES and args.suite != "all":
        raise UsageError(f"unknown suite {args.suite!r}; choose from "
                         f"{', '.join([*SUITES, 'all'])}")
    records = run_suite(args.suite)
    ok_all = all(ok for _, ok, _ in records)
    if args.json:
        print(json.dumps({"suite": args.suite, "pass": ok_all,
                          "claims": [{"claim": c, "ok": ok, "detail": str(d)}
                                     for c, ok, d in records]}))
    else:
        for claim, ok, detail in records:
            print(f"[{'PASS' if ok else 'FAIL'}] {claim} -- {detail}")
        print(f"{'all claims pass' if ok_all else 'FAILURES PRESENT'} "
              f"({sum(ok for _, ok, _ in records)}/{len(records)})")
    return EXIT_OK if ok_all else 1


def build_parser():
    top = _Parser(prog="constacodes",
                  description="constacyclic codes over finite fields and chain rings")
    sub = top.add_subparsers(dest="command", required=True)

    f = sub.add_parser("factor", description="factor x^n - lambda")
    f.add_argument("--ring", required=True, help="Fq:p^r | Z:p^e | GR:p^e:r | U:p^r:e")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--lambda", dest="lam", required=True,
                   help="unit: integer, g^k, or [c0,c1,...]")
    f.add_argument("--json", action="store_true")
    f.add_argument("--cap", type=int, default=0)
    f.set_defaults(func=cmd_factor)

    c = sub.add_parser("chaincodes",
                       description="the chain of ideals of GR(p^e,r)[x]/(x^{p^s} - (alpha + beta*p))")
    for name in ("p", "e", "r", "s", "alpha", "beta"):
        c.add_argument(f"--{name}", type=int, required=True)
    c.add_argument("--json", action="store_true")
    c.add_argument("--cap", type=int, default=0)
    c.set_defaults(func=cmd_chaincodes)

    v = sub.add_parser("verify", description="run a verification suite")
    v.add_argument("--suite", required=True,
                   help="lemma3.1 | prop4.2 | isometry | crt | section5 | "
                        "examples | homweight | all")
    v.add_argument("--json", action="store_true")
    v.add_argument("--cap", type=int, default=0)
    v.set_defaults(func=cmd_verify)
    return top


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Inapplicable, NoRootError) as exc:
        print(f"inapplicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
