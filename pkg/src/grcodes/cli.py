"""``grcodes`` command-line front end.

Exit codes: 0 success, 1 malformed input, 2 algebraic precondition failure
(or a failed verification table), 3 resource cap.
"""

from __future__ import annotations

import argparse
import sys

from grcodes import codes, constructions, io, verify
from grcodes.distance import CAP_ENV, estimate_distance, min_distance
from grcodes.errors import GrCodesError, ParseError, ResourceCapError
from grcodes.groupring import GroupRingElement, format_element, parse_element, parse_ring_spec
from grcodes.groups import make_group
from grcodes.rgmatrix import classify, sigma


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _element(args) -> GroupRingElement:
    group = make_group(args.group)
    ring = parse_ring_spec(args.ring)
    if args.elem is None:
        raise ParseError("--elem is required")
    names = None
    if getattr(args, "gens", None):
        names = dict(group.generators)
        for item in args.gens.split(","):
            sym, _, expr = item.partition("=")
            if not sym.strip() or not expr.strip():
                raise ParseError("--gens entries look like name=expr", args.gens, 0)
            e = parse_element(expr, group, ring)
            if e.weight() != 1 or int(e.coeffs[e.support()[0]]) != 1:
                raise ParseError(f"--gens {sym} must be a single group element", args.gens, 0)
            names[sym.strip()] = e.support()[0]
    return parse_element(args.elem, group, ring, names)


def _basis(spec: str, u: GroupRingElement, kind: str, seed: int, side: str) -> codes.SubmoduleBasis:
    """``first:<r>``, ``indices:<k1,k2,...>``, ``auto`` or ``best:<r>[:budget]``."""
    spec = spec.strip()
    try:
        if spec == "auto":
            if kind != "zd":
                raise ParseError("basis 'auto' is only valid for zero-divisor codes", spec, 0)
            return codes.greedy_basis(u, side)
        head, _, rest = spec.partition(":")
        if head == "first":
            return codes.SubmoduleBasis.first(int(rest))
        if head == "indices":
            idx = [int(x) for x in rest.split(",") if x.strip()]
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise ParseError("basis indices must be strictly increasing", spec, 0)
            return codes.SubmoduleBasis(tuple(idx))
        if head == "best":
            parts = rest.split(":")
            r = int(parts[0])
            budget = int(parts[1]) if len(parts) > 1 else 5000
            res = codes.best_basis(u, r, budget, seed=seed, side=side)
            if res.basis is None:
                raise GrCodesError("no basis of that size gives an independent S*u")
            tag = "exhaustive" if res.exhaustive else "heuristic"
            print(f"# best basis ({tag}, {res.evaluations} evaluated): d = {res.distance}", file=sys.stderr)
            return res.basis
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad basis spec: {exc}", spec, 0) from None
    raise ParseError("unknown basis spec", spec, 0)


def _build_code(args) -> codes.LinearCode:
    u = _element(args)
    if args.kind == "zd":
        S = _basis(args.basis, u, "zd", args.seed, args.side)
        return codes.zero_divisor_code(u, S, args.side)
    if args.basis == "auto":
        raise ParseError("basis 'auto' is only valid for zero-divisor codes", args.basis, 0)
    S = _basis(args.basis, u, "unit", args.seed, args.side)
    return codes.unit_code(u, S, args.side)


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_code(args, code: codes.LinearCode, flags: dict | None = None) -> None:
    if args.format == "json-summary":
        _emit(args, io.json_summary(code, flags))
    elif args.format == "alist":
        if code.p != 2:
            raise ParseError("alist output is binary only")
        _emit(args, io.format_alist(code.check))
    else:
        _emit(args, io.format_bundle(code))


# -- subcommands --------------------------------------------------------------


def cmd_classify(args) -> int:
    u = _element(args)
    c = classify(u)
    if c.is_unit:
        inv = "self" if c.inverse == u else format_element(c.inverse)
        print(f"unit; inverse = {inv}")
    elif c.is_zero_divisor:
        print(f"zero-divisor; witness = {format_element(c.witness)}")
    else:
        print(f"neither; det = {c.det}")
    return 0


def cmd_matrix(args) -> int:
    u = _element(args)
    _emit(args, io.format_matrix(sigma(u), str(u.ring)))
    return 0


def cmd_code(args) -> int:
    code = _build_code(args)
    if args.distance:
        code.min_distance(cap=args.cap, threads=args.threads)
        print(f"# {code.params()}", file=sys.stderr)
    _emit_code(args, code)
    return 0


def cmd_distance(args) -> int:
    if args.input:
        with open(args.input) as fh:
            b = io.parse_bundle(fh.read())
        G, p = b.generator, parse_ring_spec(b.field).require_field("distance")
    else:
        code = _build_code(args)
        G, p = code.generator, code.p
    try:
        d = min_distance(G, p, cap=args.cap, threads=args.threads)
        print(f"d = {d}")
    except ResourceCapError as exc:
        if not args.estimate:
            raise
        est = estimate_distance(G, p, samples=args.estimate, seed=args.seed)
        print(f"# {exc}", file=sys.stderr)
        print(str(est))
    return 0


def cmd_dual(args) -> int:
    code = _build_code(args)
    dual = codes.dual(code)
    print(f"# {dual.provenance.note}", file=sys.stderr)
    _emit_code(args, dual)
    return 0


def cmd_selfdual(args) -> int:
    u = _element(args)
    rep = codes.is_self_dual(u)
    print(f"u*u^T = 0: {str(rep.u_ut_zero).lower()}")
    print(f"u^2 = 0: {str(rep.u_squared_zero).lower()}")
    print(f"rank = n/2: {str(rep.rank_half).lower()} (rank {rep.rank}, n {rep.n})")
    print(f"self-dual: {str(rep.self_dual).lower()}")
    return 0


def cmd_ideal(args) -> int:
    u = _element(args)
    if args.kind == "unit":
        S = _basis(args.basis, u, "unit", args.seed, "right")
        codes.unit_code(u, S)
        print("false")
        return 0
    S = _basis(args.basis, u, "zd", args.seed, "right")
    print(str(codes.is_ideal(u, S)).lower())
    return 0


def cmd_cyclic(args) -> int:
    h = _element(args)
    pair, code = constructions.cyclic_code(h)
    print(f"# generator d = {format_element(pair.generator)}", file=sys.stderr)
    print(f"# check p = {format_element(pair.check)}", file=sys.stderr)
    if args.distance:
        code.min_distance(cap=args.cap, threads=args.threads)
        print(f"# {code.params()}", file=sys.stderr)
    _emit_code(args, code)
    return 0


def cmd_ldpc(args) -> int:
    m = args.m
    labels = make_group(args.labels) if args.labels else make_group(f"C{args.k}")
    if args.f:
        base = make_group(f"C{m}")
        f = []
        for expr in args.f.split(","):
            e = parse_element(expr, base, parse_ring_spec("gf2"))
            if e.weight() != 1:
                raise ParseError("each f entry must be a single group element", args.f, 0)
            f.append(e.support()[0])
        rows = tuple(int(x) for x in args.rows.split(",")) if args.rows else tuple(range(args.j))
        plan = constructions.LdpcPlan(base, labels, tuple(f), rows, None)
    else:
        plan = constructions.random_plan(m, labels, args.j, seed=args.seed)
    res = constructions.qc_ldpc(plan)
    print(
        f"# qc-ldpc m={plan.m} k={plan.k} j={plan.j} seed={plan.seed} f={list(plan.f)} rows={list(plan.rows)} "
        f"target_rate={res.target_rate:.6f} exact_rate={res.exact_rate:.6f}",
        file=sys.stderr,
    )
    fmt = args.format
    if fmt == "alist":
        _emit(args, io.format_alist(res.check_full))
    elif fmt == "json-summary":
        extra = {"ldpc": {"m": plan.m, "k": plan.k, "j": plan.j, "seed": plan.seed, "f": list(plan.f),
                          "rows": list(plan.rows), "target_rate": res.target_rate, "exact_rate": res.exact_rate}}
        _emit(args, io.json_summary(res.code, extra=extra))
    else:
        _emit(args, io.format_matrix(res.check_full, "gf2"))
    return 0


def cmd_verify(args) -> int:
    results = verify.run_checks(extended=args.extended)
    _emit(args, verify.format_table(results))
    return 0 if all(r.ok for r in results) else 2


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grcodes", description="Codes from group ring encodings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, elem=True, fmt=True):
        p.add_argument("--seed", type=int, default=0, help="seed for randomized searches (default 0)")
        p.add_argument("--output", "-o", help="write the main output here instead of stdout")
        if fmt:
            p.add_argument("--format", choices=["text", "alist", "json-summary"], default="text")
        if elem:
            p.add_argument("--group", required=True, help="e.g. C7, D14, E2^3, C2xC4")
            p.add_argument("--ring", default="gf2", help="gf2, gf<p> or z (default gf2)")
            p.add_argument("--elem", required=True, help='e.g. "1 + g^2 + g^3"')
            p.add_argument("--gens", help="extra symbols, e.g. 'x=g^3,y=g^5'")

    def code_opts(p):
        p.add_argument("--kind", choices=["zd", "unit"], default="zd")
        p.add_argument("--basis", default="auto", help="auto | first:<r> | indices:<k1,..> | best:<r>[:budget]")
        p.add_argument("--side", choices=["right", "left"], default="right")

    def dist_opts(p):
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--cap", type=int, default=None, help=f"enumeration cap in bits (env {CAP_ENV})")

    p = sub.add_parser("classify", help="unit / zero-divisor / neither")
    common(p, fmt=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("matrix", help="print the RG-matrix")
    common(p, fmt=False)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("code", help="build a code and write its bundle")
    common(p)
    code_opts(p)
    dist_opts(p)
    p.add_argument("--distance", action="store_true", help="also compute the exact minimum distance")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("distance", help="minimum distance of a code")
    p.add_argument("--input", help="read the code from a bundle file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--group")
    p.add_argument("--ring", default="gf2")
    p.add_argument("--elem")
    p.add_argument("--gens")
    code_opts(p)
    dist_opts(p)
    p.add_argument("--estimate", type=int, metavar="SAMPLES", default=0,
                   help="above the cap, print a labeled upper bound from this many samples")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("dual", help="dual code bundle")
    common(p)
    code_opts(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("selfdual", help="self-duality report")
    common(p, fmt=False)
    p.set_defaults(func=cmd_selfdual)

    p = sub.add_parser("ideal", help="is the code a left ideal")
    common(p, fmt=False)
    p.add_argument("--kind", choices=["zd", "unit"], default="zd")
    p.add_argument("--basis", default="auto")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("cyclic", help="cyclic code from gcd(h, x^n - 1)")
    common(p)
    dist_opts(p)
    p.add_argument("--distance", action="store_true")
    p.set_defaults(func=cmd_cyclic)

    p = sub.add_parser("ldpc", help="quasi-cyclic LDPC check matrix")
    common(p, elem=False)
    p.set_defaults(format="alist")
    p.add_argument("--m", type=int, required=True, help="order of the cyclic base group")
    p.add_argument("--k", type=int, default=None, help="label group C<k> (or use --labels)")
    p.add_argument("--labels", help="label group spec, e.g. C3xC2")
    p.add_argument("--j", type=int, required=True, help="number of block rows")
    p.add_argument("--f", help="comma list of base-group elements, one per label, e.g. 'g,g^2,1'")
    p.add_argument("--rows", help="comma list of block-row indices (default 0..j-1)")
    p.set_defaults(func=cmd_ldpc)

    p = sub.add_parser("verify-paper", help="reproduce the published example codes")
    p.add_argument("--extended", action="store_true", help="include the long (62,30,12) enumeration")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "ldpc" and args.k is None and args.labels is None:
        parser.error("ldpc needs --k or --labels")
    if args.command == "distance" and not args.input and (args.group is None or args.elem is None):
        parser.error("distance needs --input or --group/--elem")
    try:
        return args.func(args)
    except GrCodesError as exc:
        msg = f"error: {exc}"
        cert = getattr(exc, "certificate", None)
        if cert is not None:
            msg += f"\ncertificate: {format_element(cert) if isinstance(cert, GroupRingElement) else cert}"
        print(msg, file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
