"""Command line front end.

Every series-producing route is exposed directly (enum, pyramid, formula,
transfer, sign, dt), and `verify` cross-checks any two independent routes
for the same counting problem, exiting 1 with the first differing monomial
on a mismatch.  Exit codes: 0 agreement, 1 mismatch, 2 usage.
"""

from __future__ import annotations

import argparse
import sys

from boxcount import colouring, relations
from boxcount.series import Monomial, Series


def _emit(series, fmt, max_terms):
    if fmt == "json":
        print(series.to_json())
    elif fmt == "csv":
        print(series.to_csv(), end="")
    else:
        print(series.pretty(max_terms=max_terms))


def _report(name_a, a, name_b, b):
    d = a.diff(b)
    if d is None:
        print(f"ok: {name_a} == {name_b} up to degree {min(a.trunc, b.trunc)}")
        return 0
    halves, ca, cb = d
    mono = Monomial(a.vars, halves, 1)
    print(f"MISMATCH at {mono}: {name_a} has {ca}, {name_b} has {cb}")
    return 1


def _group(parser, text):
    try:
        return colouring.parse_group(text)
    except ValueError as exc:
        parser.error(str(exc))


def _add_series_opts(sub, threads=False):
    sub.add_argument("-N", "--trunc", type=int, required=True, help="truncation degree")
    sub.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    sub.add_argument("--max-terms", type=int, default=20, help="term cap for pretty output")
    if threads:
        sub.add_argument("--threads", type=int, default=None, help="worker threads (default: BOXCOUNT_THREADS or 1)")


def main(argv=None):
    parser = argparse.ArgumentParser(prog="boxcount", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", help="coloured box-pile series by direct enumeration")
    p.add_argument("group", help="zn:K, klein, or z3diag")
    _add_series_opts(p, threads=True)

    p = sub.add_parser("pyramid", help="pyramid-partition series by direct enumeration")
    _add_series_opts(p, threads=True)

    p = sub.add_parser("formula", help="closed product formula")
    p.add_argument("which", help="zn:K, klein, or pyramid")
    _add_series_opts(p)

    p = sub.add_parser("transfer", help="transfer-operator evaluation")
    p.add_argument("which", help="zn:K, pyramid, pyramid-checkerboard, or z2z2")
    _add_series_opts(p)

    p = sub.add_parser("sign", help="signed box counting via vertex-character parity")
    p.add_argument("group", help="zn:K, klein, or z3diag")
    _add_series_opts(p, threads=True)

    p = sub.add_parser("dt", help="closed signed forms")
    p.add_argument("group", help="zn:K or klein")
    p.add_argument("--side", choices=("orbifold", "resolution", "paired"), default="orbifold")
    _add_series_opts(p)

    p = sub.add_parser("verify", help="cross-check two independent routes")
    p.add_argument(
        "target",
        help="zn:K | klein | pyramid | pair | transfer:{zn:K,pyramid,pyramid-checkerboard,z2z2} | sign:{zn:K,klein} | pairing:{zn:K,klein}",
    )
    p.add_argument("-N", "--trunc", type=int, required=True)
    p.add_argument("--threads", type=int, default=None)

    p = sub.add_parser("verify-ops", help="check the operator-identity catalogue")
    p.add_argument("-N", "--trunc", type=int, default=6)
    p.add_argument("--basis", type=int, default=4, help="largest basis partition size")

    args = parser.parse_args(argv)
    return COMMANDS[args.command](parser, args)


def _cmd_enum(parser, args):
    from boxcount.enum3d import coloured_series

    group = _group(parser, args.group)
    _emit(coloured_series(group, args.trunc, threads=args.threads), args.format, args.max_terms)
    return 0


def _cmd_pyramid(parser, args):
    from boxcount.pyramid import pyramid_series

    _emit(pyramid_series(args.trunc, threads=args.threads), args.format, args.max_terms)
    return 0


def _cmd_formula(parser, args):
    from boxcount import formulas

    if args.which == "pyramid":
        series = formulas.closed_pyramid(args.trunc)
    elif args.which == "klein":
        series = formulas.closed_klein(args.trunc)
    elif args.which.startswith("zn:"):
        series = formulas.closed_zn(int(args.which[3:]), args.trunc)
    else:
        parser.error(f"unknown formula {args.which!r}")
    _emit(series, args.format, args.max_terms)
    return 0


def _cmd_transfer(parser, args):
    from boxcount import fock

    if args.which == "pyramid":
        series = fock.transfer_pyramid(args.trunc)
    elif args.which == "pyramid-checkerboard":
        series = fock.transfer_pyramid_checkerboard(args.trunc)
    elif args.which == "z2z2":
        series = fock.transfer_klein(args.trunc)
    elif args.which.startswith("zn:"):
        series = fock.transfer_zn(int(args.which[3:]), args.trunc)
    else:
        parser.error(f"unknown transfer machine {args.which!r}")
    _emit(series, args.format, args.max_terms)
    return 0


def _cmd_sign(parser, args):
    from boxcount.dtsign import signed_series

    group = _group(parser, args.group)
    _emit(signed_series(group, args.trunc, threads=args.threads), args.format, args.max_terms)
    return 0


def _cmd_dt(parser, args):
    from boxcount import formulas

    group = _group(parser, args.group)
    if args.side == "orbifold":
        series = formulas.dt_orbifold(group, args.trunc)
    elif args.side == "resolution":
        series = formulas.dt_resolution(group, args.trunc)
    else:
        series = formulas.dt_resolution_paired(group, args.trunc)
    _emit(series, args.format, args.max_terms)
    return 0


def _cmd_verify(parser, args):
    from boxcount import fock, formulas
    from boxcount.dtsign import signed_series
    from boxcount.enum3d import coloured_series
    from boxcount.pyramid import pyramid_series

    target = args.target
    N = args.trunc
    if target == "pyramid":
        return _report("enumeration", pyramid_series(N, threads=args.threads), "closed formula", formulas.closed_pyramid(N))
    if target == "pair":
        from boxcount.series import macmahon_tilde

        V = ("q0", "qa", "qb", "qc")
        factor = macmahon_tilde(
            Monomial.from_exponents(V, {"qa": 1, "qb": 1}),
            Monomial.from_exponents(V, {"q0": 1, "qa": 1, "qb": 1, "qc": 1}),
            N,
        )
        return _report("klein formula", formulas.closed_klein(N), "paired pyramid formula", factor * formulas.closed_pyramid(N))
    if target == "klein" or target.startswith("zn:"):
        group = _group(parser, target)
        return _report(
            "enumeration",
            coloured_series(group, N, threads=args.threads),
            "closed formula",
            formulas.closed_orbifold(group, N),
        )
    if target.startswith("transfer:"):
        which = target[len("transfer:") :]
        if which == "pyramid":
            return _report("transfer machine", fock.transfer_pyramid(N), "enumeration", pyramid_series(N, threads=args.threads))
        if which == "pyramid-checkerboard":
            return _report("transfer machine", fock.transfer_pyramid_checkerboard(N), "enumeration", pyramid_series(N, threads=args.threads))
        if which == "z2z2":
            return _report(
                "transfer machine",
                fock.transfer_klein(N),
                "enumeration",
                coloured_series(colouring.klein_group(), N, threads=args.threads),
            )
        if which.startswith("zn:"):
            return _report(
                "transfer machine",
                fock.transfer_zn(int(which[3:]), N),
                "enumeration",
                coloured_series(colouring.zn_group(int(which[3:])), N, threads=args.threads),
            )
        parser.error(f"unknown transfer machine {which!r}")
    if target.startswith("sign:"):
        group = _group(parser, target[len("sign:") :])
        signed = signed_series(group, N, threads=args.threads)
        subst = coloured_series(group, N, threads=args.threads).substitute_signs(formulas.dt_sign_variables(group))
        rc = _report("signed enumeration", signed, "sign substitution", subst)
        return rc or _report("signed enumeration", signed, "signed closed formula", formulas.dt_orbifold(group, N))
    if target.startswith("pairing:"):
        group = _group(parser, target[len("pairing:") :])
        return _report(
            "signed orbifold formula",
            formulas.dt_orbifold(group, N),
            "paired resolution formula",
            formulas.dt_resolution_paired(group, N),
        )
    parser.error(f"unknown verify target {target!r}")


def _cmd_verify_ops(parser, args):
    failed = 0
    for name, ok, witness in relations.run_all(trunc=args.trunc, max_basis=args.basis):
        line = f"{'ok' if ok else 'FAIL'}: {name}"
        if not ok:
            line += f"  (witness {witness})"
            failed += 1
        print(line)
    return 1 if failed else 0


COMMANDS = {
    "enum": _cmd_enum,
    "pyramid": _cmd_pyramid,
    "formula": _cmd_formula,
    "transfer": _cmd_transfer,
    "sign": _cmd_sign,
    "dt": _cmd_dt,
    "verify": _cmd_verify,
    "verify-ops": _cmd_verify_ops,
}


if __name__ == "__main__":
    sys.exit(main())
