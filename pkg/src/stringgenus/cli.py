"""
Command-line front end: ``string-genus <subcommand> [options]``.

Payloads are JSON, read from ``--input`` or stdin:

* series: an array of rational strings ``["1/24", "0", ...]``
* characteristic numbers:
  ``{"m": 7, "numbers": [{"partition": [2, 1], "value": "3/2"}, ...]}``
* d-invariant: ``{"p1_integral": "-2", "h_integral": "0", "sign_z": 1}``

Exit status is 0 on success, 1 when a check finds a discrepancy and 2 on
malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import genera, invariants, modforms, qseries, reproduce, spinbordism, tgroup
from .errors import InsufficientPrecision, InvalidWeight, NonIntegral, StringGenusError
from .qseries import QSeries, format_rational, parse_rational

DEFAULT_PREC = 32
PREC_ENV = "STRING_GENUS_PREC"

EXIT_OK, EXIT_FAILED, EXIT_BAD_INPUT = 0, 1, 2


class InputError(Exception):
    """Malformed input; the message is shown to the user and the exit status is 2."""


class Result:
    def __init__(self, data, text: str, status: int = EXIT_OK):
        self.data = data
        self.text = text
        self.status = status


# -- payload parsing --------------------------------------------------------------


def _read_payload(args):
    try:
        if args.input:
            with open(args.input) as fh:
                raw = fh.read()
        else:
            raw = sys.stdin.read()
    except OSError as exc:
        raise InputError("cannot read input: %s" % exc) from None
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError("malformed JSON: %s" % exc) from None


def _rational(value, what: str) -> Fraction:
    try:
        return parse_rational(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError("invalid rational for %s: %r" % (what, value)) from None


def _series_payload(args) -> QSeries:
    data = _read_payload(args)
    if not isinstance(data, list) or not data:
        raise InputError("invalid series: expected a non-empty JSON array of rationals")
    return QSeries([_rational(v, "coefficient %d" % i) for i, v in enumerate(data)])


def _numbers_payload(args, expect_m: int | None = None) -> tuple[int, dict]:
    data = _read_payload(args)
    if not isinstance(data, dict) or "m" not in data or "numbers" not in data:
        raise InputError('invalid payload: expected {"m": int, "numbers": [...]}')
    m = data["m"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise InputError("invalid payload: m must be a positive integer, got %r" % (m,))
    if expect_m is not None and m != expect_m:
        raise InputError("invalid payload: this subcommand needs m = %d, got %d" % (expect_m, m))
    if not isinstance(data["numbers"], list):
        raise InputError("invalid payload: numbers must be an array")
    numbers = {}
    for entry in data["numbers"]:
        if not isinstance(entry, dict) or set(entry) != {"partition", "value"}:
            raise InputError('invalid payload: entries are {"partition": [...], "value": "a/b"}')
        lam = entry["partition"]
        if (not isinstance(lam, list)
                or not all(isinstance(x, int) and not isinstance(x, bool) and x > 0 for x in lam)):
            raise InputError("invalid partition key %r: expected positive integers" % (lam,))
        key = tuple(sorted(lam, reverse=True))
        if key in numbers:
            raise InputError("invalid partition key %r: duplicate" % (lam,))
        numbers[key] = _rational(entry["value"], "partition %r" % (lam,))
    return m, numbers


def _check_weights(numbers: dict, weight: int) -> None:
    for lam in numbers:
        if sum(lam) != weight:
            raise InputError("invalid partition key %s: weight %d, expected %d"
                             % (list(lam), sum(lam), weight))


def _rel_payload(args, expect_m: int | None = None) -> invariants.RelCharNumbers:
    m, numbers = _numbers_payload(args, expect_m)
    _check_weights(numbers, m - 1)
    return invariants.RelCharNumbers(m, numbers)


def _series_json(f: QSeries) -> list[str]:
    return [format_rational(c) for c in f.coeffs]


def _partition_json(lam) -> list[int]:
    return list(lam)


# -- subcommands --------------------------------------------------------------------


def cmd_gseries(args) -> Result:
    g = qseries.eisenstein_G(args.weight, args.prec)
    return Result(_series_json(g), str(g))


def cmd_delta(args) -> Result:
    d = modforms.delta(args.prec)
    return Result(_series_json(d), str(d))


def cmd_eisenstein(args) -> Result:
    e = modforms.eisenstein_normalized(args.weight, args.prec)
    return Result(_series_json(e), str(e))


def cmd_basis(args) -> Result:
    b = modforms.miller_basis(args.weight, args.prec)
    data = {"weight": b.weight, "k": b.k, "prec": b.prec, "forms": [_series_json(f) for f in b.forms]}
    text = "\n".join(["weight %d, k = %d" % (b.weight, b.k)]
                     + ["f_%d = %s" % (i, f) for i, f in enumerate(b.forms)])
    return Result(data, text)


def cmd_tate_check(args) -> Result:
    w = modforms.tate_curve(args.prec)
    c4, c6, disc = modforms.weierstrass_invariants(w)
    checks = {
        "c4_is_E4": c4 == modforms.eisenstein_normalized(4, args.prec),
        "c6_is_minus_E6": c6 == -modforms.eisenstein_normalized(6, args.prec),
        "disc_is_delta": disc == modforms.delta(args.prec),
        "integral": w.a4.is_integral and w.a6.is_integral,
    }
    data = dict(prec=args.prec, **checks, a4=_series_json(w.a4), a6=_series_json(w.a6))
    text = "\n".join("%s: %s" % (k, "ok" if v else "FAILED") for k, v in checks.items())
    return Result(data, text, EXIT_OK if all(checks.values()) else EXIT_FAILED)


def _class_from_payload(args) -> tgroup.TClass:
    c = tgroup.reduce(_series_payload(args), args.weight)
    if args.prime is not None:
        c = tgroup.localize(c, args.prime)
    return c


def cmd_reduce_t(args) -> Result:
    c = _class_from_payload(args)
    return Result(c.to_json(), str(c))


def cmd_order_t(args) -> Result:
    res = tgroup.order(_class_from_payload(args), args.bound)
    return Result({"order": res.order, "certified": res.certified},
                  "order %d (%s)" % (res.order, "certified" if res.certified else "lower bound"))


def cmd_localize(args) -> Result:
    args.prime = args.p
    c = _class_from_payload(args)
    return Result(c.to_json(), str(c))


def cmd_witten(args) -> Result:
    m, numbers = _numbers_payload(args)
    _check_weights(numbers, m)
    r = invariants.witten_genus(invariants.CharNumbers(m, numbers), args.prec)
    return Result(_series_json(r), str(r))


def cmd_bgeom(args) -> Result:
    rel = _rel_payload(args)
    series = invariants.b_geom_series(rel, args.prec)
    c = tgroup.reduce(series, 2 * rel.m)
    data = {"series": _series_json(series), "class": c.to_json()}
    text = "series: %s\nclass:  %s" % (series, c)
    if args.bound is not None:
        res = tgroup.order(c, args.bound)
        data.update(order=res.order, certified=res.certified)
        text += "\norder:  %d (%s)" % (res.order, "certified" if res.certified else "lower bound")
    return Result(data, text)


def cmd_nudelta_emit(args) -> Result:
    poly = invariants.nu_delta_combination() if args.exact else invariants.nu_delta_polynomial()
    rows = [{"partition": _partition_json(lam), "label": genera.monomial_label(lam, "N"),
             "value": format_rational(v)}
            for lam, v in sorted(poly.items(), reverse=True)]
    text = "\n".join("%-12s %s" % (r["label"], r["value"]) for r in rows)
    return Result(rows, text)


def cmd_nudelta_eval(args) -> Result:
    rel = _rel_payload(args, expect_m=invariants.NU_DELTA_M)
    c = invariants.nu_delta_detect(rel)
    return Result({"c": c}, "sigma = %d * nu*Delta (mod 3)" % c)


def cmd_dinv(args) -> Result:
    data = _read_payload(args)
    if not isinstance(data, dict) or not {"p1_integral", "h_integral"} <= set(data):
        raise InputError('invalid payload: expected {"p1_integral": "a/b", "h_integral": "a/b"}')
    d = invariants.d_invariant(_rational(data["p1_integral"], "p1_integral"),
                               _rational(data["h_integral"], "h_integral"))
    out = {"d": d}
    text = "d = %d" % d
    if data.get("sign_z") is not None:
        sign_z = data["sign_z"]
        if not isinstance(sign_z, int) or isinstance(sign_z, bool):
            raise InputError("invalid payload: sign_z must be an integer")
        s = invariants.sigma_and_canonical(sign_z, d)
        out.update(sigma=s.sigma, sigma_mod2=s.sigma_mod2, shift=s.shift)
        text += "\nsigma = %d (class %d), canonical shift %d" % (s.sigma, s.sigma_mod2, s.shift)
    return Result(out, text)


def cmd_mspin_validate(args) -> Result:
    try:
        rows = spinbordism.load_table(args.table)
        found = spinbordism.validate_table(rows)
    except (OSError, ValueError) as exc:
        raise InputError("invalid table: %s" % exc) from None
    data = {"discrepancies": [d.to_json() for d in found]}
    if found:
        text = "\n".join("degree %d, %s: expected %d, found %d" % (d.i, d.column, d.expected, d.found)
                         for d in found)
    else:
        text = "%d rows, no discrepancies" % len(rows)
    return Result(data, text, EXIT_FAILED if found else EXIT_OK)


def cmd_reproduce(args) -> Result:
    results = reproduce.run_all()
    data = [{"criterion": r.number, "title": r.title, "pass": r.ok, "detail": r.detail} for r in results]
    text = "\n".join(r.line() for r in results)
    return Result(data, text, EXIT_OK if all(r.ok for r in results) else EXIT_FAILED)


# -- argument parsing ---------------------------------------------------------------


def _positive_int(s: str) -> int:
    try:
        n = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % s) from None
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got %d" % n)
    return n


def _prime(s: str) -> int:
    p = _positive_int(s)
    if not tgroup.is_prime(p):
        raise argparse.ArgumentTypeError("%d is not a prime" % p)
    return p


def _default_prec() -> int:
    raw = os.environ.get(PREC_ENV)
    if raw is None:
        return DEFAULT_PREC
    try:
        return _positive_int(raw)
    except argparse.ArgumentTypeError as exc:
        raise InputError("invalid %s: %s" % (PREC_ENV, exc)) from None


def build_parser(default_prec: int = DEFAULT_PREC) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=_positive_int, default=default_prec,
                        help="number of q-coefficients (default %(default)s)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--input", metavar="PATH", help="read the JSON payload from PATH instead of stdin")

    parser = argparse.ArgumentParser(
        prog="string-genus",
        description="Exact q-expansions, T_2m groups and secondary Witten-genus invariants.",
        epilog="Exit status: 0 success, 1 a check found a discrepancy, 2 malformed input.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_text, **kw):
        p = sub.add_parser(name, parents=[common], help=help_text, **kw)
        p.set_defaults(func=fn)
        return p

    add("gseries", cmd_gseries, "Eisenstein series G_2k").add_argument("weight", type=int)
    add("delta", cmd_delta, "the discriminant form Delta")
    add("eisenstein", cmd_eisenstein, "normalized Eisenstein series E_w").add_argument("weight", type=int)
    add("basis", cmd_basis, "integral echelon basis of M_w").add_argument("weight", type=int)
    add("tate-check", cmd_tate_check, "check c4, c6, disc of the Tate curve")

    for name, fn, help_text in (("reduce-t", cmd_reduce_t, "normal form in T_w of a series payload"),
                                ("order-t", cmd_order_t, "order of the class of a series payload")):
        p = add(name, fn, help_text)
        p.add_argument("--weight", type=int, required=True)
        p.add_argument("--prime", type=_prime)
        if name == "order-t":
            p.add_argument("--bound", type=_positive_int, required=True,
                           help="L with L * payload integral")
    p = add("localize", cmd_localize, "p-primary part of the class of a series payload")
    p.add_argument("p", type=_prime)
    p.add_argument("--weight", type=int, required=True)

    add("witten", cmd_witten, "Witten genus from Pontrjagin numbers")
    add("bgeom", cmd_bgeom, "b^geom from relative characteristic numbers").add_argument(
        "--bound", type=_positive_int, help="also report the order, certified against this bound")

    nd = sub.add_parser("nudelta", help="the mod-3 detector in dimension 27")
    nd_sub = nd.add_subparsers(dest="action", required=True, metavar="ACTION")
    p = nd_sub.add_parser("emit", parents=[common], help="print the detector polynomial")
    p.add_argument("--exact", action="store_true", help="unreduced rational coefficients")
    p.set_defaults(func=cmd_nudelta_emit)
    nd_sub.add_parser("eval", parents=[common], help="evaluate on m = 7 relative numbers").set_defaults(
        func=cmd_nudelta_eval)

    add("dinv", cmd_dinv, "d-invariant and canonical string structure of a 3-manifold")

    ms = sub.add_parser("mspin", help="MSpin table checks")
    ms_sub = ms.add_subparsers(dest="action", required=True, metavar="ACTION")
    p = ms_sub.add_parser("validate", parents=[common], help="validate the MSpin table")
    p.add_argument("--table", metavar="PATH", help="table file (default: the bundled table)")
    p.set_defaults(func=cmd_mspin_validate)

    add("reproduce-paper", cmd_reproduce, "run every reproduction check")
    return parser


def _emit(result: Result, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(result.data) + "\n")
    else:
        out.write(result.text + "\n")


def main(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser(_default_prec())
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT
    except InsufficientPrecision as exc:
        print("error: insufficient precision: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT
    except (InvalidWeight, NonIntegral) as exc:
        print("error: invalid input: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT
    except (StringGenusError, ValueError) as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return EXIT_BAD_INPUT
    _emit(result, args.format, sys.stdout)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
