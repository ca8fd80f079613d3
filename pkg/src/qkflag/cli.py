"""Command-line surface.

Subcommands: describe, kgw, count-lines, potential, product, small-product,
verify.  Output is deterministic text or JSON; exit codes are 0 (success),
1 (user error), 2 (internal invariant violation or failed verification).
Computation is equivariant underneath; by default coefficients are printed
non-equivariantly, --equivariant prints Laurent coefficients.
"""

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import cache as cache_mod
from .algebra import LaurentPoly, ExactDivisionError
from .cartan import (CartanError, parse_root_system, parse_parabolic,
                     flag_variety)
from .kgkm import schubert_class_k, assemble_k
from .lines import (line_parabolic, is_line_degree, kgw_line, kgw_zero,
                    count_lines, NotLineDegreeError, NotEnumerativeError)
from .labels import (basis_label, element_from_word, element_from_partition,
                     grassmannian_box)
from . import qkbig
from . import verify as verify_mod

ENV_CACHE_DIR = "QKFLAG_CACHE_DIR"

_TERM_RE = re.compile(r"^([+-]?\d+\*?|[+-])?O\[([^\]]*)\]$")


def parse_class(expr, X):
    """Parse an integer combination of O[word] / O[partition] terms into a
    Schubert-basis coefficient dictionary over W^P."""
    text = expr.replace(" ", "")
    if not text:
        raise ValueError("empty class expression")
    # split into signed terms, keeping the signs
    pieces = re.findall(r"[+-]?[^+-]+", text)
    coeffs = {}
    for piece in pieces:
        m = _TERM_RE.match(piece)
        if m is None:
            raise ValueError("malformed class term %r in %r" % (piece, expr))
        coeff_txt, body = m.groups()
        if coeff_txt in (None, "", "+"):
            c = 1
        elif coeff_txt == "-":
            c = -1
        else:
            c = int(coeff_txt.rstrip("*"))
        if body == "" or body == "e" or body.startswith("s"):
            w = element_from_word(X, body)
        else:
            try:
                lam = tuple(int(x) for x in body.split(",") if x != "")
            except ValueError:
                raise ValueError("malformed basis label %r" % (body,))
            w = element_from_partition(X, lam)
        coeffs[w] = coeffs.get(w, 0) + c
    return {w: c for w, c in coeffs.items() if c}


def _class_from_coeffs(X, coeffs):
    rank = X.root_system.rank
    return assemble_k(X, {w: LaurentPoly.constant(rank, c)
                          for w, c in coeffs.items()})


def _space_payload(X):
    return {
        "type": "%s%d" % (X.root_system.family, X.root_system.rank),
        "delta_p": sorted(X.delta_p),
        "dimension": X.dimension,
        "basis": [basis_label(X, w) for w in X.coset_reps],
    }


def _coeff_string(value, equivariant):
    if isinstance(value, Fraction):
        return str(value)
    if equivariant:
        return value.render()
    return str(value.at_one())


def _series_payload(series, X, equivariant):
    tv = qkbig.tvariable_elements(X)
    labels = [basis_label(X, w) for w in tv]
    degs = [L.alpha for L in qkbig.line_degrees(X)]
    out = []
    for (q, t), c in series.sorted_items():
        entry = {
            "q": 0 if q < 0 else 1,
            "t": {labels[i]: k for i, k in enumerate(t) if k},
            "coeff": _coeff_string(c, equivariant),
        }
        if q >= 0 and len(degs) > 1:
            entry["alpha"] = degs[q]
        out.append(entry)
    return out


def _series_text(series, X, equivariant):
    tv = qkbig.tvariable_elements(X)
    labels = [basis_label(X, w) for w in tv]
    degs = [L.alpha for L in qkbig.line_degrees(X)]
    if series.is_zero():
        return "0"
    parts = []
    for (q, t), c in series.sorted_items():
        factors = []
        if q >= 0:
            factors.append("Q" if len(degs) <= 1 else "Q_%d" % degs[q])
        for i, k in enumerate(t):
            if k:
                factors.append("t%s%s" % (labels[i],
                                          "" if k == 1 else "^%d" % k))
        cs = _coeff_string(c, equivariant)
        if factors:
            parts.append("(%s) %s" % (cs, " ".join(factors)))
        else:
            parts.append(cs)
    return " + ".join(parts)


def _emit(report, fmt, stream=sys.stdout):
    if fmt == "json":
        json.dump(report, stream, indent=2, sort_keys=True)
        stream.write("\n")
    else:
        for line in report["text"]:
            stream.write(line + "\n")


def _build_space(args):
    rs = parse_root_system(args.type if args.rank is None
                           else "%s%d" % (args.type, args.rank))
    dp = parse_parabolic(args.delta_p or "", rs.rank)
    return flag_variety(rs, dp)


def _insertion_elements(X, exprs):
    """Each --insert expression as a coefficient dict over W^P."""
    return [parse_class(e, X) for e in exprs]


def cmd_describe(args):
    X = _build_space(args)
    payload = _space_payload(X)
    lines_info = []
    for a in X.degree_indices():
        if is_line_degree(X, a):
            L = line_parabolic(X, a)
            lines_info.append({
                "alpha": a,
                "delta_p_prime": sorted(L.delta_p_prime),
                "m0_dimension": L.m0.dimension,
                "m1_dimension": L.m1.dimension,
            })
        else:
            lines_info.append({"alpha": a, "line_degree": False})
    report = {"space": payload, "result": {"line_degrees": lines_info}}
    text = ["space %s, Delta_P = %s, dimension %d" % (
        payload["type"], payload["delta_p"], payload["dimension"])]
    text.append("Schubert basis (%d elements): %s" % (
        len(payload["basis"]), "  ".join(payload["basis"])))
    for info in lines_info:
        if info.get("line_degree") is False:
            text.append("degree alpha_%d: not a line degree" % info["alpha"])
        else:
            text.append(
                "line degree alpha_%d: Delta_P' = %s, dim M0 = %d, dim M1 = %d"
                % (info["alpha"], info["delta_p_prime"],
                   info["m0_dimension"], info["m1_dimension"]))
    report["text"] = text
    return 0, report


def cmd_kgw(args):
    X = _build_space(args)
    insertions = _insertion_elements(X, args.insert or [])
    classes = [_class_from_coeffs(X, c) for c in insertions]
    if args.alpha == 0:
        value = kgw_zero(X, classes)
        degree = "0"
    else:
        if not is_line_degree(X, args.alpha):
            raise NotLineDegreeError(
                "alpha_%d is not a line degree of this space" % args.alpha)
        L = line_parabolic(X, args.alpha)
        value = kgw_line(L, classes)
        degree = "alpha_%d" % args.alpha
    shown = _coeff_string(value, args.equivariant)
    report = {
        "space": _space_payload(X),
        "result": {"degree": degree, "n": len(classes), "value": shown},
        "text": ["<%s>_{X, %s} = %s" % (
            ", ".join(args.insert or []), degree, shown)],
    }
    return 0, report


def cmd_count_lines(args):
    X = _build_space(args)
    if args.alpha == 0:
        raise ValueError("count-lines needs a line degree (--alpha)")
    L = line_parabolic(X, args.alpha)
    conditions = []
    for expr in args.insert or []:
        coeffs = parse_class(expr, X)
        if len(coeffs) != 1 or set(coeffs.values()) != {1}:
            raise ValueError(
                "count-lines conditions must be single Schubert classes")
        conditions.append(next(iter(coeffs)))
    n = count_lines(L, conditions)
    report = {
        "space": _space_payload(X),
        "result": {"alpha": args.alpha, "count": n},
        "text": ["%d lines of degree alpha_%d meet the given conditions"
                 % (n, args.alpha)],
    }
    return 0, report


def _product_report(X, result, args, heading):
    rows = []
    text = [heading]
    for w in X.coset_reps:
        series = result.coefficient(w)
        if series.is_zero():
            continue
        rows.append({
            "basis": basis_label(X, w),
            "series": _series_payload(series, X, args.equivariant),
        })
        text.append("O%s : %s" % (basis_label(X, w),
                                  _series_text(series, X, args.equivariant)))
    return {"space": _space_payload(X), "result": rows, "text": text}


def cmd_potential(args):
    X = _build_space(args)
    g0 = qkbig.potential_g0(X, args.order, args.equivariant)
    row = {"basis": basis_label(X, X.coset_reps[0]),
           "series": _series_payload(g0, X, args.equivariant)}
    report = {
        "space": _space_payload(X),
        "result": [row],
        "text": ["G0 at order %d:" % args.order,
                 _series_text(g0, X, args.equivariant)],
    }
    return 0, report


def cmd_product(args, small=False):
    X = _build_space(args)
    if len(args.insert or []) != 2:
        raise ValueError("product needs exactly two --insert classes")
    c1, c2 = _insertion_elements(X, args.insert)
    f1 = _class_from_coeffs(X, c1)
    f2 = _class_from_coeffs(X, c2)
    if small:
        result = qkbig.small_qk_product(X, f1, f2,
                                        equivariant=args.equivariant)
        heading = "%s * %s in QK(X) (t = 0), modulo Q^2:" % tuple(args.insert)
    else:
        result = qkbig.quantum_product(X, f1, f2, args.order,
                                       args.equivariant)
        heading = "%s * %s at order %d, modulo Q^2:" % (
            args.insert[0], args.insert[1], args.order)
    return 0, _product_report(X, result, args, heading)


def cmd_verify(args):
    checks = verify_mod.run_suite(args.suite)
    rows = [{"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in checks]
    text = []
    for c in checks:
        tag = "PASS" if c.passed else "FAIL"
        text.append("%s  %s%s" % (tag, c.name,
                                  "  (%s)" % c.detail if c.detail else ""))
    failed = sum(1 for c in checks if not c.passed)
    text.append("%d checks, %d failed" % (len(checks), failed))
    report = {"result": rows, "text": text}
    return (2 if failed else 0), report


def build_parser():
    p = argparse.ArgumentParser(
        prog="qkflag",
        description="Exact Schubert calculus and big quantum K-theory of "
                    "flag varieties through line degrees.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, space=True):
        if space:
            sp.add_argument("--type", required=True,
                            help="root system, e.g. A3")
            sp.add_argument("--rank", type=int, default=None,
                            help="rank (may also be part of --type)")
            sp.add_argument("--delta-p", dest="delta_p", default="",
                            help="comma-separated simple roots of Delta_P")
        sp.add_argument("--format", dest="fmt", choices=("text", "json"),
                        default="text")
        sp.add_argument("--cache-dir", dest="cache_dir",
                        default=os.environ.get(ENV_CACHE_DIR))

    sp = sub.add_parser("describe", help="basis, dimension and line degrees")
    common(sp)

    sp = sub.add_parser(
        "kgw", help="K-theoretic Gromov-Witten invariant of degree 0 or a "
                    "line degree")
    common(sp)
    sp.add_argument("--alpha", type=int, default=0,
                    help="simple-root index of the line degree (0 = degree 0)")
    sp.add_argument("--insert", action="append",
                    help="insertion class, e.g. O[1] or O[s2.s1] (repeat)")
    sp.add_argument("--equivariant", action="store_true")

    sp = sub.add_parser("count-lines", help="enumerative line count")
    common(sp)
    sp.add_argument("--alpha", type=int, required=True)
    sp.add_argument("--insert", action="append")
    sp.set_defaults(equivariant=False)

    for name in ("potential", "product", "small-product"):
        sp = sub.add_parser(name)
        common(sp)
        sp.add_argument("--alpha", type=int, default=0)
        sp.add_argument("--insert", action="append")
        sp.add_argument("--order", type=int, default=4)
        sp.add_argument("--equivariant", action="store_true")

    sp = sub.add_parser("verify", help="run a property suite")
    sp.add_argument("suite", choices=sorted(verify_mod.SUITES) + ["all"])
    common(sp, space=False)
    return p


_USER_ERRORS = (CartanError, NotLineDegreeError, NotEnumerativeError,
                ValueError)


def run(argv=None):
    args = build_parser().parse_args(argv)
    if args.cache_dir:
        cache_mod.set_cache_dir(args.cache_dir)
    handlers = {
        "describe": cmd_describe,
        "kgw": cmd_kgw,
        "count-lines": cmd_count_lines,
        "potential": cmd_potential,
        "product": cmd_product,
        "small-product": lambda a: cmd_product(a, small=True),
        "verify": cmd_verify,
    }
    try:
        code, report = handlers[args.command](args)
    except _USER_ERRORS as exc:
        msg = str(exc)
        if args.fmt == "json":
            _emit({"error": msg}, "json", sys.stderr)
        else:
            sys.stderr.write("error: %s\n" % msg)
        return 1
    except (ExactDivisionError, AssertionError) as exc:
        sys.stderr.write("internal invariant violation: %s\n" % exc)
        return 2
    if args.fmt == "json":
        report = {k: v for k, v in report.items() if k != "text"}
    _emit(report, args.fmt)
    return code


def main():
    sys.exit(run())
