"""Command-line driver.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import os
import re
import sys

import numpy as np

from . import __version__
from .approx import Family, build_approximant
from .decay import decay_table
from .errors import ApproxError, UsageError
from .export import complex_parts, csv_text, json_text, svg_zero_plot, write_atomic
from .gram import build_normal_system
from .roots import zero_set_sweep
from .selftest import run_selftest
from .series import FactoredPoly, Poly, as_poly
from .space import WeightKind, weight_sequence
from .validation import check_target

COMMANDS = ("approximant", "decay", "zeros", "gram", "selftest")
FAMILIES = [f.value for f in Family]

_RANGE = re.compile(r"^(-?\d+)(?:\.\.(-?\d+)(?::([*+])(\d+))?)?$")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(UsageError.exit_code, f"{self.prog}: error: {message}\n")


def parse_orders(text: str) -> list[int]:
    """``N``, ``A..B``, ``A..B:+k`` or ``A..B:*k``."""
    m = _RANGE.match(text.strip())
    if not m:
        raise UsageError(f"bad order range {text!r}")
    a = int(m.group(1))
    if m.group(2) is None:
        return [a]
    b = int(m.group(2))
    op, k = m.group(3) or "+", int(m.group(4) or 1)
    if b < a or a < 0:
        raise UsageError(f"empty or negative order range {text!r}")
    out = []
    x = a
    if op == "+":
        if k < 1:
            raise UsageError("arithmetic step must be >= 1")
        out = list(range(a, b + 1, k))
    else:
        if k < 2 or a < 1:
            raise UsageError("geometric step needs factor >= 2 and start >= 1")
        while x <= b:
            out.append(x)
            x *= k
    return out


def _complex(text: str) -> complex:
    t = text.strip().replace("i", "j").replace(" ", "")
    try:
        return complex(t)
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def parse_coeffs(text: str) -> Poly:
    return Poly([_complex(t) for t in text.split(",") if t.strip()])


def parse_roots(text: str, leading: complex = 1.0) -> FactoredPoly:
    """``z:mult,z:mult,...``; a bare ``z`` means multiplicity one."""
    roots, mults = [], []
    for item in text.split(","):
        if not item.strip():
            continue
        z, _, m = item.rpartition(":") if ":" in item else (item, "", "1")
        try:
            mult = int(m)
        except ValueError:
            raise UsageError(f"bad multiplicity in {item!r}") from None
        roots.append(_complex(z))
        mults.append(mult)
    if not roots:
        raise UsageError("empty root list")
    try:
        return FactoredPoly(tuple(roots), tuple(mults), leading)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--f", dest="f", metavar="a0,a1,...",
                     help="target coefficients in increasing powers (complex as 1+2j)")
    src.add_argument("--roots", metavar="z:mult,...",
                     help="target as roots with multiplicities")
    common.add_argument("--leading", default="1", metavar="K",
                        help="leading constant for --roots (default 1)")
    common.add_argument("--alpha", type=float, default=1.0, help="space parameter (default 1)")
    common.add_argument("--kind", default="paper", choices=["coeff", "paper", "integral"],
                        help="norm: coefficient weights or derivative-integral weights "
                             "('paper' and 'integral' are synonyms; default)")
    common.add_argument("--family", default="optimal",
                        help="approximant family (comma-separated for zeros): "
                             + "|".join(FAMILIES))
    common.add_argument("--n", default="4", metavar="A..B[:*k|:+k]",
                        help="order or order range (default 4)")
    common.add_argument("--format", default=None, choices=["csv", "json", "svg"])
    common.add_argument("--out", default=None, metavar="PATH",
                        help="output file (stdout when omitted; required for svg)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = _Parser(prog="optapprox",
                     description="Optimal polynomial approximants to 1/f in D_alpha.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "approximant": "coefficients and residuals of approximants",
        "decay": "residual decay table scaled by phi_alpha(n+1)",
        "zeros": "zero sets of approximant families",
        "gram": "dump the normal equations as an augmented matrix",
        "selftest": "run the golden checks",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name], description=helps[name])
    return parser


def parse_args(argv=None) -> argparse.Namespace:
    ns = build_parser().parse_args(argv)
    ns.kind = WeightKind.parse(ns.kind)
    try:
        ns.families = [Family.parse(x) for x in ns.family.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not ns.families:
        raise UsageError("no family given")
    if ns.command != "zeros" and len(ns.families) > 1:
        raise UsageError("several families are only supported by 'zeros'")
    ns.orders = parse_orders(ns.n)
    if ns.command != "selftest":
        if ns.f is None and ns.roots is None:
            raise UsageError("one of --f or --roots is required")
        if ns.roots is not None:
            ns.target = parse_roots(ns.roots, _complex(ns.leading))
        else:
            ns.target = parse_coeffs(ns.f)
        check_target(ns.target)
    if ns.format is None:
        ns.format = "svg" if ns.command == "zeros" and ns.out and ns.out.endswith(".svg") \
            else ("csv" if ns.out and ns.out.endswith(".csv") else "json")
    if ns.format == "svg" and ns.command != "zeros":
        raise UsageError("svg output is only available for 'zeros'")
    if ns.format == "svg" and not ns.out:
        raise UsageError("svg output needs --out")
    return ns


def _config(ns) -> dict:
    return {
        "command": ns.command,
        "f": ns.f,
        "roots": ns.roots,
        "leading": ns.leading if ns.roots else None,
        "alpha": ns.alpha,
        "kind": ns.kind.value,
        "family": [f.value for f in ns.families],
        "n": ns.orders,
        "format": ns.format,
        "seed": ns.seed,
    }


def _envelope(ns, payload: dict) -> dict:
    return {"version": __version__, "config": _config(ns), **payload}


def _emit(ns, text: str, out: str | None = None) -> None:
    out = out or ns.out
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def cmd_approximant(ns) -> int:
    aps = [build_approximant(ns.target, ns.families[0], n, ns.alpha, ns.kind)
           for n in ns.orders]
    if ns.format == "csv":
        rows = []
        for ap in aps:
            for k, c in enumerate(ap.p.coeffs):
                rows.append([ap.family.value, ap.alpha, ap.kind.value, ap.n,
                             ap.residual_norm_sq, k, c.real, c.imag])
        _emit(ns, csv_text(["family", "alpha", "kind", "n", "residual_norm_sq",
                            "k", "re", "im"], rows))
        return 0
    items = []
    for ap in aps:
        c = complex_parts(ap.p.coeffs)
        r = complex_parts(ap.ratios)
        items.append({"family": ap.family.value, "n": ap.n, "alpha": ap.alpha,
                      "kind": ap.kind.value, "residual_norm_sq": ap.residual_norm_sq,
                      "coeffs": c["re"], "coeffs_imag": c["im"],
                      "ratios": r["re"], "ratios_imag": r["im"],
                      "meta": ap.meta})
    _emit(ns, json_text(_envelope(ns, {"approximants": items})))
    return 0


def cmd_decay(ns) -> int:
    recs = decay_table(ns.target, ns.families[0], ns.alpha, ns.kind, ns.orders)
    header = ["family", "alpha", "kind", "n", "dist_sq", "scaled"]
    if ns.format == "csv":
        _emit(ns, csv_text(header, [[r.as_row()[h] for h in header] for r in recs]))
    else:
        _emit(ns, json_text(_envelope(ns, {"records": [r.as_row() for r in recs]})))
    return 0


def _family_path(path: str, family: Family, many: bool) -> str:
    if not many:
        return path
    stem, ext = os.path.splitext(path)
    return f"{stem}_{family.value}{ext}"


def cmd_zeros(ns) -> int:
    sweeps = {fam: zero_set_sweep(ns.target, fam, ns.alpha, ns.kind, ns.orders)
              for fam in ns.families}
    many = len(ns.families) > 1
    if ns.format == "svg":
        for fam, sets in sweeps.items():
            title = f"zeros of {fam.value} approximants, n={ns.orders[0]}..{ns.orders[-1]}"
            write_atomic(_family_path(ns.out, fam, many), svg_zero_plot(sets, title))
        return 0
    if ns.format == "csv":
        rows = []
        for fam, sets in sweeps.items():
            for rs in sets:
                for i, z in enumerate(rs.roots):
                    rows.append([fam.value, ns.alpha, ns.kind.value, rs.n, i,
                                 z.real, z.imag, abs(z)])
        _emit(ns, csv_text(["family", "alpha", "kind", "n", "index", "re", "im",
                            "modulus"], rows))
        return 0
    payload = {"zero_sets": [
        {"family": fam.value, "n": rs.n, "max_residual": rs.max_residual,
         "roots": complex_parts(rs.roots)["re"],
         "roots_imag": complex_parts(rs.roots)["im"]}
        for fam, sets in sweeps.items() for rs in sets]}
    _emit(ns, json_text(_envelope(ns, payload)))
    return 0


def cmd_gram(ns) -> int:
    f = as_poly(ns.target)
    n = ns.orders[-1]
    sys_ = build_normal_system(f, n, weight_sequence(ns.kind, ns.alpha, n + f.degree))
    G = sys_.to_dense()
    h = sys_.half_bandwidth
    rows = []
    for j in range(n + 1):
        for k in range(max(0, j - h), min(n, j + h) + 1):
            rows.append([j, k, G[j, k].real, G[j, k].imag])
        rows.append([j, n + 1, sys_.rhs[j].real, sys_.rhs[j].imag])
    if ns.format == "csv":
        _emit(ns, csv_text(["row", "col", "re", "im"], rows))
    else:
        entries = [{"row": r[0], "col": r[1], "re": r[2], "im": r[3]} for r in rows]
        _emit(ns, json_text(_envelope(ns, {"size": n + 1, "half_bandwidth": h,
                                           "entries": entries})))
    return 0


def cmd_selftest(ns) -> int:
    report = run_selftest(ns.seed)
    for item in report:
        print(f"{'PASS' if item['passed'] else 'FAIL'}  {item['name']}", file=sys.stderr)
    ok = all(item["passed"] for item in report)
    text = json_text(_envelope(ns, {"passed": ok, "items": report}))
    if ns.format == "csv":
        text = csv_text(["name", "passed"], [[i["name"].replace(",", ";"),
                                              str(i["passed"]).lower()] for i in report])
    _emit(ns, text)
    return 0 if ok else 3


HANDLERS = {"approximant": cmd_approximant, "decay": cmd_decay, "zeros": cmd_zeros,
            "gram": cmd_gram, "selftest": cmd_selftest}


def run(ns) -> int:
    return HANDLERS[ns.command](ns)


def main(argv=None) -> int:
    try:
        ns = parse_args(argv)
        return run(ns)
    except ApproxError as exc:
        print(f"optapprox: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ValueError, np.linalg.LinAlgError) as exc:
        print(f"optapprox: error: {exc}", file=sys.stderr)
        return UsageError.exit_code if isinstance(exc, ValueError) else 3


if __name__ == "__main__":
    sys.exit(main())
