"""Command-line front end: families, verifications, dynamics tables, link
export for the geometry bridge, and CSV merging for volume plots.

Exit codes: 0 on success or a passing verification, 1 on a failing
verification, 2 on a usage error.  Output is deterministic for fixed
inputs (no timestamps).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .braids import BraidWord, format_braid
from .families import beta, beta_prime, delta_word, gamma, pi_q, zeta_word
from .surgery import (
    Component,
    ExtendedRational,
    SurgeredLink,
    link_to_json,
)
from .verifier import (
    hdst_check,
    verify_magic,
    verify_thm42,
    verify_thm53,
)


class UsageError(Exception):
    pass


def _parse_ratio(text: str) -> tuple[int, int]:
    try:
        num, _, den = text.partition("/")
        return int(num), int(den if den else "1")
    except ValueError:
        raise UsageError(f"expected a fraction like 1/3, got {text!r}")


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2, sort_keys=True) if args.json else text
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


# ---------------------------------------------------------------------------
# Verbs


def cmd_family(args) -> int:
    name = args.name
    if name in ("beta", "beta-prime", "pi"):
        if args.q is None:
            raise UsageError(f"family {name} needs --q m/n")
        m, n = _parse_ratio(args.q)
        if name == "pi":
            perm = pi_q(m, n)
            _emit(args, {"family": "pi", "q": args.q, "images": list(perm.images)},
                  " ".join(map(str, perm.images)))
            return 0
        fam = beta(m, n) if name == "beta" else beta_prime(m, n)
    elif name == "gamma":
        if args.nu is None:
            raise UsageError("family gamma needs --nu l/m")
        l, m = _parse_ratio(args.nu)
        fam = gamma(l, m)
    elif name == "delta":
        fam = delta_word()
    elif name == "zeta":
        fam = zeta_word()
    else:
        raise UsageError(f"unknown family {name!r}")
    word = fam.word
    payload = {
        "family": name,
        "strands": word.strands,
        "word": list(word.letters),
        "roles": {k: list(v) for k, v in sorted(fam.roles.items())},
    }
    _emit(args, payload, format_braid(word))
    return 0


def cmd_verify(args) -> int:
    if args.check == "thm42":
        if args.nu is None or args.k is None:
            raise UsageError("verify thm42 needs --nu l/m and --k")
        l, m = _parse_ratio(args.nu)
        report = verify_thm42(l, m, args.k)
    elif args.check == "thm53":
        if args.kappa is None:
            raise UsageError("verify thm53 needs --kappa")
        report = verify_thm53(args.kappa)
    elif args.check == "magic":
        report = verify_magic()
    elif args.check == "hdst":
        if not args.coeffs:
            raise UsageError("verify hdst needs --coeffs b/a ...")
        coeffs = [ExtendedRational.parse(c) for c in args.coeffs]
        ok = hdst_check(coeffs)
        _emit(args, {"name": "hdst", "passed": ok}, f"hdst: {'pass' if ok else 'fail'}")
        return 0 if ok else 1
    else:
        raise UsageError(f"unknown check {args.check!r}")
    _emit(args, report.to_json(), report.text())
    return 0 if report.passed else 1


def _manifold_link(name: str, q: str | None, nu: str | None) -> SurgeredLink:
    """Unfilled closure-plus-axis links for the named manifold family."""
    if name == "Mq":
        if q is None:
            raise UsageError("manifold Mq needs --q m/n")
        m, n = _parse_ratio(q)
        fam = beta(m, n)
        comps = (Component("closure", tuple(range(1, fam.word.strands + 1))),)
        return SurgeredLink(braid=fam.word, axis=True, components=comps)
    if name == "Mhat":
        if nu is None:
            raise UsageError("manifold Mhat needs --nu l/m")
        l, m = _parse_ratio(nu)
        fam = gamma(l, m)
        comps = (
            Component("fixed", fam.roles["fixed"]),
            Component("closure", fam.roles["closure"]),
        )
        return SurgeredLink(braid=fam.word, axis=True, components=comps)
    if name == "M":
        fam = delta_word()
        comps = tuple(Component(k, v) for k, v in sorted(fam.roles.items()))
        return SurgeredLink(braid=fam.word, axis=True, components=comps)
    if name == "magic":
        report = verify_magic()
        if not report.passed or report.link is None:
            raise UsageError("magic-manifold chain failed")
        return report.link
    raise UsageError(f"unknown manifold {name!r}")


def cmd_export(args) -> int:
    link = _manifold_link(args.manifold, args.q, args.nu)
    payload = link_to_json(link)
    if args.what == "link":
        _emit(args, payload, json.dumps(payload, indent=2, sort_keys=True))
        return 0
    # snappy-script: a standalone construction script for the geometry engine
    from .surgery import axis_augmented_braid

    aug = axis_augmented_braid(link.braid)
    lines = [
        "import snappy",
        "",
        f"# {args.manifold}: closure of a {link.braid.strands}-strand braid plus axis",
        f"link = snappy.Link(braid_closure={list(aug.letters)})",
        "manifold = link.exterior()",
        "print(manifold.num_cusps(), manifold.volume())",
    ]
    text = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_dynamics(args) -> int:
    from .dynamics import dilatation_q, pattern_q, symbol_code, t_of_q

    if args.table == "sweep":
        qs = []
        for den in range(3, args.max_den + 1):
            for num in range(1, den):
                if Fraction(num, den) <= Fraction(1, 3) and Fraction(num, den).denominator == den:
                    qs.append((num, den))
        rows = []
        for m, n in sorted(qs, key=lambda p: Fraction(p[0], p[1]), reverse=True):
            t = t_of_q(m, n, args.eps).t
            lam = dilatation_q(m, n)
            rows.append((f"{m}/{n}", t, lam, abs(t - lam)))
        writer = csv.writer(open(args.out, "w", newline="") if args.out else sys.stdout)
        writer.writerow(["q", "t", "perron", "diff"])
        for row in rows:
            writer.writerow([row[0], f"{row[1]:.12f}", f"{row[2]:.12f}", f"{row[3]:.3e}"])
        return 0
    if args.q is None:
        raise UsageError(f"dynamics {args.table} needs --q m/n")
    m, n = _parse_ratio(args.q)
    if args.table == "code":
        code = symbol_code(pattern_q(m, n))
        _emit(args, {"q": args.q, "code": code}, code)
    elif args.table == "tq":
        t = t_of_q(m, n, args.eps).t
        _emit(args, {"q": args.q, "t": t}, f"{t:.12f}")
    elif args.table == "dilatation":
        lam = dilatation_q(m, n)
        _emit(args, {"q": args.q, "dilatation": lam}, f"{lam:.12f}")
    else:
        raise UsageError(f"unknown dynamics table {args.table!r}")
    return 0


def cmd_plot_data(args) -> int:
    """Merge (param, value) CSVs on the param column, one column per file."""
    tables = []
    for path in args.files:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        if not rows:
            raise UsageError(f"{path} is empty")
        header, body = rows[0], rows[1:]
        tables.append((header, dict((r[0], r[1:]) for r in body)))
    params = sorted(
        set().union(*(t[1].keys() for t in tables)),
        key=lambda p: (len(p), p),
    )
    out = csv.writer(open(args.out, "w", newline="") if args.out else sys.stdout)
    merged_header = ["param"]
    for header, _ in tables:
        merged_header.extend(header[1:])
    out.writerow(merged_header)
    for p in params:
        row = [p]
        for header, data in tables:
            row.extend(data.get(p, [""] * (len(header) - 1)))
        out.writerow(row)
    return 0


# ---------------------------------------------------------------------------
# Argument wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidkit", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("family", help="print a family braid word")
    p.add_argument("name", choices=["beta", "beta-prime", "gamma", "delta", "zeta", "pi"])
    p.add_argument("--q")
    p.add_argument("--nu")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="replay a certified chain")
    p.add_argument("check", choices=["thm42", "thm53", "magic", "hdst"])
    p.add_argument("--nu")
    p.add_argument("--k", type=int)
    p.add_argument("--kappa", type=int)
    p.add_argument("--coeffs", nargs="*")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dynamics", help="kneading and dilatation tables")
    p.add_argument("table", choices=["code", "tq", "dilatation", "sweep"])
    p.add_argument("--q")
    p.add_argument("--eps", type=float, default=1e-9)
    p.add_argument("--max-den", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dynamics)

    p = sub.add_parser("export", help="emit link JSON or an engine script")
    p.add_argument("what", choices=["link", "snappy-script"])
    p.add_argument("--manifold", required=True, choices=["Mq", "Mhat", "M", "magic"])
    p.add_argument("--q")
    p.add_argument("--nu")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("plot-data", help="merge volume CSVs")
    p.add_argument("action", choices=["merge"])
    p.add_argument("files", nargs="+")
    p.add_argument("--out")
    p.set_defaults(func=cmd_plot_data)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
