"""
Command-line driver.

Exit codes: 0 success or a true answer, 1 a checked property is false,
2 usage or input-format errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from pathlib import Path

from . import deltamatroid as dm
from . import hopf
from . import ribbon as rb
from . import symplectic as sp
from . import textio, verify
from .correspondence import NotBinary, nu, nu_inverse
from .gf2 import det, kernel, rank

MAX_ENUM_N = 4
MAX_HOPF_N = 3


class UsageError(Exception):
    pass


class Report:
    def __init__(self, code: int = 0):
        self.code = code
        self.lines: list[str] = []
        self.data: dict = {}

    def add(self, line: str = ""):
        self.lines.append(line)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _labels(spec: str, ground: sp.GroundSet) -> list:
    labs = [textio.parse_label(t.strip()) for t in spec.split(",") if t.strip()]
    for lab in labs:
        if lab not in ground:
            raise UsageError(f"{lab!r} is not in the ground set")
    return labs


def _sets(s: dm.SetSystem) -> list[list[str]]:
    return [textio.format_set(s.ground, f, "").split(",") if f else [] for f in textio._display_order(s)]


# -- gf2 ------------------------------------------------------------------------


def cmd_gf2(args) -> Report:
    m = textio.parse_matrix(_read(args.file))
    r = Report()
    if args.op == "rank":
        value = rank(m)
        r.add(str(value))
    elif args.op == "det":
        if not m.is_square():
            raise UsageError("determinant needs a square matrix")
        value = det(m)
        r.add(str(value))
    else:
        value = ["".join(str((v >> j) & 1) for j in range(m.ncols)) for v in kernel(m)]
        r.lines += value
    r.data = {"op": args.op, "value": value}
    return r


# -- delta-matroids --------------------------------------------------------------


def cmd_dm(args) -> Report:
    s = textio.parse_setsystem(_read(args.file))
    r = Report()
    if args.op == "check-sea":
        if not s.proper:
            raise UsageError("set system is improper")
        bad = dm.sea_counterexample(s)
        r.data = {"sea": bad is None}
        if bad is None:
            r.add("SEA holds")
        else:
            f1, f2, e = bad
            w1 = textio.format_set(s.ground, s.ground.mask(f1))
            w2 = textio.format_set(s.ground, s.ground.mask(f2))
            r.code = 1
            r.add(f"SEA fails: phi1={w1} phi2={w2} e={e}")
            r.data["witness"] = {"phi1": w1, "phi2": w2, "e": str(e)}
    elif args.op == "is-binary":
        if not s.proper:
            raise UsageError("set system is improper")
        w = dm.binary_witness(s)
        r.data = {"binary": w is not None}
        if w is None:
            r.code = 1
            r.add("not binary")
        else:
            twist_set, g = w
            ts = textio.format_set(s.ground, s.ground.mask(twist_set))
            r.add(f"binary: twist {ts} of the framed graph")
            r.add(textio.format_matrix(g.adjacency).rstrip("\n"))
            r.data.update(twist=ts, matrix=[str(row) for row in str(g.adjacency).splitlines()])
    elif args.op == "twist":
        out = dm.twist(s, _labels(args.set, s.ground))
        r.lines += textio.format_setsystem(out).splitlines()
        r.data = {"ground": list(map(str, out.ground.labels)), "feasible": _sets(out)}
    return r


# -- Lagrangian subspaces ----------------------------------------------------------


def _lagr_data(l: sp.LagrangianSubspace) -> dict:
    return {"ground": list(map(str, l.ground.labels)), "basis": [textio.format_vector(l.ground, v) for v in l.basis]}


def cmd_lagr(args) -> Report:
    r = Report()
    if args.op == "enum":
        if not 0 <= args.n <= MAX_ENUM_N:
            raise UsageError(f"-n must be between 0 and {MAX_ENUM_N}")
        items = list(sp.enumerate_lagrangians(sp.GroundSet.range(args.n)))
        r.lines += [textio.format_lagrangian_inline(l) for l in items]
        r.data = {"n": args.n, "count": len(items), "subspaces": [_lagr_data(l)["basis"] for l in items]}
        return r
    l = textio.parse_lagrangian(_read(args.file))
    if args.op == "dual":
        out = sp.local_dual(l, _labels(args.set, l.ground))
        r.lines += textio.format_lagrangian(out).splitlines()
        r.data = _lagr_data(out)
    elif args.op == "graphify":
        subset = sp.graphify(l)
        mask = l.ground.mask(subset)
        g = sp.local_dual_mask(l, mask)
        ts = textio.format_set(l.ground, mask)
        r.add(f"twist set: {ts}")
        r.add(textio.format_matrix(sp.graphic_matrix(g)).rstrip("\n"))
        r.data = {"twist": ts, "matrix": str(sp.graphic_matrix(g)).splitlines()}
    return r


# -- conversions -----------------------------------------------------------------------


def cmd_conv(args) -> Report:
    r = Report()
    if args.op == "l2d":
        s = nu(textio.parse_lagrangian(_read(args.file)))
        r.add(textio.format_family(s))
        r.data = {"ground": list(map(str, s.ground.labels)), "feasible": _sets(s)}
    else:
        s = textio.parse_setsystem(_read(args.file))
        if not s.proper:
            raise UsageError("set system is improper")
        try:
            l = nu_inverse(s)
        except NotBinary:
            r.code = 1
            r.add("not a binary delta-matroid")
            r.data = {"binary": False}
            return r
        r.lines += textio.format_lagrangian(l).splitlines()
        r.data = _lagr_data(l)
    return r


# -- ribbon graphs ------------------------------------------------------------------------


def cmd_rib(args) -> Report:
    g = textio.parse_ribbon(_read(args.file))
    r = Report()
    if args.op in ("rho", "pi") and not g.is_connected():
        raise UsageError("ribbon graph is not connected")
    if args.op == "boundary":
        b = rb.boundary_components(g)
        r.add(str(b))
        r.data = {"boundary_components": b}
    elif args.op == "rho":
        s = rb.rho(g)
        r.add(textio.format_family(s))
        r.data = {"ground": list(map(str, s.ground.labels)), "feasible": _sets(s)}
    elif args.op == "pi":
        l = rb.pi(g)
        r.lines += textio.format_lagrangian(l).splitlines()
        r.data = _lagr_data(l)
    elif args.op == "pdual":
        out = rb.partial_dual(g, _labels(args.set, g.ground))
        r.lines += textio.format_ribbon(out).splitlines()
        r.data = {"ribbon": textio.format_ribbon(out).splitlines()}
    return r


# -- Hopf algebras ----------------------------------------------------------------------------


def describe(k: hopf.IsoClassKey) -> str:
    if k.degree == 0:
        return "1"
    if k.side == hopf.LAGRANGIAN:
        return f"L{k.degree}<{textio.format_lagrangian_inline(k.rep)}>"
    return f"D{k.degree}[{textio.format_family(k.rep)}]"


def _load_element(path: str, side: str | None) -> hopf.GradedElement:
    text = _read(path)
    if side is None:
        side = "d" if path.endswith(".dm") else "l"
    if side == "l":
        return hopf.GradedElement.of(textio.parse_lagrangian(text))
    return hopf.GradedElement.of(textio.parse_setsystem(text))


def cmd_hopf(args) -> Report:
    r = Report()
    if args.op == "coproduct":
        a = _load_element(args.file, args.side)
        t = hopf.coproduct(a)
        rows = [(str(c), describe(x), describe(y)) for (x, y), c in t.items()]
        r.lines += ["\t".join(row) for row in rows]
        r.data = {"terms": [{"coefficient": c, "left": x, "right": y} for c, x, y in rows]}
    elif args.op == "check":
        if not 0 <= args.degree <= MAX_HOPF_N:
            raise UsageError(f"--degree must be between 0 and {MAX_HOPF_N}")
        fn = {"bialgebra": verify.bialgebra, "numorphism": verify.nu_morphism, "fourterm": verify.four_term}[args.suite]
        res = fn(args.degree)
        _suite_lines(r, [res])
    elif args.op == "qdim":
        if not 0 <= args.n <= MAX_HOPF_N:
            raise UsageError(f"--n must be between 0 and {MAX_HOPF_N}")
        side = hopf.LAGRANGIAN if args.side == "l" else hopf.DELTAMATROID
        d = hopf.quotient_dimension(side, args.n, args.convention)
        r.add(str(d))
        r.data = {"side": side, "n": args.n, "convention": args.convention, "dimension": d}
    elif args.op == "arbiter":
        if not 0 <= args.degree <= MAX_HOPF_N:
            raise UsageError(f"--degree must be between 0 and {MAX_HOPF_N}")
        table = verify.coproduct_arbiter(args.degree)
        for (red, res), ok in table.items():
            r.add(f"reduce={red}\trestrict={res}\t{'pass' if ok else 'fail'}")
        r.data = {"combinations": [{"reduction": a, "restriction": b, "comultiplicative": ok} for (a, b), ok in table.items()]}
    return r


# -- verification --------------------------------------------------------------------------------


def _suite_lines(r: Report, results):
    width = max(len(x.name) for x in results)
    for x in results:
        status = "PASS" if x.passed else "FAIL"
        line = f"{x.name:<{width}}  {status}  checked={x.checked}"
        if x.detail:
            line += f"  {x.detail}"
        r.add(line)
    r.data["suites"] = [{"name": x.name, "passed": x.passed, "checked": x.checked, "detail": x.detail} for x in results]
    if not all(x.passed for x in results):
        r.code = 1


def cmd_verify(args) -> Report:
    if not 0 <= args.max_n <= MAX_ENUM_N:
        raise UsageError(f"--max-n must be between 0 and {MAX_ENUM_N}")
    names = [name for name, *_ in verify.SUITES]
    if args.suite == "all":
        results = verify.run_all(args.max_n)
    elif args.suite in names:
        results = [verify.run_suite(args.suite, args.max_n)]
    else:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(names)}")
    r = Report()
    _suite_lines(r, results)
    return r


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="deltalag", description="Lagrangian subspaces, binary delta-matroids and ribbon graphs over GF(2).")
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="family", required=True)

    g = sub.add_parser("gf2", help="matrix rank, determinant and kernel")
    g.add_argument("op", choices=("rank", "det", "kernel"))
    g.add_argument("file")
    g.set_defaults(func=cmd_gf2)

    d = sub.add_parser("dm", help="set systems and delta-matroids")
    dsub = d.add_subparsers(dest="op", required=True)
    for name in ("check-sea", "is-binary"):
        x = dsub.add_parser(name)
        x.add_argument("file")
    x = dsub.add_parser("twist")
    x.add_argument("--set", required=True)
    x.add_argument("file")
    d.set_defaults(func=cmd_dm)

    lg = sub.add_parser("lagr", help="Lagrangian subspaces")
    lsub = lg.add_subparsers(dest="op", required=True)
    x = lsub.add_parser("enum")
    x.add_argument("-n", type=int, required=True)
    x = lsub.add_parser("dual")
    x.add_argument("--set", required=True)
    x.add_argument("file")
    x = lsub.add_parser("graphify")
    x.add_argument("file")
    lg.set_defaults(func=cmd_lagr)

    c = sub.add_parser("conv", help="convert between subspaces and delta-matroids")
    c.add_argument("op", choices=("l2d", "d2l"))
    c.add_argument("file")
    c.set_defaults(func=cmd_conv)

    rbp = sub.add_parser("rib", help="ribbon graphs")
    rsub = rbp.add_subparsers(dest="op", required=True)
    for name in ("boundary", "rho", "pi"):
        x = rsub.add_parser(name)
        x.add_argument("file")
    x = rsub.add_parser("pdual")
    x.add_argument("--set", required=True)
    x.add_argument("file")
    rbp.set_defaults(func=cmd_rib)

    h = sub.add_parser("hopf", help="Hopf algebra computations")
    hsub = h.add_subparsers(dest="op", required=True)
    x = hsub.add_parser("coproduct")
    x.add_argument("--side", choices=("l", "d"))
    x.add_argument("file")
    x = hsub.add_parser("check")
    x.add_argument("--degree", type=int, default=3)
    x.add_argument("--suite", choices=("bialgebra", "numorphism", "fourterm"), required=True)
    x = hsub.add_parser("qdim")
    x.add_argument("--side", choices=("l", "d"), required=True)
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--convention", choices=tuple(hopf.CONVENTIONS), default="inclusion-exclusion")
    x = hsub.add_parser("arbiter")
    x.add_argument("--degree", type=int, default=3)
    h.set_defaults(func=cmd_hopf)

    v = sub.add_parser("verify", help="exhaustive verification suites")
    v.add_argument("suite", nargs="?", default="all")
    v.add_argument("--max-n", type=int, default=3)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.func(args)
    except textio.FormatError as exc:
        where = getattr(args, "file", "<input>")
        print(f"{where}: {exc}", file=err)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 2
    if args.format == "json":
        payload = dict(report.data)
        payload["exit_code"] = report.code
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        out.write("".join(line + "\n" for line in report.lines))
    return report.code


if __name__ == "__main__":
    sys.exit(main())
