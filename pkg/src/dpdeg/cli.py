"""Command-line interface over the text formats.

Every run with identical inputs and seed produces byte-identical output; the
seed only randomizes generator twists.  Exit codes: 0 answered, 1 invalid
input, 2 internal invariant violation, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import constructible as cons
from . import criticality as crit
from . import digraph as dg
from .config import Configuration, format_config, is_degree_feasible
from .cover import format_cover, saturation_and_uniformity
from .digraph import format_digraph
from .errors import BudgetExceeded, DpdegError, FormatError, InternalInvariantViolation
from .properties import parse_property
from .solver import Colored, brute_force, solve, verify
from .textio import load_document

VERSION = "dpdeg/1"


def _print_kv(args, human: str, machine: list[str]):
    if args.format == "machine":
        for ln in machine:
            print(ln)
    else:
        print(human)


def _emit_dot(cov: Cover):
    print("// cover digraph H")
    print("digraph H {")
    for v in range(cov.base.n):
        for x in cov.fibres[v]:
            print(f'  c{x} [label="{x} (fibre {v})"];')
    for (x, y) in sorted(cov.h.arcs):
        print(f"  c{x} -> c{y};")
    print("}")


def _config_document(k: Configuration, name: str = "k") -> str:
    return format_digraph(k.cover.base, "base") + format_config(k, name=name, base_name="base")


def cmd_check(args) -> int:
    for path in args.files:
        doc = load_document(path)
        for name, d in doc.digraphs.items():
            print(f"digraph {name}: {d.n} vertices, {len(d.arcs)} arcs: ok")
        for name, cov in doc.covers.items():
            sat, r = saturation_and_uniformity(cov)
            print(f"cover {name}: saturated={sat} uniform={r}: ok")
            if args.emit_dot:
                _emit_dot(cov)
        for name, k in doc.configs.items():
            ok, viol = is_degree_feasible(k)
            print(f"config {name}: degree-feasible={ok}"
                  + (f" (violated at {viol})" if not ok else "") + ": ok")
            if args.emit_dot:
                _emit_dot(k.cover)
    return 0


def cmd_solve(args) -> int:
    k = load_document(args.file).sole_config()
    use_fallback = False if args.no_fallback else None
    verdict = solve(k, use_fallback=use_fallback, budget=args.budget)
    good, why = verify(k, verdict)
    if not good:
        raise InternalInvariantViolation(why)
    if isinstance(verdict, Colored):
        t = " ".join(str(x) for x in sorted(verdict.transversal))
        o = " ".join(str(x) for x in verdict.order)
        _print_kv(args, f"COLORABLE\ntransversal: {t}\norder: {o}",
                  ["verdict=colorable", f"transversal={t}", f"order={o}"])
    else:
        sexp = cons.cert_to_sexp(verdict.certificate)
        _print_kv(args, f"CONSTRUCTIBLE {sexp}",
                  ["verdict=constructible", f"certificate={sexp}"])
    if args.emit_dot:
        _emit_dot(k.cover)
    return 0


def cmd_oracle(args) -> int:
    k = load_document(args.file).sole_config()
    hit = brute_force(k, budget=args.budget)
    if hit is None:
        _print_kv(args, "UNCOLORABLE", ["verdict=uncolorable"])
    else:
        t = " ".join(str(x) for x in sorted(hit[0]))
        _print_kv(args, f"COLORABLE\ntransversal: {t}",
                  ["verdict=colorable", f"transversal={t}"])
    return 0


def cmd_recognize(args) -> int:
    k = load_document(args.file).sole_config()
    cert = cons.recognize(k)
    if cert is None:
        _print_kv(args, "NOT-CONSTRUCTIBLE", ["constructible=no"])
    else:
        sexp = cons.cert_to_sexp(cert)
        _print_kv(args, sexp, ["constructible=yes", f"certificate={sexp}"])
    return 0


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    fam = args.family
    if fam == "m":
        doc = load_document(args.base)
        d = doc.sole_digraph()
        k = cons.gen_m(d, args.fibre_size)
    elif fam == "k":
        parts = tuple(int(t) for t in args.parts.split(","))
        perms = None
        if args.seed is not None:
            perms = {v: tuple(rng.sample(range(args.r), args.r)) for v in range(args.n)}
        k = cons.gen_k(args.n, parts, args.r, layer_perms=perms)
    elif fam in ("c-odd", "c-even"):
        parity = "odd" if fam == "c-odd" else "even"
        twists = None
        if args.seed is not None:
            want = 1 if parity == "even" else 0
            twists = [rng.random() < 0.5 for _ in range(args.n)]
            if sum(twists) % 2 != want:
                twists[-1] = not twists[-1]
        k = cons.gen_c(args.n, parity, twists)
    elif fam == "a":
        twists = None
        if args.seed is not None:
            twists = [rng.random() < 0.5 for _ in range(args.n)]
            if sum(twists) % 2 != 1:
                twists[-1] = not twists[-1]
        k = cons.gen_a(args.n, twists)
    elif fam == "merge":
        left = load_document(args.left).sole_config()
        right = load_document(args.right).sole_config()
        k = cons.merge(left, args.v1, right, args.v2)
    else:
        raise FormatError(f"unknown family {fam!r}")
    sys.stdout.write(_config_document(k))
    return 0


def cmd_chi(args) -> int:
    d = load_document(args.file).sole_digraph()
    p = parse_property(args.property)
    if args.k is not None:
        ans = crit.chi_at_most(d, p, args.variant, args.k)
        _print_kv(args, f"at_most_{args.k}={'yes' if ans else 'no'}",
                  [f"at_most={'yes' if ans else 'no'}", f"k={args.k}"])
    else:
        value = crit.chi(d, p, args.variant)
        _print_kv(args, f"chi={value}", [f"chi={value}"])
    return 0


def cmd_critical(args) -> int:
    d = load_document(args.file).sole_digraph()
    p = parse_property(args.property)
    ans = crit.is_critical(d, p, args.variant)
    value = crit.chi(d, p, args.variant)
    _print_kv(args, f"critical={'yes' if ans else 'no'} chi={value}",
              [f"critical={'yes' if ans else 'no'}", f"chi={value}"])
    return 0


def cmd_critical_cover(args) -> int:
    d = load_document(args.file).sole_digraph()
    p = parse_property(args.property)
    cov = crit.find_critical_cover(d, p, args.k)
    if cov is None:
        _print_kv(args, "NONE", ["found=no"])
    else:
        text = format_cover(cov, name="critical", base_name="base")
        _print_kv(args, format_digraph(d, "base") + text,
                  ["found=yes"] + (format_digraph(d, "base") + text).splitlines())
    return 0


def cmd_blocks(args) -> int:
    doc = load_document(args.file)
    p = parse_property(args.property)
    if doc.covers:
        cov = next(iter(doc.covers.values()))
    elif doc.configs:
        cov = next(iter(doc.configs.values())).cover
    else:
        raise FormatError("no cover or configuration in the input")
    report = crit.check_block_structure(cov.base, cov, p, mode=args.mode)
    lines = [f"low_vertices={' '.join(str(v) for v in report.low_vertices)}"]
    for verts, tag in zip(report.low_blocks, report.block_tags):
        lines.append(f"block={','.join(str(v) for v in verts)} tag={tag.kind}:{tag.n}")
    lines.append(f"violations={len(report.violations)}")
    for v in report.violations:
        lines.append(f"violation={v}")
    _print_kv(args, "\n".join(lines), lines)
    return 0


def cmd_classify(args) -> int:
    d = load_document(args.file).sole_digraph()
    tag = dg.classify(d)
    _print_kv(args, f"{tag.kind}({tag.n})", [f"family={tag.kind}", f"n={tag.n}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dpdeg", description=__doc__)
    ap.add_argument("--version", action="version", version=VERSION)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("human", "machine"), default="human")

    sp = sub.add_parser("check", help="validate digraph/cover/config files")
    sp.add_argument("files", nargs="+")
    sp.add_argument("--emit-dot", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("solve", help="color or certify a configuration")
    sp.add_argument("file")
    sp.add_argument("--no-fallback", action="store_true")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--emit-dot", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("oracle", help="exhaustive transversal search")
    sp.add_argument("file")
    sp.add_argument("--budget", type=int, default=None)
    common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("recognize", help="certificate for a constructible configuration")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("gen", help="emit a generated configuration")
    sp.add_argument("family", choices=("m", "k", "c-odd", "c-even", "a", "merge"))
    sp.add_argument("--base", help="digraph file (family m)")
    sp.add_argument("--fibre-size", type=int, default=1)
    sp.add_argument("--n", type=int)
    sp.add_argument("--parts", help="comma-separated layer budgets (family k)")
    sp.add_argument("--r", type=int)
    sp.add_argument("--left", help="left configuration file (merge)")
    sp.add_argument("--right", help="right configuration file (merge)")
    sp.add_argument("--v1", type=int, help="merge vertex in the left configuration")
    sp.add_argument("--v2", type=int, help="merge vertex in the right configuration")
    sp.add_argument("--seed", type=int, default=None)
    common(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("chi", help="coloring parameter (exact or decision)")
    sp.add_argument("file")
    sp.add_argument("--property", required=True)
    sp.add_argument("--variant", choices=("plain", "list", "dp"), default="plain")
    sp.add_argument("--k", type=int, default=None)
    common(sp)
    sp.set_defaults(func=cmd_chi)

    sp = sub.add_parser("critical", help="criticality of a digraph")
    sp.add_argument("file")
    sp.add_argument("--property", required=True)
    sp.add_argument("--variant", choices=("plain", "list", "dp"), default="plain")
    common(sp)
    sp.set_defaults(func=cmd_critical)

    sp = sub.add_parser("critical-cover", help="search for a critical uniform cover")
    sp.add_argument("file")
    sp.add_argument("--property", required=True)
    sp.add_argument("--k", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_critical_cover)

    sp = sub.add_parser("blocks", help="low-vertex block structure of a critical cover")
    sp.add_argument("file")
    sp.add_argument("--property", required=True)
    sp.add_argument("--mode", choices=("dp", "list"), default="dp")
    common(sp)
    sp.set_defaults(func=cmd_blocks)

    sp = sub.add_parser("classify", help="special-family recognition")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_classify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except InternalInvariantViolation as e:
        print(f"internal invariant violation: {e}", file=sys.stderr)
        return 2
    except (DpdegError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
