"""Command line interface: ``axialtools <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import SubspaceBasis
from .catalog import matsuo_algebra, norton_sakuma, resolve_law
from .decompose import (ModuleError, extension_space, joint_decomposition)
from .exactnum import Matrix, format_scalar, parse_scalar, rank
from .forms import frobenius_space, gram_from_shape, is_frobenius
from .fusion import NotAnAxisError, axet_closure, check_axis, find_twins
from .groups import (enumerate_shapes, fixture, miyamoto_group, node_action,
                     pair_types, shape_diagram)
from .idempotents import IdempotentQuery, find_idempotents
from .io import ParseError, parse_group, parse_law, parse_vector, read_algebra, serialize_algebra


class VerificationFailed(Exception):
    pass


def load_group(source):
    if source.startswith("fixture:"):
        return fixture(source.split(":", 1)[1])
    return parse_group(Path(source).read_text())


def load_algebra(source):
    """Algebra from ``ns:<type>``, ``matsuo:<group>:<eta>`` or a file path."""
    if source.startswith("ns:"):
        return norton_sakuma(source[3:])[0], {}
    if source.startswith("matsuo:"):
        group_source, _, eta = source[len("matsuo:"):].rpartition(":")
        g = load_group(group_source)
        eta = parse_scalar(eta)
        for cls in g.involution_classes():
            try:
                alg, axes = matsuo_algebra(g, cls[0], eta)
            except ValueError:
                continue
            return alg, {f"x{k}": v for k, v in enumerate(axes)}
        raise ValueError("group has no class of 3-transpositions")
    return read_algebra(Path(source).read_text())


def load_law(source):
    if ":" in source or source in ("monster",):
        return resolve_law(source)
    return parse_law(Path(source).read_text())


def _vectors(alg, named, specs):
    return [parse_vector(alg, s, named) for s in specs]


def _subspace(alg, named, source, law):
    """``joint:<axis>,<axis>:<eigenvalue>,<eigenvalue>`` or ``;``-separated vectors."""
    if source.startswith("joint:"):
        _, axes_text, key_text = source.split(":")
        axes = _vectors(alg, named, axes_text.split(","))
        key = tuple(parse_scalar(x) for x in key_text.split(","))
        dec = joint_decomposition(alg, axes, law)
        return dec.summands.get(key, SubspaceBasis.zero(alg))
    return SubspaceBasis(alg, _vectors(alg, named, source.split(";")))


def _matrix_lines(m, indent="  "):
    return [indent + " ".join(format_scalar(x) for x in row) for row in m.rows]


def cmd_build(args, out):
    alg, named = load_algebra(args.source)
    if args.source.startswith("ns:"):
        _, axes = norton_sakuma(args.source[3:])
        named = {alg.basis_names[v.index(1)]: v for v in axes}
    text = serialize_algebra(alg, named)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)


def cmd_axis_check(args, out):
    alg, named = load_algebra(args.algebra)
    law = load_law(args.law)
    v = parse_vector(alg, args.vector, named)
    report = check_axis(alg, v, law)
    for line in report.lines():
        out.write(line + "\n")
    if not report.is_axis:
        raise VerificationFailed("not an axis")


def cmd_miyamoto(args, out):
    alg, named = load_algebra(args.algebra)
    law = load_law(args.law)
    seeds = _vectors(alg, named, args.seeds)
    axes, group = axet_closure(alg, seeds, law, cap=args.cap)
    out.write(f"axet size: {len(axes)}\n")
    out.write(f"group order: {group.order()}\n")
    for k, a in enumerate(axes):
        out.write(f"axis {k}: {alg.format_vector(a)}\n")
    twins = find_twins(alg, axes, law)
    out.write("twins: " + (" ".join(f"{i}-{j}" for i, j in twins) or "none") + "\n")


def cmd_frobenius(args, out):
    alg, _ = load_algebra(args.algebra)
    forms = frobenius_space(alg)
    out.write(f"dimension: {len(forms)}\n")
    for k, f in enumerate(forms):
        out.write(f"form {k}:\n")
        for line in _matrix_lines(f.gram):
            out.write(line + "\n")
    if alg.form is not None:
        ok = is_frobenius(alg, alg.form)
        out.write(f"attached form is Frobenius: {'yes' if ok else 'no'}\n")
        if not ok:
            raise VerificationFailed("attached form is not Frobenius")


def cmd_decompose(args, out):
    alg, named = load_algebra(args.algebra)
    law = load_law(args.law)
    axes = _vectors(alg, named, args.axes)
    dec = joint_decomposition(alg, axes, law, None if args.no_form else alg.form)
    for line in dec.lines():
        out.write(line + "\n")


def _parse_matrix(text, k):
    if text == "identity":
        return Matrix.identity(k)
    rows = [[parse_scalar(x) for x in r.split()] for r in text.split(";")]
    return Matrix(rows, k)


def cmd_extend(args, out):
    alg, named = load_algebra(args.algebra)
    law = load_law(args.law)
    sub = _subspace(alg, named, args.sub, law)
    module = _subspace(alg, named, args.module, law)
    target = _subspace(alg, named, args.target, law) if args.target else None
    psi = _parse_matrix(args.map, sub.dim)
    space = extension_space(alg, sub, psi, module, target)
    out.write(f"subalgebra dimension: {sub.dim}\n")
    out.write(f"module dimension: {module.dim}\n")
    out.write(f"extension space dimension: {space.dim}\n")
    for k, m in enumerate(space.extensions):
        out.write(f"extension {k}:\n")
        for line in _matrix_lines(m):
            out.write(line + "\n")


def cmd_idempotents(args, out):
    alg, _ = load_algebra(args.algebra)
    q = IdempotentQuery(alg, parse_scalar(args.length), backend=args.backend,
                        seed=args.seed, max_starts=args.starts)
    res = find_idempotents(q)
    out.write(f"found: {len(res.found)}\n")
    for v in res.found:
        out.write(alg.format_vector(v) + "\n")
    out.write(f"complete: {'yes' if res.complete else 'no'}\n")
    if res.numeric_only:
        out.write(f"numeric only: {len(res.numeric_only)}\n")


def _diagram(args):
    g = load_group(args.group)
    classes = g.involution_classes()
    chosen = range(len(classes)) if args.classes is None else \
        [int(x) for x in args.classes.split(",")]
    cls = sorted(x for k in chosen for x in classes[k])
    fold = miyamoto_group(cls) if args.fold == "miyamoto" else g
    return g, cls, shape_diagram(fold, cls)


def cmd_shape(args, out):
    g, cls, d = _diagram(args)
    for line in d.describe():
        out.write(line + "\n")
    if args.enumerate or args.up_to:
        outer = None
        if args.up_to:
            outer = node_action(d, load_group(args.up_to).generators)
        shapes = enumerate_shapes(d, outer)
        out.write(f"shapes: {len(shapes)}\n")
        for s in shapes:
            out.write(" ".join(s) + "\n")


def cmd_gram_rank(args, out):
    _, cls, d = _diagram(args)
    assignment = tuple(args.shape.split(","))
    types = pair_types(d, assignment)
    gram = gram_from_shape(types, len(cls))
    out.write(f"size: {len(cls)}\n")
    out.write(f"rank: {rank(gram)}\n")


def build_parser():
    p = argparse.ArgumentParser(prog="axialtools",
                                description="Exact computations with axial algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    law_default = "monster:1/4,1/32"

    b = sub.add_parser("build", help="write an algebra file for a catalogue entry")
    b.add_argument("source", help="ns:<type> or matsuo:<group>:<eta>")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("axis-check", help="eigenspaces and fusion rules of a vector")
    a.add_argument("algebra")
    a.add_argument("vector")
    a.add_argument("--law", default=law_default)
    a.set_defaults(func=cmd_axis_check)

    m = sub.add_parser("miyamoto", help="axet closure and Miyamoto group order")
    m.add_argument("algebra")
    m.add_argument("--seeds", nargs="+", required=True)
    m.add_argument("--law", default=law_default)
    m.add_argument("--cap", type=int, default=10_000)
    m.set_defaults(func=cmd_miyamoto)

    f = sub.add_parser("frobenius", help="space of Frobenius forms")
    f.add_argument("algebra")
    f.set_defaults(func=cmd_frobenius)

    d = sub.add_parser("decompose", help="joint eigenspace dimensions")
    d.add_argument("algebra")
    d.add_argument("--axes", nargs="+", required=True)
    d.add_argument("--law", default=law_default)
    d.add_argument("--no-form", action="store_true", help="skip the residual complement")
    d.set_defaults(func=cmd_decompose)

    e = sub.add_parser("extend", help="extensions of a subalgebra automorphism to a module")
    e.add_argument("algebra")
    e.add_argument("--sub", required=True)
    e.add_argument("--map", default="identity")
    e.add_argument("--module", required=True)
    e.add_argument("--target")
    e.add_argument("--law", default=law_default)
    e.set_defaults(func=cmd_extend)

    i = sub.add_parser("idempotents", help="idempotents of a given length")
    i.add_argument("algebra")
    i.add_argument("--length", required=True)
    i.add_argument("--backend", default="auto",
                   choices=["auto", "exact_small", "newton_reconstruct"])
    i.add_argument("--seed", type=int, default=0)
    i.add_argument("--starts", type=int, default=None,
                   help="Newton starting points (default from AXIALTOOLS_NEWTON_STARTS)")
    i.set_defaults(func=cmd_idempotents)

    for name, func, helptext in (("shape", cmd_shape, "folded shape diagram"),
                                 ("gram-rank", cmd_gram_rank, "rank of the Gram matrix of a shape")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("group", help="group file or fixture:<name>")
        s.add_argument("--classes", help="comma-separated involution class indices")
        s.add_argument("--fold", choices=["miyamoto", "group"], default="miyamoto",
                       help="fold over the group generated by the class, or the whole group")
        if name == "shape":
            s.add_argument("--enumerate", action="store_true")
            s.add_argument("--up-to", dest="up_to")
        else:
            s.add_argument("--shape", required=True, help="one type per node, e.g. 2A,3A,...")
        s.set_defaults(func=func)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except NotAnAxisError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (ParseError, ModuleError, ValueError, KeyError, OSError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
