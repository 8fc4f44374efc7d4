"""Text formats for algebras, permutation groups and fusion laws.

Algebra files::

    algebra 2A
    dim 3
    field Q                      # or: field quadratic <c1> <c0> [name]
    basis a0 a1 a_rho
    sparse                       # optional: omitted products are zero
    products
    0 0 : 1 0 0
    0 1 : 1/8 1/8 -1/8
    ...
    form                         # optional, upper triangle "i j : value"
    0 0 : 1
    ...
    axes                         # optional, named vectors
    a0 : 1 0 0

Group files hold the degree on the first line and one generator per line
in image notation.  Lines starting with ``#`` are comments everywhere.
"""

from __future__ import annotations

import re

from .algebra import Algebra
from .exactnum import (Matrix, QuadraticField, as_scalar, format_scalar,
                       parse_scalar)
from .forms import BilinearForm
from .fusion import FusionLaw
from .groups import perm as P
from .groups.permgroup import PermGroup

__all__ = [
    "ParseError", "parse_algebra", "read_algebra", "serialize_algebra",
    "parse_group", "serialize_group", "parse_law", "serialize_law",
    "parse_vector", "format_vector",
]


class ParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def _scalars(tokens, field, lineno):
    try:
        return [parse_scalar(t, field) for t in tokens]
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None


def read_algebra(text):
    """Parse an algebra file; returns ``(algebra, {axis name: vector})``."""
    name = None
    dim = None
    field = None
    basis = None
    sparse = False
    products = {}
    gram_entries = {}
    axes = {}
    section = None
    for n, line in _lines(text):
        head, *rest = line.split()
        if section is None or head in ("products", "form", "axes"):
            if head == "algebra":
                name = rest[0] if rest else None
                continue
            if head == "dim":
                try:
                    dim = int(rest[0])
                except (IndexError, ValueError):
                    raise ParseError("dim needs an integer", n) from None
                continue
            if head == "field":
                if rest == ["Q"]:
                    field = None
                elif rest and rest[0] == "quadratic" and len(rest) in (3, 4):
                    c1, c0 = _scalars(rest[1:3], None, n)
                    try:
                        field = QuadraticField(c1, c0, *(rest[3:]))
                    except ValueError as exc:
                        raise ParseError(str(exc), n) from None
                else:
                    raise ParseError(f"unknown field description {' '.join(rest)!r}", n)
                continue
            if head == "basis":
                basis = rest
                continue
            if head == "sparse":
                sparse = True
                continue
            if head in ("products", "form", "axes"):
                if dim is None:
                    raise ParseError("dim must precede the data blocks", n)
                if basis is None:
                    basis = [f"b{i}" for i in range(dim)]
                if len(basis) != dim:
                    raise ParseError(f"{len(basis)} basis names for dimension {dim}", n)
                section = head
                continue
            raise ParseError(f"unexpected line {line!r}", n)
        left, sep, right = line.partition(":")
        if not sep:
            raise ParseError("expected ':'", n)
        if section == "axes":
            label = left.strip()
            vec = _scalars(right.split(), field, n)
            if len(vec) != dim:
                raise ParseError(f"axis has {len(vec)} coordinates, expected {dim}", n)
            axes[label] = tuple(vec)
            continue
        try:
            i, j = (int(x) for x in left.split())
        except ValueError:
            raise ParseError("expected two indices before ':'", n) from None
        if not (0 <= i <= j < dim):
            raise ParseError(f"index pair ({i}, {j}) out of range or not i <= j", n)
        if section == "products":
            vec = _scalars(right.split(), field, n)
            if len(vec) != dim:
                raise ParseError(f"product has {len(vec)} coordinates, expected {dim}", n)
            if (i, j) in products:
                raise ParseError(f"duplicate product ({i}, {j})", n)
            products[(i, j)] = vec
        else:
            vals = _scalars(right.split(), field, n)
            if len(vals) != 1:
                raise ParseError("form entries take one value", n)
            if (i, j) in gram_entries:
                raise ParseError(f"duplicate form entry ({i}, {j})", n)
            gram_entries[(i, j)] = vals[0]
    if dim is None:
        raise ParseError("missing dim")
    if basis is None:
        basis = [f"b{i}" for i in range(dim)]
    form = None
    if gram_entries:
        zero = field(0) if field is not None else as_scalar(0)
        g = [[zero] * dim for _ in range(dim)]
        for (i, j), v in gram_entries.items():
            g[i][j] = g[j][i] = v
        form = BilinearForm(Matrix(g, dim))
    try:
        alg = Algebra(products, basis, dim=dim, form=form, field=field, name=name,
                      sparse=sparse)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return alg, axes


def parse_algebra(text):
    return read_algebra(text)[0]


def serialize_algebra(alg, axes=None):
    out = []
    if alg.name:
        out.append(f"algebra {alg.name}")
    out.append(f"dim {alg.dim}")
    if alg.field is None:
        out.append("field Q")
    else:
        f = alg.field
        out.append(f"field quadratic {format_scalar(f.c1)} {format_scalar(f.c0)} {f.name}")
    out.append("basis " + " ".join(alg.basis_names))
    out.append("products")
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            out.append(f"{i} {j} : " + " ".join(format_scalar(c) for c in alg.table[i][j]))
    if alg.form is not None:
        out.append("form")
        g = alg.form.gram
        for i in range(alg.dim):
            for j in range(i, alg.dim):
                out.append(f"{i} {j} : {format_scalar(g[i, j])}")
    if axes:
        out.append("axes")
        for label, v in axes.items():
            out.append(f"{label} : " + " ".join(format_scalar(c) for c in v))
    return "\n".join(out) + "\n"


def parse_group(text):
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty group file")
    n, first = lines[0]
    try:
        degree = int(first)
    except ValueError:
        raise ParseError("first line must be the degree", n) from None
    gens = []
    for n, line in lines[1:]:
        try:
            g = tuple(int(x) for x in line.split())
        except ValueError:
            raise ParseError("generator entries must be integers", n) from None
        if len(g) != degree:
            raise ParseError(f"generator has {len(g)} images, degree is {degree}", n)
        try:
            gens.append(P.check(g))
        except ValueError as exc:
            raise ParseError(str(exc), n) from None
    return PermGroup(gens, degree=degree)


def serialize_group(g):
    return "\n".join([str(g.degree)] + [" ".join(map(str, s)) for s in g.generators]) + "\n"


def parse_law(text):
    """Fusion law text: ``eigenvalues ...``, rows ``l m : nu ...``, ``grading <negatives>``."""
    eigen = None
    table = {}
    negative = None
    name = None
    for n, line in _lines(text):
        head, *rest = line.split()
        if head == "name":
            name = " ".join(rest)
        elif head == "eigenvalues":
            eigen = _scalars(rest, None, n)
        elif head == "grading":
            negative = _scalars(rest, None, n)
        else:
            left, sep, right = line.partition(":")
            pair = _scalars(left.split(), None, n)
            if not sep or len(pair) != 2:
                raise ParseError("table rows look like 'l m : nu ...'", n)
            table[tuple(pair)] = _scalars(right.split(), None, n)
    if eigen is None:
        raise ParseError("missing eigenvalues line")
    grading = None
    if negative is not None:
        grading = {x: (-1 if x in negative else 1) for x in eigen}
    try:
        return FusionLaw(eigen, table, grading, name=name)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize_law(law):
    out = []
    if law.name:
        out.append(f"name {law.name}")
    out.append("eigenvalues " + " ".join(format_scalar(x) for x in law.eigenvalues))
    ev = law.eigenvalues
    for i, l in enumerate(ev):
        for m in ev[i:]:
            res = [x for x in ev if x in law.product(l, m)]
            out.append((f"{format_scalar(l)} {format_scalar(m)} : "
                        + " ".join(format_scalar(x) for x in res)).rstrip())
    if law.grading is not None:
        out.append("grading " + " ".join(format_scalar(x) for x in law.negative_eigenvalues()))
    return "\n".join(out) + "\n"


_TERM_RE = re.compile(r"([+-]?)\s*(?:([0-9]+(?:/[0-9]+)?)\s*\*\s*)?([A-Za-z_][\w'\-]*)")


def parse_vector(alg, text, named=None):
    """A vector from coordinates ``"1,0,1/2"``, a name, or ``"1/2*a0 - a_rho"``.

    ``named`` optionally maps extra labels (for instance axes from a file)
    to vectors.
    """
    named = named or {}
    text = text.strip()
    if not text:
        raise ValueError("empty vector")
    if text == "0":
        return tuple(as_scalar(0) for _ in range(alg.dim))
    if "," in text or re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        vals = [parse_scalar(t, alg.field) for t in text.split(",")]
        if len(vals) != alg.dim:
            raise ValueError(f"{len(vals)} coordinates for dimension {alg.dim}")
        return tuple(vals)
    out = [as_scalar(0)] * alg.dim
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse vector {text!r}")
        sign, coef, label = m.groups()
        c = parse_scalar(coef) if coef else as_scalar(1)
        if sign == "-":
            c = -c
        if label in named:
            v = named[label]
        elif label in alg.basis_names:
            v = alg.basis_vector(label)
        else:
            raise ValueError(f"unknown basis element or axis {label!r}")
        out = [a + c * b for a, b in zip(out, v)]
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return tuple(out)


def format_vector(alg, v):
    return alg.format_vector(v)
