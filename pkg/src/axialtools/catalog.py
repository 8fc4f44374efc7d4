"""Named objects: Norton-Sakuma algebras, standard fusion laws, Matsuo algebras."""

from __future__ import annotations

from collections import deque
from fractions import Fraction as F
from functools import lru_cache

from .algebra import Algebra, identity_of
from .exactnum import Matrix, as_scalar
from .forms import BilinearForm
from .fusion import FusionLaw
from .groups import perm as P
from .groups.permgroup import conjugacy_class

__all__ = [
    "NS_TYPES", "norton_sakuma", "identity_length", "make_law", "monster_law",
    "matsuo_algebra", "resolve_law",
]

NS_TYPES = ("2A", "2B", "3A", "3C", "4A", "4B", "5A", "6A")


def _a(i):
    return ("a", i)


# Each entry: (n, axis indices in basis order, extra basis elements,
#              products, form values).  Products and form values are listed
# for representatives only; the rest follow from the dihedral symmetry of
# the axis indices mod n, which fixes every extra element.
_NS_DATA = {
    "2A": (2, (0, 1), ("a_rho",), {
        (_a(0), _a(1)): {_a(0): F(1, 8), _a(1): F(1, 8), "a_rho": F(-1, 8)},
        (_a(0), "a_rho"): {_a(0): F(1, 8), "a_rho": F(1, 8), _a(1): F(-1, 8)},
        ("a_rho", "a_rho"): {"a_rho": 1},
    }, {
        (_a(0), _a(1)): F(1, 8), (_a(0), "a_rho"): F(1, 8), ("a_rho", "a_rho"): 1,
    }),
    "2B": (2, (0, 1), (), {
        (_a(0), _a(1)): {},
    }, {
        (_a(0), _a(1)): 0,
    }),
    "3A": (3, (-1, 0, 1), ("u_rho",), {
        (_a(0), _a(1)): {_a(0): F(2, 32), _a(1): F(2, 32), _a(-1): F(1, 32),
                         "u_rho": F(-135, 2048)},
        (_a(0), "u_rho"): {_a(0): F(2, 9), _a(1): F(-1, 9), _a(-1): F(-1, 9),
                           "u_rho": F(5, 32)},
        ("u_rho", "u_rho"): {"u_rho": 1},
    }, {
        (_a(0), _a(1)): F(13, 256), (_a(0), "u_rho"): F(1, 4), ("u_rho", "u_rho"): F(8, 5),
    }),
    "3C": (3, (-1, 0, 1), (), {
        (_a(0), _a(1)): {_a(0): F(1, 64), _a(1): F(1, 64), _a(-1): F(-1, 64)},
    }, {
        (_a(0), _a(1)): F(1, 64),
    }),
    "4A": (4, (-1, 0, 1, 2), ("v_rho",), {
        (_a(0), _a(1)): {_a(0): F(3, 64), _a(1): F(3, 64), _a(-1): F(1, 64),
                         _a(2): F(1, 64), "v_rho": F(-3, 64)},
        (_a(0), "v_rho"): {_a(0): F(5, 16), _a(1): F(-2, 16), _a(2): F(-1, 16),
                           _a(-1): F(-2, 16), "v_rho": F(3, 16)},
        (_a(0), _a(2)): {},
        ("v_rho", "v_rho"): {"v_rho": 1},
    }, {
        (_a(0), _a(1)): F(1, 32), (_a(0), _a(2)): 0, (_a(0), "v_rho"): F(3, 8),
        ("v_rho", "v_rho"): 2,
    }),
    "4B": (4, (-1, 0, 1, 2), ("a_rho2",), {
        (_a(0), _a(1)): {_a(0): F(1, 64), _a(1): F(1, 64), _a(-1): F(-1, 64),
                         _a(2): F(-1, 64), "a_rho2": F(1, 64)},
        (_a(0), _a(2)): {_a(0): F(1, 8), _a(2): F(1, 8), "a_rho2": F(-1, 8)},
        (_a(0), "a_rho2"): {_a(0): F(1, 8), "a_rho2": F(1, 8), _a(2): F(-1, 8)},
        ("a_rho2", "a_rho2"): {"a_rho2": 1},
    }, {
        (_a(0), _a(1)): F(1, 64), (_a(0), _a(2)): F(1, 8), (_a(0), "a_rho2"): F(1, 8),
        ("a_rho2", "a_rho2"): 1,
    }),
    "5A": (5, (-2, -1, 0, 1, 2), ("w_rho",), {
        (_a(0), _a(1)): {_a(0): F(3, 128), _a(1): F(3, 128), _a(2): F(-1, 128),
                         _a(-1): F(-1, 128), _a(-2): F(-1, 128), "w_rho": 1},
        (_a(0), _a(2)): {_a(0): F(3, 128), _a(2): F(3, 128), _a(1): F(-1, 128),
                         _a(-1): F(-1, 128), _a(-2): F(-1, 128), "w_rho": -1},
        (_a(0), "w_rho"): {_a(1): F(7, 4096), _a(-1): F(7, 4096), _a(2): F(-7, 4096),
                           _a(-2): F(-7, 4096), "w_rho": F(7, 32)},
        ("w_rho", "w_rho"): {_a(i): F(175, 2 ** 19) for i in range(-2, 3)},
    }, {
        (_a(0), _a(1)): F(3, 128), (_a(0), _a(2)): F(3, 128), (_a(0), "w_rho"): 0,
        ("w_rho", "w_rho"): F(875, 2 ** 19),
    }),
    "6A": (6, (-2, -1, 0, 1, 2, 3), ("a_rho3", "u_rho2"), {
        (_a(0), _a(1)): {_a(0): F(1, 64), _a(1): F(1, 64), _a(-2): F(-1, 64),
                         _a(-1): F(-1, 64), _a(2): F(-1, 64), _a(3): F(-1, 64),
                         "a_rho3": F(1, 64), "u_rho2": F(45, 2048)},
        (_a(0), _a(2)): {_a(0): F(2, 32), _a(2): F(2, 32), _a(-2): F(1, 32),
                         "u_rho2": F(-135, 2048)},
        (_a(0), "u_rho2"): {_a(0): F(2, 9), _a(2): F(-1, 9), _a(-2): F(-1, 9),
                            "u_rho2": F(5, 32)},
        ("u_rho2", "u_rho2"): {"u_rho2": 1},
        (_a(0), _a(3)): {_a(0): F(1, 8), _a(3): F(1, 8), "a_rho3": F(-1, 8)},
        ("a_rho3", "a_rho3"): {"a_rho3": 1},
        ("a_rho3", "u_rho2"): {},
        # forced by the 2A subalgebra spanned by a0, a3 and a_rho3
        (_a(0), "a_rho3"): {_a(0): F(1, 8), "a_rho3": F(1, 8), _a(3): F(-1, 8)},
    }, {
        (_a(0), _a(1)): F(5, 256), (_a(0), _a(2)): F(13, 256), (_a(0), "u_rho2"): F(1, 4),
        ("u_rho2", "u_rho2"): F(8, 5), (_a(0), _a(3)): F(1, 8), (_a(0), "a_rho3"): F(1, 8),
        ("a_rho3", "a_rho3"): 1, ("a_rho3", "u_rho2"): 0,
    }),
}


def _axis_name(i):
    return f"a{i}"


def _dihedral_close(n, listed, what):
    """Close a table keyed by unordered pairs under i -> -i and i -> 1 - i."""

    def move(x, f):
        return _a(f(x[1]) % n) if isinstance(x, tuple) else x

    maps = (lambda i: -i, lambda i: 1 - i)

    def norm_key(x, y):
        kx = (0, x[1]) if isinstance(x, tuple) else (1, x)
        ky = (0, y[1]) if isinstance(y, tuple) else (1, y)
        return (x, y) if kx <= ky else (y, x)

    def norm_elem(x):
        return _a(x[1] % n) if isinstance(x, tuple) else x

    def norm_value(v):
        if not isinstance(v, dict):
            return as_scalar(v)
        out = {}
        for k, c in v.items():
            k = norm_elem(k)
            out[k] = out.get(k, 0) + as_scalar(c)
        return {k: c for k, c in out.items() if c}

    table = {}
    queue = deque()
    for (x, y), v in listed.items():
        key = norm_key(norm_elem(x), norm_elem(y))
        queue.append((key, norm_value(v)))
    while queue:
        key, v = queue.popleft()
        if key in table:
            if table[key] != v:
                raise ValueError(f"inconsistent {what} for {key}")
            continue
        table[key] = v
        for f in maps:
            image = norm_key(move(key[0], f), move(key[1], f))
            if isinstance(v, dict):
                iv = norm_value({move(k, f): c for k, c in v.items()})
            else:
                iv = v
            queue.append((image, iv))
    return table


@lru_cache(maxsize=None)
def _build_ns(t):
    n, indices, extras, products, form_values = _NS_DATA[t]
    elems = [_a(i % n) for i in indices] + list(extras)
    names = [_axis_name(i) for i in indices] + list(extras)
    pos = {e: k for k, e in enumerate(elems)}
    dim = len(elems)
    listed = dict(products)
    listed.update({(_a(i), _a(i)): {_a(i): 1} for i in range(n)})
    table = _dihedral_close(n, listed, "product")
    prods = {}
    for (x, y), v in table.items():
        vec = [F(0)] * dim
        for k, c in v.items():
            vec[pos[k]] += c
        prods[(pos[x], pos[y])] = vec
    fv = dict(form_values)
    fv.update({(_a(i), _a(i)): 1 for i in range(n)})
    values = _dihedral_close(n, fv, "form value")
    gram = [[None] * dim for _ in range(dim)]
    for (x, y), c in values.items():
        gram[pos[x]][pos[y]] = gram[pos[y]][pos[x]] = c
    for i in range(dim):
        for j in range(dim):
            if gram[i][j] is None:
                raise ValueError(f"{t}: form value ({names[i]}, {names[j]}) undetermined")
    form = BilinearForm(Matrix(gram, dim))
    alg = Algebra(prods, names, dim=dim, form=form, name=t)
    return alg


def norton_sakuma(t):
    """The Norton-Sakuma algebra of type ``t`` with its Frobenius form.

    Returns ``(algebra, axes)``; ``axes`` lists ``a0`` and ``a1`` first, then
    the other ``a_i`` in basis order, then any further axes among the extra
    basis elements.
    """
    t = t.upper()
    if t not in _NS_DATA:
        raise KeyError(f"unknown Norton-Sakuma type {t!r}; expected one of {', '.join(NS_TYPES)}")
    alg = _build_ns(t)
    order = ["a0", "a1"] + [x for x in alg.basis_names
                            if x.startswith("a") and x not in ("a0", "a1")]
    return alg, [alg.basis_vector(x) for x in order]


def identity_length(t):
    alg, _ = norton_sakuma(t)
    e = identity_of(alg)
    return alg.form(e, e)


# fusion laws

def _check_params(*ps):
    ps = [as_scalar(p) for p in ps]
    if len(set(ps)) != len(ps) or any(p in (0, 1) for p in ps):
        raise ValueError("parameters must be distinct and differ from 0 and 1")
    return ps


def monster_law(alpha, beta, almost=False):
    alpha, beta = _check_params(alpha, beta)
    table = {
        (1, 1): {1}, (0, 0): {0},
        (1, alpha): {alpha}, (0, alpha): {alpha},
        (1, beta): {beta}, (0, beta): {beta},
        (alpha, alpha): {1, 0, alpha} if almost else {1, 0},
        (alpha, beta): {beta},
        (beta, beta): {1, 0, alpha},
    }
    grading = {1: 1, 0: 1, alpha: 1, beta: -1}
    kind = "almost_monster" if almost else "monster"
    return FusionLaw((1, 0, alpha, beta), table, grading,
                     name=f"{kind}({alpha},{beta})",
                     params={"alpha": alpha, "beta": beta})


def jordan_law(eta):
    (eta,) = _check_params(eta)
    table = {(1, 1): {1}, (0, 0): {0}, (1, eta): {eta}, (0, eta): {eta},
             (eta, eta): {1, 0}}
    return FusionLaw((1, 0, eta), table, {1: 1, 0: 1, eta: -1},
                     name=f"jordan({eta})", params={"alpha": eta})


def make_law(kind, *params):
    """``monster``/``almost_monster`` take ``(alpha, beta)``; ``jordan`` takes ``eta``."""
    if kind == "monster":
        return monster_law(*params)
    if kind == "almost_monster":
        return monster_law(*params, almost=True)
    if kind == "jordan":
        return jordan_law(*params)
    raise ValueError(f"unknown fusion law kind {kind!r}")


def resolve_law(text):
    """Parse ``monster:1/4,1/32`` style law names."""
    kind, _, rest = text.partition(":")
    if kind == "monster" and not rest:
        rest = "1/4,1/32"
    params = [F(p) for p in rest.split(",") if p]
    return make_law(kind, *params)


# Matsuo algebras

def matsuo_algebra(g, class_rep, eta):
    """Matsuo algebra on the conjugacy class of ``class_rep`` in ``g``.

    Basis elements are the class members in sorted order.
    """
    eta = as_scalar(eta)
    cls = conjugacy_class(g, class_rep)
    if not P.is_involution(cls[0]):
        raise ValueError("class does not consist of involutions")
    pos = {x: k for k, x in enumerate(cls)}
    dim = len(cls)
    half = eta / 2
    prods = {}
    gram = [[F(0)] * dim for _ in range(dim)]
    for i, a in enumerate(cls):
        prods[(i, i)] = [F(int(k == i)) for k in range(dim)]
        gram[i][i] = F(1)
        for j in range(i + 1, dim):
            b = cls[j]
            o = P.order(P.mul(a, b))
            vec = [F(0)] * dim
            if o == 3:
                c = pos[P.conj(a, b)]
                vec[i] += half
                vec[j] += half
                vec[c] -= half
                gram[i][j] = gram[j][i] = half
            elif o != 2:
                raise ValueError(f"not a 3-transposition class: a product has order {o}")
            prods[(i, j)] = vec
    names = [f"x{k}" for k in range(dim)]
    alg = Algebra(prods, names, dim=dim, form=BilinearForm(Matrix(gram, dim)),
                  name="matsuo")
    return alg, alg.basis()
