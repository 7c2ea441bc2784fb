"""Bundled algebras and morphisms used by the demos and the CLI.

The centrepiece is a chain of non-associative algebras C -> B -> A in which
both maps are central (kernels inside the centre) but the composite is not:
the standard witness that central extensions need not compose, even over a
perfect middle object.  Also included: the split simple Lie algebra sl2, the
rotation algebra so3 (cross product), and a perfect five-dimensional Lie
algebra with one-dimensional second homology.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import Algebra, LinearMap
from .errors import InputError
from .extensions import Extension
from .fields import QQ, Field
from .laws import NAALG, VECT


@dataclass(frozen=True)
class CounterexampleChain:
    a: Algebra
    b: Algebra
    c: Algebra
    f: LinearMap   # B -> A, central
    g: LinearMap   # C -> B, central
    ext_f: Extension
    ext_g: Extension


def nonassoc_a(field: Field = QQ) -> Algebra:
    """2-dimensional perfect non-associative algebra."""
    return Algebra.from_products(field, ("a1", "a2"), {
        (1, 0, 1): 1,   # [a2,a1] = a2
        (1, 1, 0): 1,   # [a2,a2] = a1
    })


def nonassoc_b(field: Field = QQ) -> Algebra:
    """3-dimensional perfect non-associative algebra with centre <b1>."""
    return Algebra.from_products(field, ("b1", "b2", "b3"), {
        (1, 1, 0): 1,   # [b2,b2] = b1
        (2, 1, 2): 1,   # [b3,b2] = b3
        (2, 2, 1): 1,   # [b3,b3] = b2
    })


def nonassoc_c(field: Field = QQ) -> Algebra:
    """4-dimensional perfect non-associative algebra with centre <c1>."""
    return Algebra.from_products(field, ("c1", "c2", "c3", "c4"), {
        (2, 1, 0): 1,   # [c3,c2] = c1
        (2, 2, 1): 1,   # [c3,c3] = c2
        (3, 2, 3): 1,   # [c4,c3] = c4
        (3, 3, 2): 1,   # [c4,c4] = c3
    })


def counterexample_chain(field: Field = QQ) -> CounterexampleChain:
    a = nonassoc_a(field)
    b = nonassoc_b(field)
    c = nonassoc_c(field)
    f = LinearMap.from_rows(b, a, [(0, 0), (1, 0), (0, 1)]).certified()
    g = LinearMap.from_rows(c, b, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]).certified()
    ext_f = Extension.make(f, NAALG, VECT)
    ext_g = Extension.make(g, NAALG, VECT)
    return CounterexampleChain(a, b, c, f, g, ext_f, ext_g)


def sl2(field: Field = QQ) -> Algebra:
    """The split simple Lie algebra: [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
    if field.char == 2:
        raise InputError("sl2 needs characteristic != 2")
    return Algebra.from_products(field, ("e", "f", "h"), {
        (0, 1, 2): 1, (1, 0, 2): -1,
        (2, 0, 0): 2, (0, 2, 0): -2,
        (2, 1, 1): -2, (1, 2, 1): 2,
    })


def so3(field: Field = QQ) -> Algebra:
    """The cross-product Lie algebra on three generators."""
    if field.char == 2:
        raise InputError("so3 needs characteristic != 2")
    return Algebra.from_products(field, ("e1", "e2", "e3"), {
        (0, 1, 2): 1, (1, 0, 2): -1,
        (1, 2, 0): 1, (2, 1, 0): -1,
        (2, 0, 1): 1, (0, 2, 1): -1,
    })


def sl2_natural_semidirect(field: Field = QQ) -> Algebra:
    """sl2 acting on its natural 2-dimensional module, as a split extension.

    Perfect, with one-dimensional second homology spanned by the invariant
    symplectic form on the module part.
    """
    if field.char == 2:
        raise InputError("needs characteristic != 2")
    # basis e, f, h, x, y with h.x = x, h.y = -y, e.y = x, f.x = y
    return Algebra.from_products(field, ("e", "f", "h", "x", "y"), {
        (0, 1, 2): 1, (1, 0, 2): -1,
        (2, 0, 0): 2, (0, 2, 0): -2,
        (2, 1, 1): -2, (1, 2, 1): 2,
        (2, 3, 3): 1, (3, 2, 3): -1,
        (2, 4, 4): -1, (4, 2, 4): 1,
        (0, 4, 3): 1, (4, 0, 3): -1,
        (1, 3, 4): 1, (3, 1, 4): -1,
    })


def leibniz_line(field: Field = QQ) -> Algebra:
    """2-dimensional Leibniz algebra [e1,e1] = e2 that is not Lie."""
    return Algebra.from_products(field, ("e1", "e2"), {(0, 0, 1): 1})


BUNDLED_ALGEBRAS = {
    "nonassoc-A": nonassoc_a,
    "nonassoc-B": nonassoc_b,
    "nonassoc-C": nonassoc_c,
    "sl2": sl2,
    "so3": so3,
    "sl2-natural": sl2_natural_semidirect,
    "leibniz-line": leibniz_line,
}


def bundled_algebra(name: str, field: Field = QQ) -> Algebra:
    if name not in BUNDLED_ALGEBRAS:
        raise InputError(
            f"unknown bundled algebra {name!r}; available: {', '.join(sorted(BUNDLED_ALGEBRAS))}")
    return BUNDLED_ALGEBRAS[name](field)


def bundled_extension(name: str, field: Field = QQ) -> Extension:
    chain = counterexample_chain(field)
    table = {
        "nonassoc-f": chain.ext_f,
        "nonassoc-g": chain.ext_g,
    }
    if name not in table:
        raise InputError(
            f"unknown bundled extension {name!r}; available: {', '.join(sorted(table))}")
    return table[name]
