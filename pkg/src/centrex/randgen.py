"""Seeded generators for random algebras, subspaces and extensions.

Everything takes an explicit random.Random so that every randomised check in
the test-suite and the CLI is reproducible from its seed.  Members of a law
variety are built constructively (catalog members, direct sums, central
cocycle extensions, central quotients) rather than by rejection on random
tensors, which would almost never satisfy the laws.
"""

from __future__ import annotations

from random import Random

from . import catalog
from .algebras import (Algebra, LinearMap, centre, certify_ideal,
                       direct_product, ideal_generated, product_injections,
                       product_projections, quotient_algebra)
from .errors import InputError
from .extensions import Extension, is_perfect
from .fields import Field
from .laws import VECT, Variety, satisfies
from .linalg import Matrix, Subspace, quotient_map
from .uce import cocycle_relations


def random_scalar(rng: Random, field: Field):
    if field.char == 0:
        return field.from_int(rng.randint(-2, 2))
    return field.from_int(rng.randrange(field.char))


def random_vector(rng: Random, field: Field, n: int):
    return tuple(random_scalar(rng, field) for _ in range(n))


def random_subspace(rng: Random, field: Field, ambient_dim: int,
                    max_vectors: int) -> Subspace:
    count = rng.randint(0, max_vectors)
    return Subspace.from_vectors(
        field, ambient_dim,
        [random_vector(rng, field, ambient_dim) for _ in range(count)])


def random_algebra(rng: Random, field: Field, dim: int, density=0.4) -> Algebra:
    """A random structure tensor; satisfies no laws in general."""
    products = {}
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                if rng.random() < density:
                    c = random_scalar(rng, field)
                    if c != field.zero:
                        products[(i, j, k)] = c
    return Algebra.from_products(field, tuple(f"g{i + 1}" for i in range(dim)), products)


_PERFECT_LIE = ("sl2", "so3")


def random_variety_member(rng: Random, v: Variety, field: Field,
                          dim_bound: int) -> Algebra:
    """A random algebra satisfying the given built-in variety."""
    if v.name == "NAAlg":
        return random_algebra(rng, field, rng.randint(0, dim_bound))
    if v.name == "Vect":
        return Algebra.abelian(
            field, tuple(f"g{i + 1}" for i in range(rng.randint(0, dim_bound))))
    if v.name not in ("Lie", "Leib"):
        raise InputError(f"no generator for variety {v.name}")
    choices = ["abelian", "heisenberg"]
    if dim_bound >= 3:
        choices += list(_PERFECT_LIE)
    if v.name == "Leib":
        choices.append("leibniz-line")
    pick = rng.choice(choices)
    if pick == "abelian":
        base = Algebra.abelian(
            field, tuple(f"g{i + 1}" for i in range(rng.randint(0, min(3, dim_bound)))))
    elif pick == "heisenberg":
        base = Algebra.from_products(field, ("hx", "hy", "hz"),
                                     {(0, 1, 2): 1, (1, 0, 2): -1})
    elif pick == "leibniz-line":
        base = catalog.leibniz_line(field)
    else:
        base = catalog.bundled_algebra(pick, field)
    if base.dim > dim_bound:
        base = Algebra.abelian(field, tuple(f"g{i + 1}" for i in range(dim_bound)))
    # decorate: sometimes a central cocycle extension, sometimes a quotient
    room = dim_bound - base.dim
    if room > 0 and rng.random() < 0.5:
        base = central_cocycle_algebra(rng, base, v, rng.randint(1, room))
    if rng.random() < 0.3 and base.dim > 0:
        z = centre(base)
        if z.dim > 0:
            sub = _random_subspace_inside(rng, z, 1)
            base, _ = quotient_algebra(base, certify_ideal(base, sub))
    return base


def random_perfect_algebra(rng: Random, ambient: Variety, field: Field,
                           dim_bound: int, attempts=40) -> Algebra:
    """A perfect member of the variety (verbal subobject is everything)."""
    if ambient.name in ("Lie", "Leib"):
        if dim_bound < 3:
            return Algebra.zero_algebra(field)
        name = rng.choice(_PERFECT_LIE)
        return catalog.bundled_algebra(name, field)
    if ambient.name == "Vect":
        return Algebra.zero_algebra(field)
    for _ in range(attempts):
        dim = rng.randint(1, max(1, dim_bound))
        cand = random_algebra(rng, field, dim, density=0.6)
        if is_perfect(cand, VECT):
            return cand
    raise InputError("could not generate a perfect algebra; raise the bound")


def _random_subspace_inside(rng: Random, s: Subspace, max_vectors: int) -> Subspace:
    """Random subspace of a given subspace."""
    vecs = []
    for _ in range(rng.randint(0, max_vectors)):
        coeffs = random_vector(rng, s.field, s.dim)
        vecs.append(s.basis.apply_row(coeffs))
    return Subspace.from_vectors(s.field, s.ambient_dim, vecs)


def central_cocycle_algebra(rng: Random, base: Algebra, ambient: Variety,
                            kernel_dim: int, coboundary_of=None) -> Algebra:
    """base + V with bracket twisted by a 2-cocycle that kills the law
    relations, so the result stays inside the ambient variety and V is
    central in it.

    With coboundary_of = lambda: a random linear functional row, the cocycle
    is a coboundary phi(x, y) = -l([x, y]) and the extension splits.
    """
    f = base.field
    n = base.dim
    w = cocycle_relations(base, ambient)
    proj, _ = quotient_map(w)
    qdim = n * n - w.dim
    if coboundary_of is None:
        psi = Matrix.from_rows_shaped(
            f, [random_vector(rng, f, kernel_dim) for _ in range(qdim)], kernel_dim)
        phi = proj.mul(psi)
    else:
        mu_rows = [base.sc[i][j] for i in range(n) for j in range(n)]
        lam = Matrix.from_rows_shaped(f, [coboundary_of() for _ in range(n)], kernel_dim)
        phi = Matrix.from_rows_shaped(f, mu_rows, n).mul(lam).neg()
    products = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if base.sc[i][j][k] != f.zero:
                    products[(i, j, k)] = base.sc[i][j][k]
            prow = phi.row(i * n + j)
            for t in range(kernel_dim):
                if prow[t] != f.zero:
                    products[(i, j, n + t)] = prow[t]
    labels = base.basis_labels + tuple(f"w{t + 1}" for t in range(kernel_dim))
    out = Algebra.from_products(f, labels, products)
    if not satisfies(out, ambient):
        raise InputError("cocycle construction left the variety")
    return out


def random_central_cocycle_extension(rng: Random, base: Algebra,
                                     ambient: Variety, kernel_dim=None,
                                     split=False) -> Extension:
    """A central extension of base with a small kernel, inside the variety."""
    f = base.field
    if kernel_dim is None:
        kernel_dim = rng.randint(1, 2)
    if split:
        big = central_cocycle_algebra(
            rng, base, ambient, kernel_dim,
            coboundary_of=lambda: random_vector(rng, f, kernel_dim))
    else:
        big = central_cocycle_algebra(rng, base, ambient, kernel_dim)
    rows = [tuple(f.one if i == j else f.zero for j in range(base.dim))
            for i in range(base.dim)]
    rows += [tuple(f.zero for _ in range(base.dim)) for _ in range(kernel_dim)]
    pr = LinearMap.from_rows(big, base, rows).certified()
    return Extension.make(pr, ambient, VECT)


def random_central_quotient(rng: Random, b: Algebra, ambient: Variety) -> Extension:
    """b modulo a random central subspace; always a central extension."""
    z = centre(b)
    sub = _random_subspace_inside(rng, z, 2) if z.dim else Subspace.zero(b.field, b.dim)
    quot, proj = quotient_algebra(b, certify_ideal(b, sub))
    return Extension.make(proj, ambient, VECT)


def random_quotient_extension(rng: Random, b: Algebra, ambient: Variety,
                              coefficient: Variety = VECT) -> Extension:
    """b modulo a random ideal; central only by accident."""
    seed_space = random_subspace(rng, b.field, b.dim, 1)
    ideal = ideal_generated(b, seed_space)
    quot, proj = quotient_algebra(b, ideal)
    return Extension.make(proj, ambient, coefficient)


def random_extension(rng: Random, ambient: Variety, field: Field,
                     dim_bound: int, coefficient: Variety = VECT) -> Extension:
    """A mixed bag: quotients by random ideals and central cocycle
    extensions, over random variety members."""
    b = random_variety_member(rng, ambient, field, dim_bound)
    if b.dim and rng.random() < 0.5:
        return random_central_cocycle_extension(
            rng, random_variety_member(rng, ambient, field, max(0, dim_bound - 1)),
            ambient)
    return random_quotient_extension(rng, b, ambient, coefficient)


def random_split_epi(rng: Random, ambient: Variety, field: Field, dim_bound: int):
    """A split epimorphism with its section; returns (Extension, section).

    Mixes product projections (central only when the discarded factor is
    abelian) with split central cocycle extensions.
    """
    base = random_variety_member(rng, ambient, field, max(0, dim_bound - 1))
    if rng.random() < 0.5 and base.dim < dim_bound:
        other = random_variety_member(rng, ambient, field, dim_bound - base.dim)
        prod = direct_product(base, other)
        p1, _ = product_projections(prod, base, other)
        i1, _ = product_injections(prod, base, other)
        return Extension.make(p1, ambient, VECT), i1
    ext = random_central_cocycle_extension(rng, base, ambient, split=True)
    # section of the split coboundary extension: x |-> (x, l([x, .]) ...) is
    # recovered by solving, which keeps this generator independent of how
    # the cocycle was produced
    sec = _section_of_split_central(ext)
    return ext, sec


def _section_of_split_central(ext: Extension) -> LinearMap:
    """Find a multiplicative section of a split central extension by solving.

    Linear sections form an affine space s0 + Hom(A, ker f); because the
    kernel is central, multiplicativity of s0 + d is the linear condition
    d([x,y]) = [s0 x, s0 y] - s0([x,y]) on the bracket span.
    """
    from .linalg import right_section
    f = ext.f.matrix.field
    a = ext.codomain
    c = ext.domain
    s0 = right_section(ext.f.matrix)
    n = a.dim
    span_rows = []
    span_targets = []
    for i in range(n):
        for j in range(n):
            mu = a.sc[i][j]
            span_rows.append(mu)
            lhs = c.bracket(s0.row(i), s0.row(j))
            span_targets.append(tuple(f.sub(x, y) for x, y in
                                      zip(lhs, s0.apply_row(mu))))
    span = Matrix.from_rows_shaped(f, span_rows, n)
    d = _solve_linear_map(f, span, span_targets, n, c.dim)
    rows = [tuple(f.add(x, y) for x, y in zip(s0.row(i), d[i])) for i in range(n)]
    sec = LinearMap.from_rows(a, c, rows).certified()
    if sec.matrix.mul(ext.f.matrix) != Matrix.identity(f, n):
        raise InputError("constructed section does not split the extension")
    return sec


def _solve_linear_map(f, span: Matrix, targets, n: int, m: int):
    """Find an n x m matrix d with v*d = target(v) for v in span's rows and
    d vanishing on a complement (deterministic choice)."""
    from .linalg import _rref_in_place
    work = [list(r) + list(t) for r, t in zip(span.entries, targets)]
    rows, pivots = _rref_in_place(f, work, n + m, pivot_limit=n)
    zero = f.zero
    for r in range(len(pivots), len(rows)):
        if any(x != zero for x in rows[r][n:]):
            raise InputError("inconsistent section system")
    d = [[zero] * m for _ in range(n)]
    for r_idx, pc in enumerate(pivots):
        d[pc] = list(rows[r_idx][n:])
    return [tuple(r) for r in d]
