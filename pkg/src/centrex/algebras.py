"""Finite-dimensional algebras given by structure constants, and their maps.

An algebra is a vector space with one bilinear bracket, encoded by the tensor
sc[i][j][k]: [e_i, e_j] = sum_k sc[i][j][k] e_k.  No identities are imposed
at this layer; membership in a variety is a separate concern (laws module).

Everything is immutable; operations return new values.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import CheckFailed, InputError
from .fields import Field
from .linalg import (Matrix, Subspace, image, kernel, quotient_map,
                     unit_vector, vec_zero)


@dataclass(frozen=True)
class Algebra:
    field: Field
    basis_labels: tuple
    sc: tuple  # sc[i][j][k]

    def __post_init__(self):
        n = len(self.basis_labels)
        if len(set(self.basis_labels)) != n:
            raise InputError("basis labels must be distinct")
        if len(self.sc) != n or any(
                len(plane) != n or any(len(row) != n for row in plane)
                for plane in self.sc):
            raise InputError("structure tensor shape must be dim x dim x dim")

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    @staticmethod
    def from_products(field, labels, products) -> "Algebra":
        """Build from a {(i, j, k): coefficient} mapping, zero elsewhere."""
        labels = tuple(labels)
        n = len(labels)
        sc = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), c in products.items():
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise InputError(f"product index ({i},{j},{k}) out of range")
            sc[i][j][k] = field.coerce(c)
        return Algebra(field, labels,
                       tuple(tuple(tuple(row) for row in plane) for plane in sc))

    @staticmethod
    def abelian(field, labels) -> "Algebra":
        return Algebra.from_products(field, labels, {})

    @staticmethod
    def zero_algebra(field) -> "Algebra":
        return Algebra(field, (), ())

    def basis_vector(self, i) -> tuple:
        return unit_vector(self.field, self.dim, i)

    def bracket(self, u, v) -> tuple:
        f = self.field
        n = self.dim
        zero = f.zero
        add, mul = f.add, f.mul
        out = [zero] * n
        for i, ui in enumerate(u):
            if ui == zero:
                continue
            plane = self.sc[i]
            for j, vj in enumerate(v):
                if vj == zero:
                    continue
                c = mul(ui, vj)
                for k, w in enumerate(plane[j]):
                    if w != zero:
                        out[k] = add(out[k], mul(c, w))
        return tuple(out)

    def bracket_span(self) -> Subspace:
        """Span of all products of basis vectors."""
        return Subspace.from_vectors(
            self.field, self.dim,
            [self.sc[i][j] for i in range(self.dim) for j in range(self.dim)])

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def __repr__(self):
        return f"Algebra(dim {self.dim} over {self.field.name})"


@dataclass(frozen=True)
class LinearMap:
    domain: Algebra
    codomain: Algebra
    matrix: Matrix  # dim(domain) x dim(codomain), row-vector convention
    morphism_certified: bool = False

    def __post_init__(self):
        if self.matrix.rows != self.domain.dim or self.matrix.cols != self.codomain.dim:
            raise InputError("map matrix shape does not match domain/codomain")
        if self.matrix.field != self.domain.field or self.domain.field != self.codomain.field:
            raise InputError("field mismatch in linear map")

    @staticmethod
    def from_rows(domain, codomain, rows) -> "LinearMap":
        return LinearMap(domain, codomain,
                         Matrix.from_rows_shaped(domain.field, rows, codomain.dim))

    def apply(self, v) -> tuple:
        return self.matrix.apply_row(v)

    def then(self, other: "LinearMap") -> "LinearMap":
        """Composite: self first, then other."""
        if self.codomain != other.domain:
            raise InputError("composition mismatch: codomain != next domain")
        return LinearMap(self.domain, other.codomain, self.matrix.mul(other.matrix),
                         self.morphism_certified and other.morphism_certified)

    def is_surjective(self) -> bool:
        return image(self.matrix).dim == self.codomain.dim

    def is_injective(self) -> bool:
        return kernel(self.matrix).dim == 0

    def certified(self) -> "LinearMap":
        if self.morphism_certified:
            return self
        if not is_morphism(self):
            raise CheckFailed("map is not multiplicative on the bracket")
        return replace(self, morphism_certified=True)


def identity_map(a: Algebra) -> LinearMap:
    return LinearMap(a, a, Matrix.identity(a.field, a.dim), True)


def zero_map(domain: Algebra, codomain: Algebra) -> LinearMap:
    return LinearMap(domain, codomain,
                     Matrix.zeros(domain.field, domain.dim, codomain.dim), True)


def is_morphism(f: LinearMap) -> bool:
    """Multiplicativity on all basis pairs; enough by bilinearity."""
    a, b = f.domain, f.codomain
    for i in range(a.dim):
        row_i = f.matrix.row(i)
        for j in range(a.dim):
            lhs = f.apply(a.sc[i][j])
            rhs = b.bracket(row_i, f.matrix.row(j))
            if lhs != rhs:
                return False
    return True


@dataclass(frozen=True)
class IdealWitness:
    subspace: Subspace
    closure_certified: bool = False


def is_ideal(a: Algebra, s: Subspace) -> bool:
    """Whether [s, A] and [A, s] both land in s, checked on bases."""
    for v in s.basis.entries:
        for j in range(a.dim):
            if not s.contains(a.bracket(v, a.basis_vector(j))):
                return False
            if not s.contains(a.bracket(a.basis_vector(j), v)):
                return False
    return True


def ideal_generated(a: Algebra, s: Subspace) -> IdealWitness:
    """Smallest ideal of a containing s, by fixpoint closure.

    Each round brackets the current basis with all basis vectors on both
    sides; the dimension strictly grows or the loop stops, so at most
    dim(a) rounds run.
    """
    if s.ambient_dim != a.dim or s.field != a.field:
        raise InputError("subspace does not live in the algebra's space")
    cur = s
    for _ in range(a.dim + 1):
        new_vecs = []
        for v in cur.basis.entries:
            for j in range(a.dim):
                ej = a.basis_vector(j)
                new_vecs.append(a.bracket(v, ej))
                new_vecs.append(a.bracket(ej, v))
        nxt = cur.sum(Subspace.from_vectors(a.field, a.dim, new_vecs))
        if nxt.dim == cur.dim:
            cur = nxt
            break
        cur = nxt
    return IdealWitness(cur, True)


def certify_ideal(a: Algebra, s: Subspace) -> IdealWitness:
    if not is_ideal(a, s):
        raise CheckFailed("subspace is not an ideal")
    return IdealWitness(s, True)


def quotient_algebra(a: Algebra, ideal: IdealWitness):
    """Quotient by a certified ideal; returns (quotient, projection).

    Quotient by the zero ideal returns the algebra itself with the identity
    projection, so reflections of objects already inside a subvariety are
    literal identities.
    """
    if not ideal.closure_certified:
        raise InputError("quotient requires a closure-certified ideal")
    w = ideal.subspace
    if w.ambient_dim != a.dim or w.field != a.field:
        raise InputError("ideal does not live in the algebra's space")
    if w.is_zero():
        return a, identity_map(a)
    proj, sect = quotient_map(w)
    comp = [c for c in range(a.dim) if c not in set(w.pivot_columns)]
    labels = tuple(f"[{a.basis_labels[c]}]" for c in comp)
    q = len(comp)
    sc = []
    for x in range(q):
        plane = []
        rx = sect.row(x)
        for y in range(q):
            plane.append(proj.apply_row(a.bracket(rx, sect.row(y))))
        sc.append(tuple(plane))
    quot = Algebra(a.field, labels, tuple(sc))
    proj_map = LinearMap(a, quot, proj).certified()
    return quot, proj_map


def direct_product(a: Algebra, b: Algebra) -> Algebra:
    if a.field != b.field:
        raise InputError("field mismatch in product")
    f = a.field
    n, m = a.dim, b.dim
    labels = tuple(f"({lab},0)" for lab in a.basis_labels) + \
             tuple(f"(0,{lab})" for lab in b.basis_labels)
    zero = f.zero
    sc = [[[zero] * (n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                sc[i][j][k] = a.sc[i][j][k]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                sc[n + i][n + j][n + k] = b.sc[i][j][k]
    return Algebra(f, labels,
                   tuple(tuple(tuple(row) for row in plane) for plane in sc))


def product_projections(p: Algebra, a: Algebra, b: Algebra):
    """The two projections of direct_product(a, b); certified by shape."""
    f = p.field
    rows1 = [unit_vector(f, a.dim, i) for i in range(a.dim)] + \
            [vec_zero(f, a.dim) for _ in range(b.dim)]
    rows2 = [vec_zero(f, b.dim) for _ in range(a.dim)] + \
            [unit_vector(f, b.dim, i) for i in range(b.dim)]
    p1 = LinearMap.from_rows(p, a, rows1).certified()
    p2 = LinearMap.from_rows(p, b, rows2).certified()
    return p1, p2


def product_injections(p: Algebra, a: Algebra, b: Algebra):
    f = p.field
    rows1 = [unit_vector(f, p.dim, i) for i in range(a.dim)]
    rows2 = [unit_vector(f, p.dim, a.dim + i) for i in range(b.dim)]
    i1 = LinearMap.from_rows(a, p, rows1).certified()
    i2 = LinearMap.from_rows(b, p, rows2).certified()
    return i1, i2


def restrict_to_subalgebra(a: Algebra, s: Subspace, label_prefix="s"):
    """View a bracket-closed subspace as an algebra; returns (sub, inclusion).

    The full space returns the algebra itself with the identity inclusion.
    """
    if s.ambient_dim != a.dim or s.field != a.field:
        raise InputError("subspace does not live in the algebra's space")
    if s.is_full():
        return a, identity_map(a)
    d = s.dim
    reps = s.basis.entries
    sc = []
    for x in range(d):
        plane = []
        for y in range(d):
            prod = a.bracket(reps[x], reps[y])
            if not s.contains(prod):
                raise InputError("subspace is not closed under the bracket")
            plane.append(s.coordinates_of(prod))
        sc.append(tuple(plane))
    labels = tuple(f"{label_prefix}{i + 1}" for i in range(d))
    sub = Algebra(a.field, labels, tuple(sc))
    incl = LinearMap(sub, a, s.basis).certified()
    return sub, incl


def fibre_product(f: LinearMap, g: LinearMap, label_prefix="t"):
    """Sub-algebra {(b, c) : f(b) = g(c)} of the direct product.

    Returns (P, p1, p2) with the two certified projections.
    """
    if f.codomain != g.codomain:
        raise InputError("fibre product requires a common codomain")
    fc, gc = f.certified(), g.certified()
    prod = direct_product(fc.domain, gc.domain)
    constraint = fc.matrix.vstack(gc.matrix.neg())
    sol = kernel(constraint)
    sub, incl = restrict_to_subalgebra(prod, sol, label_prefix)
    pr1, pr2 = product_projections(prod, fc.domain, gc.domain)
    return sub, incl.then(pr1), incl.then(pr2)


@dataclass(frozen=True)
class KernelPair:
    algebra: Algebra
    p0: LinearMap
    p1: LinearMap
    diagonal: LinearMap


def kernel_pair(f: LinearMap) -> KernelPair:
    """The pair of an extension with itself, plus the diagonal section."""
    P, p0, p1 = fibre_product(f, f)
    b = f.domain
    fld = b.field
    # coordinates of (e_i, e_i) inside the fibre-product subspace
    sol = kernel(f.matrix.vstack(f.matrix.neg()))
    rows = []
    for i in range(b.dim):
        e = unit_vector(fld, b.dim, i)
        rows.append(sol.coordinates_of(e + e) if not sol.is_full() else e + e)
    diag = LinearMap.from_rows(b, P, rows).certified()
    return KernelPair(P, p0, p1, diag)


def centre(a: Algebra) -> Subspace:
    """Exact solution set of [z, e_j] = 0 = [e_j, z] for all j."""
    f = a.field
    n = a.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.extend(a.sc[i][j])       # [e_i, e_j] coefficients
        for j in range(n):
            row.extend(a.sc[j][i])       # [e_j, e_i] coefficients
        rows.append(tuple(row))
    m = Matrix(f, n, 2 * n * n, tuple(rows))
    return kernel(m)


def algebras_equal_up_to_labels(a: Algebra, b: Algebra) -> bool:
    return a.field == b.field and a.dim == b.dim and a.sc == b.sc
