"""Extensions (surjective morphisms) and their centrality theory.

An Extension packages a certified surjection with its kernel ideal, the
ambient variety both objects satisfy, and a coefficient subvariety V that
fixes the meaning of "central".  Centrality is decided by the relative
commutator [K,B]_V read off the kernel pair: the extension is V-central
exactly when that commutator vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import (Algebra, IdealWitness, LinearMap, certify_ideal,
                       fibre_product, identity_map, is_ideal, kernel_pair,
                       quotient_algebra, restrict_to_subalgebra)
from .errors import CheckFailed, InputError
from .laws import Variety, builtin_nesting_ok, reflect, reflect_map, satisfies, verbal_subobject
from .linalg import (Matrix, Subspace, image, kernel, right_section,
                     solve_row_system, unit_vector, vec_zero)


@dataclass(frozen=True)
class Extension:
    f: LinearMap
    kernel: IdealWitness
    ambient: Variety
    coefficient: Variety

    @staticmethod
    def make(f: LinearMap, ambient: Variety, coefficient: Variety) -> "Extension":
        fc = f.certified()
        if not fc.is_surjective():
            raise InputError("an extension must be surjective")
        if not builtin_nesting_ok(coefficient, ambient):
            raise InputError(
                f"coefficient variety {coefficient.name} does not sit inside {ambient.name}")
        if not satisfies(fc.domain, ambient):
            raise InputError(f"domain does not satisfy the ambient variety {ambient.name}")
        if not satisfies(fc.codomain, ambient):
            raise InputError(f"codomain does not satisfy the ambient variety {ambient.name}")
        ker = kernel(fc.matrix)
        witness = certify_ideal(fc.domain, ker)
        return Extension(fc, witness, ambient, coefficient)

    @property
    def domain(self) -> Algebra:
        return self.f.domain

    @property
    def codomain(self) -> Algebra:
        return self.f.codomain

    def with_coefficient(self, coefficient: Variety) -> "Extension":
        if not builtin_nesting_ok(coefficient, self.ambient):
            raise InputError(
                f"coefficient variety {coefficient.name} does not sit inside {self.ambient.name}")
        return Extension(self.f, self.kernel, self.ambient, coefficient)

    def __repr__(self):
        return (f"Extension({self.domain.dim} -> {self.codomain.dim} over "
                f"{self.f.matrix.field.name}, ambient {self.ambient.name}, "
                f"coefficient {self.coefficient.name})")


def identity_extension(a: Algebra, ambient: Variety, coefficient: Variety) -> Extension:
    return Extension.make(identity_map(a), ambient, coefficient)


def relative_commutator(e: Extension) -> Subspace:
    """The obstruction [K,B]_V to centrality, inside the domain.

    Computed on the kernel pair P of f: take the verbal subobject W of P for
    the coefficient variety, cut it with the kernel of the first projection,
    and push forward along the second projection.  The result is an ideal of
    the domain contained in the kernel (both asserted).
    """
    kp = kernel_pair(e.f)
    w = verbal_subobject(kp.algebra, e.coefficient).subspace
    ker_p0 = kernel(kp.p0.matrix)
    cut = w.intersect(ker_p0)
    vecs = [kp.p1.apply(row) for row in cut.basis.entries]
    out = Subspace.from_vectors(e.f.matrix.field, e.domain.dim, vecs)
    if not e.kernel.subspace.contains_subspace(out):
        raise CheckFailed("relative commutator escaped the kernel")
    if not is_ideal(e.domain, out):
        raise CheckFailed("relative commutator is not an ideal")
    return out


def is_central(e: Extension) -> bool:
    return relative_commutator(e).dim == 0


def is_trivial(e: Extension) -> bool:
    """Whether the naturality square with the coefficient reflector is a
    pullback: b |-> (f(b), eta(b)) must be a bijection onto the fibre
    product of the codomain with the reflected domain."""
    v = e.coefficient
    dom, cod = e.domain, e.codomain
    _, eta_dom = reflect(dom, v)
    _, eta_cod = reflect(cod, v)
    reflected = reflect_map(e.f, v)
    comparison = _comparison_matrix(e.f, eta_dom)
    # fibre product of eta_cod with reflected, as a subspace
    fibre = kernel(eta_cod.matrix.vstack(reflected.matrix.neg()))
    img = image(comparison)
    if not fibre.contains_subspace(img):
        raise CheckFailed("comparison map landed outside the fibre product")
    injective = kernel(comparison).dim == 0
    return injective and fibre.dim == dom.dim


def _comparison_matrix(f: LinearMap, eta_dom: LinearMap) -> Matrix:
    """Matrix of b |-> (f(b), eta(b)) into codomain + reflected domain."""
    rows = []
    for i in range(f.domain.dim):
        e = unit_vector(f.matrix.field, f.domain.dim, i)
        rows.append(tuple(f.apply(e)) + tuple(eta_dom.apply(e)))
    return Matrix.from_rows_shaped(f.matrix.field, rows,
                                   f.codomain.dim + eta_dom.codomain.dim)


def is_normal(e: Extension) -> bool:
    """Triviality of a kernel-pair projection, viewed as an extension."""
    kp = kernel_pair(e.f)
    proj_ext = Extension.make(kp.p0, e.ambient, e.coefficient)
    return is_trivial(proj_ext)


def centralise(e: Extension):
    """Quotient away the relative commutator; returns (central part, quotient map).

    The returned extension is central (asserted) and centralising twice is
    the identity up to the isomorphism witnessed by the quotient map.
    """
    w = relative_commutator(e)
    quot_alg, proj = quotient_algebra(e.domain, certify_ideal(e.domain, w))
    sect = right_section(proj.matrix)
    induced = LinearMap(quot_alg, e.codomain, sect.mul(e.f.matrix)).certified()
    if proj.matrix.mul(induced.matrix) != e.f.matrix:
        raise CheckFailed("centralisation does not factor the original map")
    out = Extension.make(induced, e.ambient, e.coefficient)
    if not is_central(out):
        raise CheckFailed("centralisation failed to produce a central extension")
    return out, proj


def pullback_extension(e: Extension, g: LinearMap) -> Extension:
    """Pullback of e along a certified map into its codomain.

    The result is the projection B x_A C -> C.  Centrality is preserved
    (asserted whenever e is central).
    """
    if g.codomain != e.codomain:
        raise InputError("pullback requires a map into the extension's codomain")
    gc = g.certified()
    if not satisfies(gc.domain, e.ambient):
        raise InputError("pullback base does not satisfy the ambient variety")
    P, p_b, p_c = fibre_product(e.f, gc)
    out = Extension.make(p_c, e.ambient, e.coefficient)
    if is_central(e) and not is_central(out):
        raise CheckFailed("pullback of a central extension came out non-central")
    return out


def compose_extensions(outer: Extension, inner: Extension) -> Extension:
    """The composite extension inner-then-outer (domain of inner onto
    codomain of outer)."""
    if inner.codomain != outer.domain:
        raise InputError("extensions do not compose: codomain/domain mismatch")
    if inner.ambient != outer.ambient or inner.coefficient != outer.coefficient:
        raise InputError("extensions must share ambient and coefficient varieties")
    return Extension.make(inner.f.then(outer.f), outer.ambient, outer.coefficient)


def sub_extension(e: Extension, b_sub: Subspace) -> Extension:
    """Restriction of the extension to a bracket-closed subspace that still
    covers the codomain.  A sub-extension of a central extension is central
    (asserted)."""
    sub, incl = restrict_to_subalgebra(e.domain, b_sub)
    restricted = incl.then(e.f)
    if not restricted.is_surjective():
        raise InputError("subspace does not surject onto the codomain")
    out = Extension.make(restricted, e.ambient, e.coefficient)
    if is_central(e) and not is_central(out):
        raise CheckFailed("sub-extension of a central extension came out non-central")
    return out


def is_perfect(a: Algebra, v: Variety) -> bool:
    """Whether the verbal subobject for v is everything (zero reflection)."""
    return verbal_subobject(a, v).subspace.is_full()


def perfect_subobject(e: Extension) -> Extension:
    """Restrict a central extension of a perfect object to the verbal
    subobject of its domain; the result has a perfect domain (asserted)."""
    if not is_perfect(e.codomain, e.coefficient):
        raise InputError("perfect_subobject needs a codomain perfect for the coefficient variety")
    if not is_central(e):
        raise InputError("perfect_subobject needs a central extension")
    verbal = verbal_subobject(e.domain, e.coefficient).subspace
    out = sub_extension(e, verbal)
    if not is_perfect(out.domain, e.coefficient):
        raise CheckFailed("restricted domain is not perfect")
    return out


def split_trivial_check(e: Extension, s: LinearMap) -> bool:
    """For a split epimorphism, triviality and centrality agree; returns
    is_trivial(e) after asserting the agreement."""
    sc = s.certified()
    if sc.domain != e.codomain or sc.codomain != e.domain:
        raise InputError("section has the wrong endpoints")
    if sc.matrix.mul(e.f.matrix) != Matrix.identity(e.f.matrix.field, e.codomain.dim):
        raise InputError("map is not a section of the extension")
    t = is_trivial(e)
    c = is_central(e)
    if t != c:
        raise CheckFailed("split epimorphism with trivial != central")
    return t


def lift_along_trivial(a_map: LinearMap, e: Extension) -> LinearMap:
    """The unique factorisation of a map out of a perfect object through a
    trivial extension.

    Built through the pullback square: a perfect domain reflects to zero, so
    (a_map, 0) lands in the fibre product, and the comparison bijection of
    the trivial extension sends it back into the extension's domain.
    """
    if not is_trivial(e):
        raise InputError("lift_along_trivial needs a trivial extension")
    if a_map.codomain != e.codomain:
        raise InputError("map does not land in the extension's codomain")
    if not is_perfect(a_map.domain, e.coefficient):
        raise InputError("lift_along_trivial needs a perfect source")
    ac = a_map.certified()
    v = e.coefficient
    _, eta_dom = reflect(e.domain, v)
    comparison = _comparison_matrix(e.f, eta_dom)
    # each basis image (a_map(e_i), 0) has a unique comparison preimage
    fld = e.f.matrix.field
    pad = vec_zero(fld, eta_dom.codomain.dim)
    targets = [tuple(ac.apply(unit_vector(fld, ac.domain.dim, i))) + pad
               for i in range(ac.domain.dim)]
    rows = solve_row_system(comparison, targets)
    lift = LinearMap.from_rows(ac.domain, e.domain, rows).certified()
    if lift.matrix.mul(e.f.matrix) != ac.matrix:
        raise CheckFailed("lift does not factor the given map")
    return lift


def extension_isomorphism_witness(phi: LinearMap, e1: Extension, e2: Extension) -> bool:
    """Whether phi is an isomorphism of extensions from e1 to e2: a certified
    invertible map of domains commuting with the two maps to the shared
    codomain."""
    if e1.codomain != e2.codomain:
        return False
    if phi.domain != e1.domain or phi.codomain != e2.domain:
        return False
    try:
        pc = phi.certified()
    except CheckFailed:
        return False
    if phi.domain.dim != phi.codomain.dim or kernel(pc.matrix).dim != 0:
        return False
    return pc.matrix.mul(e2.f.matrix) == e1.f.matrix


def extension_quotient_witness(pair, e1: Extension, e2: Extension) -> bool:
    """Whether (b, a) is a surjective morphism of extensions e1 -> e2."""
    b, a = pair
    try:
        bc, ac = b.certified(), a.certified()
    except CheckFailed:
        return False
    if bc.domain != e1.domain or bc.codomain != e2.domain:
        return False
    if ac.domain != e1.codomain or ac.codomain != e2.codomain:
        return False
    if not (bc.is_surjective() and ac.is_surjective()):
        return False
    return bc.matrix.mul(e2.f.matrix) == e1.f.matrix.mul(ac.matrix)
