"""Universal central extensions of perfect objects, H1/H2, and comparisons.

For a (trivial-bracket)-perfect algebra A inside an ambient variety v, the
universal central extension is realised on the tensor square: quotient A (x) A
by the subspace spanned by the linearised laws of v, carry the bracket
[x(x)y, x'(x)y'] = [x,y] (x) [x',y'], and map down by multiplication.  The
construction is validated at runtime by an assertion battery (the quotient
satisfies v, the map is a central surjection, its kernel is central, the
domain is perfect); for law sets where any of that fails, build_uce aborts
instead of guessing.

H2 of a perfect object is defined operationally as the kernel of its
universal central extension; H1 is the reflection into trivial brackets.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .algebras import Algebra, LinearMap, centre, kernel_pair
from .errors import CheckFailed, InputError
from .extensions import (Extension, compose_extensions, is_central,
                         is_perfect, relative_commutator)
from .fields import Field
from .laws import (LEIB, LIE, VECT, Variety, reflect, reflect_map, satisfies,
                   verbal_subobject)
from .linalg import (Matrix, Subspace, image, kernel, quotient_map,
                     right_section, solve_row_system, unit_vector)


def multiplication_matrix(a: Algebra) -> Matrix:
    """The bracket as a linear map A (x) A -> A; row (i*n+j) is [e_i, e_j]."""
    n = a.dim
    rows = [a.sc[i][j] for i in range(n) for j in range(n)]
    return Matrix.from_rows_shaped(a.field, rows, n)


def cocycle_relations(a: Algebra, v: Variety) -> Subspace:
    """Linearisation of v's laws inside A (x) A.

    For each law and each basis tuple, sum coefficient * (left subtree
    value) (x) (right subtree value) over the law's terms.  Bilinear maps
    out of A that kill this subspace are exactly the 2-cocycles classifying
    central extensions of A inside v.  The span always sits in the kernel of
    the multiplication map (asserted), because the laws hold in a.
    """
    import itertools
    if not satisfies(a, v):
        raise InputError(f"algebra does not satisfy the variety {v.name}")
    f = a.field
    n = a.dim
    zero = f.zero
    add, mul = f.add, f.mul
    basis = [a.basis_vector(i) for i in range(n)]
    vecs = []
    for law in v.laws:
        for assignment in itertools.product(basis, repeat=law.degree):
            w = [zero] * (n * n)
            for coeff, term in law.terms:
                if term.is_leaf:
                    raise InputError(
                        "law with a bare-variable term cannot be linearised")
                lv = term.left.evaluate(a, assignment)
                rv = term.right.evaluate(a, assignment)
                c = f.from_int(coeff)
                for i, x in enumerate(lv):
                    if x == zero:
                        continue
                    cx = mul(c, x)
                    base = i * n
                    for j, y in enumerate(rv):
                        if y != zero:
                            w[base + j] = add(w[base + j], mul(cx, y))
            vecs.append(w)
    out = Subspace.from_vectors(f, n * n, vecs)
    mu = multiplication_matrix(a)
    for row in out.basis.entries:
        if any(x != zero for x in mu.apply_row(row)):
            raise CheckFailed("law linearisation escaped the multiplication kernel")
    return out


@dataclass(frozen=True)
class UceResult:
    u: Extension            # the universal central extension U -> A
    h2: Subspace            # kernel of u, the second homology of A
    h1_dim: int             # dimension of the trivial-bracket reflection of A
    construction_log: tuple

    @property
    def dim_u(self) -> int:
        return self.u.domain.dim

    @property
    def dim_h2(self) -> int:
        return self.h2.dim


def build_uce(a: Algebra, ambient: Variety) -> UceResult:
    """Universal central extension of a perfect algebra inside a variety.

    Perfectness means the bracket span is everything (the trivial-bracket
    reflection vanishes); centrality of the result is with respect to the
    trivial-bracket subvariety.
    """
    if not satisfies(a, ambient):
        raise InputError(f"algebra does not satisfy the variety {ambient.name}")
    if not is_perfect(a, VECT):
        raise InputError("object not perfect; universal central extension unavailable")
    f = a.field
    n = a.dim
    log = []

    w = cocycle_relations(a, ambient)
    proj, sect = quotient_map(w)
    qdim = n * n - w.dim
    labels = tuple(_tensor_labels(a, w))
    mu = multiplication_matrix(a)

    mu_reps = [mu.apply_row(sect.row(x)) for x in range(qdim)]
    sc = []
    for x in range(qdim):
        mx = mu_reps[x]
        plane = []
        for y in range(qdim):
            my = mu_reps[y]
            plane.append(proj.apply_row(_outer(f, mx, my)))
        sc.append(tuple(plane))
    U = Algebra(f, labels, tuple(sc))

    if not satisfies(U, ambient):
        raise CheckFailed(
            f"tensor construction left the variety {ambient.name}; aborting")
    log.append(f"construction satisfies {ambient.name}: ok")

    u_map = LinearMap(U, a, Matrix.from_rows_shaped(f, mu_reps, n)).certified()
    log.append("projection is a certified morphism: ok")
    if not u_map.is_surjective():
        raise CheckFailed("universal map is not surjective")
    log.append("projection is surjective: ok")

    ext = Extension.make(u_map, ambient, VECT)
    if not is_central(ext):
        raise CheckFailed("universal map is not central")
    log.append("projection is central: ok")
    if not is_perfect(U, VECT):
        raise CheckFailed("constructed domain is not perfect")
    log.append("domain is perfect: ok")

    h2 = ext.kernel.subspace
    if not centre(U).contains_subspace(h2):
        raise CheckFailed("kernel is not central in the constructed domain")
    log.append("kernel sits in the centre: ok")

    h1 = a.dim - verbal_subobject(a, VECT).subspace.dim
    return UceResult(ext, h2, h1, tuple(log))


def _tensor_labels(a: Algebra, w: Subspace):
    pivots = set(w.pivot_columns)
    n = a.dim
    for idx in range(n * n):
        if idx not in pivots:
            i, j = divmod(idx, n)
            yield f"{a.basis_labels[i]}*{a.basis_labels[j]}"


def _outer(f: Field, x, y):
    zero = f.zero
    mul = f.mul
    n = len(y)
    out = []
    for xi in x:
        if xi == zero:
            out.extend([zero] * n)
        else:
            out.extend(mul(xi, yj) if yj != zero else zero for yj in y)
    return tuple(out)


def perfect_h2_dims(a: Algebra, ambient: Variety):
    """(dim of the universal domain, dim of H2) without the full battery.

    Same construction as build_uce, using that the universal map is onto:
    dim U = dim(A)^2 - dim(relations), dim H2 = dim U - dim A.
    """
    if not is_perfect(a, VECT):
        raise InputError("object not perfect; H2 unavailable")
    w = cocycle_relations(a, ambient)
    dim_u = a.dim * a.dim - w.dim
    return dim_u, dim_u - a.dim


def lift_universal(r: UceResult, e: Extension) -> LinearMap:
    """The unique morphism from the universal central extension to any
    central extension of the same codomain.

    A linear section s of e picks representatives; x (x) y goes to
    [s(x), s(y)], which is well defined because e's kernel is central and
    the ambient laws hold in e's domain.
    """
    u_ext = r.u
    if e.codomain != u_ext.codomain:
        raise InputError("extension has a different codomain than the universal one")
    if e.coefficient != u_ext.coefficient:
        raise InputError("extension has a different coefficient variety")
    if not is_central(e):
        raise InputError("lift_universal needs a central extension")
    f = u_ext.f.matrix.field
    a = u_ext.codomain
    c_alg = e.domain
    n = a.dim
    sect_e = right_section(e.f.matrix)
    s_rows = sect_e.entries
    tensor_rows = [c_alg.bracket(s_rows[i], s_rows[j])
                   for i in range(n) for j in range(n)]
    tensor_map = Matrix.from_rows_shaped(f, tensor_rows, c_alg.dim)

    w = cocycle_relations(a, u_ext.ambient)
    zero = f.zero
    for row in w.basis.entries:
        if any(x != zero for x in tensor_map.apply_row(row)):
            raise CheckFailed("lift is not well defined on the relation subspace")

    _, sect_u = quotient_map(w)
    lift = LinearMap(u_ext.domain, c_alg, sect_u.mul(tensor_map)).certified()
    if lift.matrix.mul(e.f.matrix) != u_ext.f.matrix:
        raise CheckFailed("lift does not commute over the codomain")
    return lift


@dataclass(frozen=True)
class TheoremCheck:
    is_universal_certificate: bool
    h1_dim: int
    h2_dim: int | None
    theorem_applies: bool | None  # the ambient variety's (UCE) flag


def check_theorem_h1h2(e: Extension) -> TheoremCheck:
    """H1/H2 recognition data for a central extension's domain.

    The certificate (both vanish) recognises universality only in ambient
    varieties satisfying the composition condition; theorem_applies carries
    that flag so callers do not over-read the result elsewhere.
    """
    if e.coefficient != VECT:
        raise InputError("recognition check is implemented for the trivial-bracket coefficient")
    if not is_central(e):
        raise InputError("recognition check needs a central extension")
    dom = e.domain
    h1 = dom.dim - verbal_subobject(dom, VECT).subspace.dim
    applies = e.ambient.uce_condition
    if h1 != 0:
        return TheoremCheck(False, h1, None, applies)
    _, h2 = perfect_h2_dims(dom, e.ambient)
    return TheoremCheck(h2 == 0, h1, h2, applies)


def composite_universality(e_f: Extension, e_g: Extension) -> bool:
    """Whether the composite of two central extensions is universal, which
    happens exactly when the inner one is.

    Raises CheckFailed when the composite is not even central, which is a
    violation of the composition condition in the ambient variety.
    """
    if e_f.coefficient != VECT or e_g.coefficient != VECT:
        raise InputError("universality machinery runs over the trivial-bracket coefficient")
    if not (is_central(e_f) and is_central(e_g)):
        raise InputError("composite_universality needs two central extensions")
    composite = compose_extensions(e_f, e_g)
    if not is_central(composite):
        raise CheckFailed(
            "composition condition violated: composite of central extensions is not central")
    cert_inner = check_theorem_h1h2(e_g)
    cert_comp = check_theorem_h1h2(composite)
    if cert_inner.is_universal_certificate != cert_comp.is_universal_certificate:
        raise CheckFailed("universality certificates of composite and inner map disagree")
    return cert_inner.is_universal_certificate


@dataclass(frozen=True)
class UceViolation:
    trial: int
    outer: Extension  # f : B -> A
    inner: Extension  # g : C -> B
    composite_commutator_dim: int


def check_uce_condition(ambient: Variety, trials: int, dim_bound: int,
                        field: Field, seed: int,
                        inject_counterexample: bool = False) -> list:
    """Randomised search for failures of the composition condition.

    Generates composable pairs of central extensions over a perfect middle
    object and tests the composite for centrality.  With
    inject_counterexample the bundled non-associative pair runs as trial 0
    (only meaningful for the lawless ambient variety, where it always
    reports a violation).  Deterministic for a fixed seed.
    """
    from . import catalog, randgen
    violations = []
    if inject_counterexample:
        if ambient.name != "NAAlg":
            raise InputError("the bundled counterexample lives in the NAAlg ambient variety")
        chain = catalog.counterexample_chain(field)
        pair = (chain.ext_f, chain.ext_g)
        comm = relative_commutator(compose_extensions(*pair))
        if comm.dim != 0:
            violations.append(UceViolation(0, pair[0], pair[1], comm.dim))
    rng = Random(seed)
    for t in range(1, trials + 1):
        b = randgen.random_perfect_algebra(rng, ambient, field, dim_bound)
        outer = randgen.random_central_quotient(rng, b, ambient)
        inner = randgen.random_central_cocycle_extension(rng, b, ambient)
        comm = relative_commutator(compose_extensions(outer, inner))
        if comm.dim != 0:
            violations.append(UceViolation(t, outer, inner, comm.dim))
    return violations


@dataclass(frozen=True)
class NestedComparison:
    dim_h2_outer: int        # H2 in the larger ambient variety
    dim_h2_inner: int        # H2 in the smaller one
    dim_verbal: int          # verbal subobject of the outer universal domain
    reflection_is_universal: bool
    sequence_identity: bool
    refinement_identity: bool
    log: tuple

    @property
    def ok(self) -> bool:
        return (self.reflection_is_universal and self.sequence_identity
                and self.refinement_identity)


def nested_compare(b_obj: Algebra) -> NestedComparison:
    """Compare the universal central extensions of one object taken in the
    nested ambient varieties Leib > Lie.

    Checks that reflecting the outer universal extension onto the smaller
    variety yields the inner one, that the kernels fit the exact-sequence
    dimension identity, and that the connecting term equals the H2 of the
    inner universal domain taken in the outer variety.
    """
    if not satisfies(b_obj, LIE):
        raise InputError("nested comparison needs an algebra satisfying the Lie laws")
    if not is_perfect(b_obj, VECT):
        raise InputError("nested comparison needs a perfect algebra")
    log = []
    r_outer = build_uce(b_obj, LEIB)
    r_inner = build_uce(b_obj, LIE)
    log.append(f"outer universal domain dim = {r_outer.dim_u}, H2 dim = {r_outer.dim_h2}")
    log.append(f"inner universal domain dim = {r_inner.dim_u}, H2 dim = {r_inner.dim_h2}")

    u_outer = r_outer.u
    reflected_map = reflect_map(u_outer.f, LIE)
    reflected_ext = Extension.make(reflected_map, LIE, VECT)
    comparison = lift_universal(r_inner, reflected_ext)
    square = (comparison.domain.dim == comparison.codomain.dim
              and kernel(comparison.matrix).dim == 0)
    reflection_ok = square and comparison.matrix.mul(
        reflected_ext.f.matrix) == r_inner.u.f.matrix
    log.append(f"reflection of the outer extension is the inner one: "
               f"{'ok' if reflection_ok else 'FAILED'}")

    verbal_dim = verbal_subobject(u_outer.domain, LIE).subspace.dim
    seq_ok = r_outer.dim_h2 == verbal_dim + r_inner.dim_h2
    log.append(f"dim H2(outer) = dim verbal + dim H2(inner): "
               f"{r_outer.dim_h2} = {verbal_dim} + {r_inner.dim_h2}"
               f" {'ok' if seq_ok else 'FAILED'}")

    _, h2_refine = perfect_h2_dims(r_inner.u.domain, LEIB)
    refine_ok = verbal_dim == h2_refine
    log.append(f"dim verbal = dim H2(inner domain, outer variety): "
               f"{verbal_dim} = {h2_refine} {'ok' if refine_ok else 'FAILED'}")

    return NestedComparison(r_outer.dim_h2, r_inner.dim_h2, verbal_dim,
                            reflection_ok, seq_ok, refine_ok, tuple(log))
