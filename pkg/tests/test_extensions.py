"""Centrality, triviality, normality, centralisation and friends."""

import pytest

from centrex.algebras import (Algebra, LinearMap, direct_product, identity_map,
                              kernel_pair, product_injections,
                              product_projections, zero_map)
from centrex.catalog import counterexample_chain, nonassoc_b, sl2
from centrex.errors import CheckFailed, InputError
from centrex.extensions import (Extension, centralise, compose_extensions,
                                extension_isomorphism_witness,
                                identity_extension, is_central, is_normal,
                                is_perfect, is_trivial, lift_along_trivial,
                                perfect_subobject, pullback_extension,
                                relative_commutator, split_trivial_check,
                                sub_extension)
from centrex.fields import GF, QQ
from centrex.laws import LEIB, LIE, NAALG, VECT
from centrex.linalg import Matrix, Subspace, image, kernel

from oracles import direct_commutator_vect


@pytest.fixture(scope="module")
def chain():
    return counterexample_chain()


@pytest.fixture(scope="module")
def composite(chain):
    return compose_extensions(chain.ext_f, chain.ext_g)


def test_extension_construction_checks(chain):
    non_surjective = LinearMap.from_rows(chain.a, chain.a, [[0, 0], [0, 0]])
    with pytest.raises(InputError):
        Extension.make(non_surjective, NAALG, VECT)
    with pytest.raises(InputError):
        Extension.make(chain.f, VECT, NAALG)   # coefficient outside ambient
    with pytest.raises(InputError):
        Extension.make(chain.f, LIE, VECT)     # domain is not a Lie algebra


def test_relative_commutator_of_central_by_construction():
    # kernel inside the centre: quotient of B by <b1>
    b = nonassoc_b()
    from centrex.algebras import certify_ideal, quotient_algebra
    _, proj = quotient_algebra(b, certify_ideal(
        b, Subspace.from_vectors(QQ, 3, [[1, 0, 0]])))
    e = Extension.make(proj, NAALG, VECT)
    assert relative_commutator(e).is_zero()


def test_relative_commutator_examples(chain, composite):
    assert relative_commutator(chain.ext_f).is_zero()
    w = relative_commutator(composite)
    assert w.dim == 1
    assert w.contains([1, 0, 0, 0])    # the obstruction lands on c1
    assert composite.kernel.subspace.contains_subspace(w)


def test_is_central_examples(chain, composite):
    assert is_central(chain.ext_f)
    assert is_central(chain.ext_g)
    assert not is_central(composite)


def test_central_iff_normal_on_the_chain(chain, composite):
    for e in (chain.ext_f, chain.ext_g, composite):
        assert is_central(e) == is_normal(e)
    ide = identity_extension(chain.a, NAALG, VECT)
    assert is_normal(ide)
    assert not is_normal(composite)


def test_is_trivial_examples(chain):
    assert is_trivial(identity_extension(chain.b, NAALG, VECT))
    # product projection with an abelian factor and Vect coefficient
    v = Algebra.abelian(QQ, ("v1",))
    prod = direct_product(chain.a, v)
    p1, _ = product_projections(prod, chain.a, v)
    assert is_trivial(Extension.make(p1, NAALG, VECT))
    # both reflections vanish, the fibre product is A, and f is not injective
    assert not is_trivial(chain.ext_f)


def test_trivial_implies_central(chain):
    v = Algebra.abelian(QQ, ("v1",))
    prod = direct_product(chain.a, v)
    p1, _ = product_projections(prod, chain.a, v)
    e = Extension.make(p1, NAALG, VECT)
    assert is_trivial(e) and is_central(e)


def test_lawless_coefficient_makes_everything_trivial(chain):
    e = Extension.make(chain.f, NAALG, NAALG)
    assert is_trivial(e)


def test_centralise_central_is_isomorphic_copy(chain):
    out, quot = centralise(chain.ext_f)
    assert extension_isomorphism_witness(quot, chain.ext_f, out)


def test_centralise_composite(chain, composite):
    out, quot = centralise(composite)
    assert out.domain.dim == 3           # C modulo the 1-dimensional commutator
    assert is_central(out)
    assert quot.then(out.f).matrix == composite.f.matrix
    again, quot2 = centralise(out)
    assert extension_isomorphism_witness(quot2, out, again)


def test_centralise_abelian_onto_zero():
    b = Algebra.abelian(QQ, ("x", "y"))
    e = Extension.make(zero_map(b, Algebra.zero_algebra(QQ)), NAALG, VECT)
    out, quot = centralise(e)
    assert extension_isomorphism_witness(quot, e, out)


def test_pullback_along_identity(chain):
    pb = pullback_extension(chain.ext_f, identity_map(chain.a))
    assert pb.domain.dim == chain.b.dim
    assert is_central(pb)


def test_pullback_requires_matching_codomain(chain):
    with pytest.raises(InputError):
        pullback_extension(chain.ext_f, identity_map(chain.b))


def test_compose_shape_checks(chain):
    with pytest.raises(InputError):
        compose_extensions(chain.ext_g, chain.ext_f)


def test_sub_extension_diagonal_is_isomorphic_to_f(chain):
    kp = kernel_pair(chain.f)
    proj_ext = Extension.make(kp.p0, NAALG, VECT)
    comp = compose_extensions(chain.ext_f, proj_ext)
    diag = image(kp.diagonal.matrix)
    se = sub_extension(comp, diag)
    # the diagonal section witnesses the isomorphism with f
    witness_rows = []
    for i in range(chain.b.dim):
        witness_rows.append(
            Subspace.from_vectors(QQ, kp.algebra.dim, diag.basis.entries)
            .coordinates_of(kp.diagonal.matrix.row(i)))
    witness = LinearMap.from_rows(chain.b, se.domain, witness_rows)
    assert extension_isomorphism_witness(witness, chain.ext_f, se)


def test_sub_extension_needs_full_image(chain):
    # the centre of B maps to zero, not onto A
    with pytest.raises(InputError):
        sub_extension(chain.ext_f, Subspace.from_vectors(QQ, 3, [[1, 0, 0]]))


def test_is_perfect_cases(chain):
    assert is_perfect(chain.b, VECT)
    assert is_perfect(Algebra.zero_algebra(QQ), VECT)
    assert not is_perfect(Algebra.abelian(QQ, ("x",)), VECT)


def test_perfect_subobject_cases(chain):
    # perfect domain already: unchanged
    ps = perfect_subobject(chain.ext_f)
    assert ps.domain.dim == chain.b.dim
    assert ps.f.matrix == chain.ext_f.f.matrix
    # B x V -> A restricts to B -> A since the verbal subobject of B x V is B x 0
    v = Algebra.abelian(QQ, ("v1",))
    prod = direct_product(chain.b, v)
    p1, _ = product_projections(prod, chain.b, v)
    e = Extension.make(p1.then(chain.f), NAALG, VECT)
    restricted = perfect_subobject(e)
    assert restricted.domain.dim == chain.b.dim
    assert is_perfect(restricted.domain, VECT)


def test_perfect_subobject_preconditions(chain, composite):
    with pytest.raises(InputError):
        perfect_subobject(composite)       # not central
    v = Algebra.abelian(QQ, ("v1",))
    e = Extension.make(zero_map(v, Algebra.zero_algebra(QQ)), NAALG, VECT)
    ok = perfect_subobject(e)              # codomain zero is perfect
    assert ok.domain.dim == 0


def test_split_trivial_check(chain):
    ide = identity_extension(chain.b, NAALG, VECT)
    assert split_trivial_check(ide, identity_map(chain.b))
    v = Algebra.abelian(QQ, ("v1",))
    prod = direct_product(chain.a, v)
    p1, _ = product_projections(prod, chain.a, v)
    i1, _ = product_injections(prod, chain.a, v)
    assert split_trivial_check(Extension.make(p1, NAALG, VECT), i1)
    with pytest.raises(InputError):
        split_trivial_check(Extension.make(p1, NAALG, VECT), zero_map(chain.a, prod))


def test_lift_along_trivial_cases(chain):
    v = Algebra.abelian(QQ, ("v1",))
    prod = direct_product(chain.a, v)
    p1, _ = product_projections(prod, chain.a, v)
    e = Extension.make(p1, NAALG, VECT)
    # zero map lifts to zero
    z = zero_map(chain.b, chain.a)
    assert lift_along_trivial(z, e).matrix.is_zero()
    # identity extension lifts to the map itself
    ide = identity_extension(chain.a, NAALG, VECT)
    assert lift_along_trivial(chain.f, ide).matrix == chain.f.matrix
    # product case: the lift is (f, 0), forced by perfectness of B
    lift = lift_along_trivial(chain.f, e)
    expected = Matrix.from_rows(QQ, [list(chain.f.matrix.row(i)) + [0]
                                     for i in range(chain.b.dim)])
    assert lift.matrix == expected
    assert lift.then(e.f).matrix == chain.f.matrix


def test_lift_along_trivial_preconditions(chain):
    with pytest.raises(InputError):
        lift_along_trivial(chain.f, chain.ext_f)     # f is not trivial
    ide = identity_extension(chain.a, NAALG, VECT)
    v = Algebra.abelian(QQ, ("x",))
    with pytest.raises(InputError):
        lift_along_trivial(zero_map(v, chain.a), ide)  # source not perfect


def test_degenerate_extension_onto_zero(chain):
    e = Extension.make(zero_map(chain.b, Algebra.zero_algebra(QQ)), NAALG, VECT)
    assert e.kernel.subspace.is_full()
    assert not is_central(e)    # the kernel is all of B, far from central
    assert is_central(compose_extensions(
        e, identity_extension(chain.b, NAALG, VECT))) == is_central(e)


def test_relative_commutator_matches_direct_formula(chain, composite):
    for e in (chain.ext_f, chain.ext_g, composite):
        assert relative_commutator(e) == direct_commutator_vect(e)


def test_mod5_chain_behaves_identically():
    ch5 = counterexample_chain(GF(5))
    comp = compose_extensions(ch5.ext_f, ch5.ext_g)
    assert is_central(ch5.ext_f)
    assert is_central(ch5.ext_g)
    assert not is_central(comp)
    assert relative_commutator(comp).dim == 1
