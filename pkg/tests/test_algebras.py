"""Structure-constant algebras, morphisms, ideals, products, quotients."""

import random

import pytest

from centrex.algebras import (Algebra, LinearMap, algebras_equal_up_to_labels,
                              centre, certify_ideal, direct_product,
                              fibre_product, ideal_generated, identity_map,
                              is_ideal, is_morphism, kernel_pair,
                              quotient_algebra, restrict_to_subalgebra,
                              zero_map)
from centrex.catalog import counterexample_chain, nonassoc_a, nonassoc_b, nonassoc_c
from centrex.errors import CheckFailed, InputError
from centrex.fields import GF, QQ
from centrex.linalg import Matrix, Subspace, kernel


@pytest.fixture(scope="module")
def chain():
    return counterexample_chain()


def test_bracket_table(chain):
    b = chain.b
    # [b2,b2] = b1
    assert b.bracket((0, 1, 0), (0, 1, 0)) == (1, 0, 0)
    # bilinearity: anything against zero dies
    assert b.bracket((1, 2, 3), (0, 0, 0)) == (0, 0, 0)
    # [b3, b2+b3] = b3 + b2, expanded bilinearly from the table
    assert b.bracket((0, 0, 1), (0, 1, 1)) == (0, 1, 1)


def test_is_morphism(chain):
    assert is_morphism(identity_map(chain.b))
    assert is_morphism(chain.f)
    # swapping the images of b2 and b3 breaks multiplicativity:
    # [b3,b2] = b3 would need [a1,a2] = a1, but [a1,a2] = 0
    bad = LinearMap.from_rows(chain.b, chain.a, [[0, 0], [0, 1], [1, 0]])
    assert not is_morphism(bad)
    with pytest.raises(CheckFailed):
        bad.certified()


def test_certified_composition_is_associative(chain):
    f, g = chain.f, chain.g
    h = zero_map(chain.a, Algebra.zero_algebra(QQ))
    left = g.then(f).then(h)
    right = g.then(f.then(h))
    assert left.matrix == right.matrix
    assert left.morphism_certified and right.morphism_certified


def test_ideal_generated_trivial_cases(chain):
    c = chain.c
    zero = Subspace.zero(QQ, 4)
    assert ideal_generated(c, zero).subspace.is_zero()
    full = Subspace.full(QQ, 4)
    assert ideal_generated(c, full).subspace.is_full()


def test_ideal_generated_two_rounds(chain):
    # starting from <c2>: [c3,c2] = c1 joins, then everything brackets to zero
    c = chain.c
    s = Subspace.from_vectors(QQ, 4, [[0, 1, 0, 0]])
    w = ideal_generated(c, s)
    assert w.closure_certified
    assert w.subspace == Subspace.from_vectors(QQ, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])


def test_ideal_closure_operator_properties():
    rng = random.Random(5)
    for field in (QQ, GF(5)):
        for _ in range(40):
            n = rng.randint(0, 5)
            products = {}
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        if rng.random() < 0.3:
                            products[(i, j, k)] = rng.randint(-2, 2)
            a = Algebra.from_products(field, tuple(f"g{i}" for i in range(n)), products)
            s = Subspace.from_vectors(
                field, n, [[rng.randint(-2, 2) for _ in range(n)]
                           for _ in range(rng.randint(0, 2))])
            t = s.sum(Subspace.from_vectors(
                field, n, [[rng.randint(-2, 2) for _ in range(n)]
                           for _ in range(rng.randint(0, 1))]))
            w_s = ideal_generated(a, s).subspace
            w_t = ideal_generated(a, t).subspace
            assert w_s.contains_subspace(s)                 # extensive
            assert w_t.contains_subspace(w_s)               # monotone (s <= t)
            assert ideal_generated(a, w_s).subspace == w_s  # idempotent
            assert is_ideal(a, w_s)


def test_quotient_by_zero_and_whole(chain):
    b = chain.b
    q, proj = quotient_algebra(b, certify_ideal(b, Subspace.zero(QQ, 3)))
    assert q == b
    assert proj.matrix == Matrix.identity(QQ, 3)
    q2, proj2 = quotient_algebra(b, certify_ideal(b, Subspace.full(QQ, 3)))
    assert q2.dim == 0
    assert proj2.is_surjective()


def test_quotient_requires_certified_ideal(chain):
    with pytest.raises(InputError):
        quotient_algebra(chain.b, type("W", (), {
            "closure_certified": False, "subspace": Subspace.zero(QQ, 3)})())


def test_quotient_of_b_matches_a(chain):
    # B / <b1> has the same table as A under [b2] -> a1, [b3] -> a2
    b = chain.b
    ideal = certify_ideal(b, Subspace.from_vectors(QQ, 3, [[1, 0, 0]]))
    q, proj = quotient_algebra(b, ideal)
    assert q.dim == 2
    assert algebras_equal_up_to_labels(q, chain.a)
    assert kernel(proj.matrix) == ideal.subspace


def test_direct_product_and_projections(chain):
    p = direct_product(chain.a, chain.b)
    assert p.dim == 5
    # block brackets: ((a2,0),(a1,0)) -> ([a2,a1], 0) = (a2, 0)
    u = (0, 1, 0, 0, 0)
    v = (1, 0, 0, 0, 0)
    assert p.bracket(u, v) == (0, 1, 0, 0, 0)


def test_fibre_product_of_identities(chain):
    a = chain.a
    P, p1, p2 = fibre_product(identity_map(a), identity_map(a))
    assert P.dim == a.dim            # the diagonal
    assert p1.matrix.mul(identity_map(a).matrix) == p2.matrix


def test_fibre_product_projections_commute(chain):
    P, p1, p2 = fibre_product(chain.f, chain.f)
    assert p1.then(chain.f).matrix == p2.then(chain.f).matrix
    assert p1.morphism_certified and p2.morphism_certified


def test_kernel_pair_dimensions(chain):
    kp = kernel_pair(chain.f)
    assert kp.algebra.dim == 2 * chain.b.dim - chain.a.dim  # 4
    # diagonal splits both projections
    assert kp.diagonal.then(kp.p0).matrix == identity_map(chain.b).matrix
    assert kp.diagonal.then(kp.p1).matrix == identity_map(chain.b).matrix


def test_kernel_pair_of_map_to_zero(chain):
    b = chain.b
    to_zero = zero_map(b, Algebra.zero_algebra(QQ))
    kp = kernel_pair(to_zero)
    assert kp.algebra.dim == 2 * b.dim   # everything identified: B x B


def test_fibre_product_codomain_mismatch(chain):
    with pytest.raises(InputError):
        fibre_product(chain.f, chain.g)


def test_centre_cases(chain):
    assert centre(Algebra.abelian(QQ, ("x", "y"))).is_full()
    assert centre(chain.b) == Subspace.from_vectors(QQ, 3, [[1, 0, 0]])
    assert centre(chain.c) == Subspace.from_vectors(QQ, 4, [[1, 0, 0, 0]])


def test_restrict_to_subalgebra(chain):
    b = chain.b
    # <b1> is closed (brackets vanish)
    sub, incl = restrict_to_subalgebra(b, Subspace.from_vectors(QQ, 3, [[1, 0, 0]]))
    assert sub.dim == 1
    assert incl.morphism_certified
    # <b2> is not closed: [b2,b2] = b1
    with pytest.raises(InputError):
        restrict_to_subalgebra(b, Subspace.from_vectors(QQ, 3, [[0, 1, 0]]))


def test_morphism_multiplicativity_invariant():
    rng = random.Random(17)
    chain = counterexample_chain()
    maps = [chain.f, chain.g, identity_map(chain.b)]
    for f in maps:
        fc = f.certified()
        a, b = fc.domain, fc.codomain
        for i in range(a.dim):
            for j in range(a.dim):
                ei, ej = a.basis_vector(i), a.basis_vector(j)
                assert fc.apply(a.bracket(ei, ej)) == \
                    b.bracket(fc.apply(ei), fc.apply(ej))
