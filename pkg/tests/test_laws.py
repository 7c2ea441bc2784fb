"""Law DSL, variety membership, verbal subobjects and reflections."""

import random

import pytest

from centrex.algebras import Algebra, algebras_equal_up_to_labels, identity_map, zero_map
from centrex.catalog import counterexample_chain, leibniz_line, sl2, so3
from centrex.errors import InputError, LawSyntaxError, NonMultilinearError
from centrex.fields import GF, QQ
from centrex.laws import (LEIB, LIE, NAALG, VECT, Law, Variety, parse_law,
                          reflect, reflect_map, satisfies, variety_by_name,
                          verbal_subobject)
from centrex.linalg import Subspace


def test_parse_simple_bracket():
    law = parse_law("[x1,x2]")
    assert law.degree == 2
    assert len(law.terms) == 1
    assert str(law) == "[x1,x2]"


def test_parse_leibniz_law():
    law = parse_law("[[x1,x2],x3] - [[x1,x3],x2] - [x1,[x2,x3]]")
    assert law.degree == 3
    assert [c for c, _ in law.terms] == [1, -1, -1]


def test_parse_coefficients_and_signs():
    law = parse_law("2[x1,x2] + [x2,x1]")
    assert [c for c, _ in law.terms] == [2, 1]
    law2 = parse_law("-[x1,x2]+3[x2,x1]")
    assert [c for c, _ in law2.terms] == [-1, 3]


def test_parse_roundtrips_through_str():
    for src in ("[x1,x2]",
                "[[x1,x2],x3] - [[x1,x3],x2] - [x1,[x2,x3]]",
                "-2[x1,[x2,x3]] + [x2,[x1,x3]]"):
        law = parse_law(src)
        assert parse_law(str(law)) == law


def test_parse_rejects_repeated_variable():
    with pytest.raises(NonMultilinearError):
        parse_law("[x1,x1]")


def test_parse_rejects_missing_variable():
    with pytest.raises(NonMultilinearError):
        parse_law("[x1,x3]")


def test_parse_rejects_mixed_degree():
    with pytest.raises(NonMultilinearError):
        parse_law("[x1,x2] + [x1,[x2,x3]]")


def test_parse_syntax_errors_carry_positions():
    with pytest.raises(LawSyntaxError) as err:
        parse_law("[x1,x2")
    assert err.value.position == 6
    with pytest.raises(LawSyntaxError):
        parse_law("[x1 x2]")
    with pytest.raises(LawSyntaxError):
        parse_law("x0")
    with pytest.raises(LawSyntaxError):
        parse_law("")
    with pytest.raises(InputError):
        parse_law("0[x1,x2]")


def test_builtin_varieties():
    assert variety_by_name("NAAlg") is NAALG
    assert NAALG.is_lawless
    assert len(LIE.laws) == 2
    with pytest.raises(InputError):
        variety_by_name("Assoc")


def test_satisfies_basic():
    chain = counterexample_chain()
    assert satisfies(chain.b, NAALG)
    assert not satisfies(chain.b, VECT)      # [b2,b2] = b1 != 0
    assert satisfies(Algebra.abelian(QQ, ("x",)), VECT)


def test_cross_product_is_lie():
    # brute force over all 27 triples happens inside satisfies
    assert satisfies(so3(), LIE)
    assert satisfies(sl2(), LIE)
    assert satisfies(sl2(GF(5)), LIE)


def test_lie_algebras_satisfy_leibniz():
    assert satisfies(so3(), LEIB)
    assert satisfies(sl2(), LEIB)


def test_leibniz_line_is_leibniz_not_lie():
    a = leibniz_line()
    assert satisfies(a, LEIB)
    assert not satisfies(a, LIE)


def test_characteristic_two_rejected_for_lie():
    a = Algebra.abelian(GF(2), ("x",))
    with pytest.raises(InputError):
        satisfies(a, LIE)
    assert satisfies(a, LEIB)    # Leibniz has no characteristic restriction


def test_verbal_subobject_member_gives_zero():
    assert verbal_subobject(sl2(), LIE).subspace.is_zero()
    assert verbal_subobject(Algebra.abelian(QQ, ("x", "y")), VECT).subspace.is_zero()


def test_verbal_subobject_perfect_gives_everything():
    chain = counterexample_chain()
    assert verbal_subobject(chain.b, VECT).subspace.is_full()


def test_verbal_subobject_leibniz_line():
    # antisymmetrised bracket values span e2, which brackets to zero
    a = leibniz_line()
    w = verbal_subobject(a, LIE)
    assert w.subspace == Subspace.from_vectors(QQ, 2, [[0, 1]])


def test_verbal_vect_matches_bracket_span_closure():
    # cross-check: the Vect verbal subobject is the ideal generated by all
    # products of basis vectors
    from centrex.algebras import ideal_generated
    rng = random.Random(9)
    for field in (QQ, GF(5)):
        for _ in range(40):
            n = rng.randint(0, 4)
            products = {}
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        if rng.random() < 0.35:
                            products[(i, j, k)] = rng.randint(-2, 2)
            a = Algebra.from_products(field, tuple(f"g{i}" for i in range(n)), products)
            direct = ideal_generated(a, a.bracket_span()).subspace
            assert verbal_subobject(a, VECT).subspace == direct


def test_reflect_member_is_identity():
    a = sl2()
    q, eta = reflect(a, LIE)
    assert q == a
    assert eta.matrix == identity_map(a).matrix


def test_reflect_perfect_to_zero():
    chain = counterexample_chain()
    q, eta = reflect(chain.b, VECT)
    assert q.dim == 0
    assert eta.is_surjective()


def test_reflect_leibniz_line_to_lie():
    q, eta = reflect(leibniz_line(), LIE)
    assert q.dim == 1
    assert algebras_equal_up_to_labels(q, Algebra.abelian(QQ, ("z",)))


def test_reflect_map_identity_and_zero():
    chain = counterexample_chain()
    rid = reflect_map(identity_map(chain.c), VECT)
    assert rid.matrix == identity_map(rid.domain).matrix
    z = zero_map(chain.b, chain.b)
    rz = reflect_map(z, VECT)
    assert rz.matrix.is_zero()


def test_reflect_map_between_perfect_objects():
    chain = counterexample_chain()
    rf = reflect_map(chain.f, VECT)
    assert rf.domain.dim == 0 and rf.codomain.dim == 0


def test_reflect_map_naturality_and_surjectivity():
    chain = counterexample_chain()
    for v in (VECT, LEIB, LIE):
        for f in (chain.f, chain.g):
            if v is LIE and not satisfies(f.domain, LEIB):
                continue
            rf = reflect_map(f, v)
            _, eta_dom = reflect(f.domain, v)
            _, eta_cod = reflect(f.codomain, v)
            assert eta_dom.matrix.mul(rf.matrix) == f.matrix.mul(eta_cod.matrix)
            assert rf.is_surjective()   # f itself is surjective here


def test_reflect_map_functorial_on_composite():
    chain = counterexample_chain()
    gf = chain.g.then(chain.f)
    for v in (VECT, LEIB):
        lhs = reflect_map(gf, v)
        rhs = reflect_map(chain.g, v).then(reflect_map(chain.f, v))
        assert lhs.matrix == rhs.matrix


def test_builtin_chain_nesting_on_samples():
    # coefficient laws imply ambient laws along Vect < Lie < Leib < NAAlg,
    # checked on the catalog algebras
    samples = [sl2(), so3(), leibniz_line(), Algebra.abelian(QQ, ("x",))]
    chain_order = [VECT, LIE, LEIB, NAALG]
    for a in samples:
        for i, small in enumerate(chain_order):
            for big in chain_order[i + 1:]:
                if satisfies(a, small):
                    assert satisfies(a, big)
