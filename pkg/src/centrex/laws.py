"""Multilinear bracket laws, a small textual DSL, and Birkhoff subvarieties.

A law is an integer combination of bracket trees in variables x1..x9, each
variable occurring exactly once per term (multilinearity).  Because laws are
multilinear, an algebra satisfies a law as soon as it vanishes on all tuples
of basis vectors, which is how ``satisfies`` and ``verbal_subobject`` work.

Grammar of the DSL::

    law   :=  [sign] term { sign term }
    term  :=  [integer] expr
    expr  :=  var | '[' expr ',' expr ']'
    var   :=  'x' digit            (x1 .. x9)

Example: the Leibniz identity is
``[[x1,x2],x3] - [[x1,x3],x2] - [x1,[x2,x3]]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebras import Algebra, IdealWitness, LinearMap, ideal_generated, quotient_algebra
from .errors import CheckFailed, InputError, LawSyntaxError, NonMultilinearError
from .linalg import Subspace, right_section, vec_add, vec_scale, vec_zero


@dataclass(frozen=True)
class LawTerm:
    """Binary bracket tree; a leaf holds a variable index, a node two subtrees."""

    var: int | None = None
    left: "LawTerm | None" = None
    right: "LawTerm | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.var is not None

    def variables(self) -> list:
        if self.is_leaf:
            return [self.var]
        return self.left.variables() + self.right.variables()

    def evaluate(self, algebra: Algebra, assignment) -> tuple:
        """assignment[i-1] is the vector substituted for variable x_i."""
        if self.is_leaf:
            return assignment[self.var - 1]
        return algebra.bracket(self.left.evaluate(algebra, assignment),
                               self.right.evaluate(algebra, assignment))

    def __str__(self):
        if self.is_leaf:
            return f"x{self.var}"
        return f"[{self.left},{self.right}]"


def leaf(i: int) -> LawTerm:
    return LawTerm(var=i)


def node(left: LawTerm, right: LawTerm) -> LawTerm:
    return LawTerm(left=left, right=right)


@dataclass(frozen=True)
class Law:
    degree: int
    terms: tuple  # of (int coefficient, LawTerm)

    def __post_init__(self):
        if not self.terms:
            raise InputError("a law needs at least one term")
        expected = list(range(1, self.degree + 1))
        for coeff, term in self.terms:
            if coeff == 0:
                raise InputError("law coefficients must be nonzero")
            vs = sorted(term.variables())
            if vs != expected:
                raise NonMultilinearError(
                    f"term {term} uses variables {vs}, expected x1..x{self.degree} once each")

    def __str__(self):
        parts = []
        for coeff, term in self.terms:
            mag = abs(coeff)
            body = str(term) if mag == 1 else f"{mag}{term}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if coeff > 0 else '-'} {body}")
        return " ".join(parts)

    def value(self, algebra: Algebra, assignment) -> tuple:
        f = algebra.field
        acc = vec_zero(f, algebra.dim)
        for coeff, term in self.terms:
            v = term.evaluate(algebra, assignment)
            acc = vec_add(f, acc, vec_scale(f, f.from_int(coeff), v))
        return acc


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def error(self, message):
        raise LawSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_integer(self) -> int:
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        return int(self.src[start:self.pos])

    def parse_expr(self) -> LawTerm:
        c = self.peek()
        if c == "x":
            self.pos += 1
            d = self.src[self.pos] if self.pos < len(self.src) else ""
            if d not in "123456789":
                self.error("variable must be x1..x9")
            self.pos += 1
            return leaf(int(d))
        if c == "[":
            self.pos += 1
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect("]")
            return node(left, right)
        self.error("expected a variable or '['")

    def parse_term(self):
        coeff = 1
        if self.peek().isdigit():
            coeff = self.parse_integer()
        return coeff, self.parse_expr()

    def parse_law(self) -> Law:
        terms = []
        sign = 1
        c = self.peek()
        if c == "-":
            sign = -1
            self.pos += 1
        elif c == "+":
            self.pos += 1
        while True:
            coeff, term = self.parse_term()
            terms.append((sign * coeff, term))
            c = self.peek()
            if c == "":
                break
            if c == "+":
                sign = 1
            elif c == "-":
                sign = -1
            else:
                self.error("expected '+', '-' or end of law")
            self.pos += 1
        degree = len(terms[0][1].variables())
        for _, term in terms:
            if len(term.variables()) != degree:
                raise NonMultilinearError(
                    f"terms of mixed degree in one law: {terms[0][1]} vs {term}")
        return Law(degree, tuple(terms))


def parse_law(src: str) -> Law:
    if not src.strip():
        raise LawSyntaxError("empty law", 0)
    return _Parser(src).parse_law()


@dataclass(frozen=True)
class Variety:
    """A named set of multilinear laws cutting out a Birkhoff subvariety.

    uce_condition records whether composites of central extensions over a
    perfect middle object stay central in this ambient variety; None means
    unknown (user-supplied law sets).
    """

    name: str
    laws: tuple
    uce_condition: bool | None = None
    rejects_char2: bool = False

    def __str__(self):
        return self.name

    @property
    def is_lawless(self) -> bool:
        return not self.laws

    def contains_abelian(self) -> bool:
        """True when every law vanishes on trivial-bracket algebras."""
        return all(law.degree >= 2 for law in self.laws)


NAALG = Variety("NAAlg", (), uce_condition=False)
VECT = Variety("Vect", (parse_law("[x1,x2]"),), uce_condition=True)
LEIB = Variety(
    "Leib",
    (parse_law("[[x1,x2],x3] - [[x1,x3],x2] - [x1,[x2,x3]]"),),
    uce_condition=True,
)
LIE = Variety(
    "Lie",
    (parse_law("[x1,x2] + [x2,x1]"),
     parse_law("[[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2]")),
    uce_condition=True,
    rejects_char2=True,
)

BUILTIN_VARIETIES = {v.name: v for v in (NAALG, VECT, LEIB, LIE)}

# Strictness order of the built-in chain Vect < Lie < Leib < NAAlg.
_BUILTIN_RANK = {"Vect": 0, "Lie": 1, "Leib": 2, "NAAlg": 3}


def variety_by_name(name: str) -> Variety:
    if name not in BUILTIN_VARIETIES:
        raise InputError(
            f"unknown variety {name!r}; built-ins are {', '.join(sorted(BUILTIN_VARIETIES))}")
    return BUILTIN_VARIETIES[name]


def builtin_nesting_ok(coefficient: Variety, ambient: Variety) -> bool:
    """Sanity check that the coefficient subvariety sits inside the ambient
    one; decidable for the built-in chain, vacuously true otherwise."""
    if coefficient.name in _BUILTIN_RANK and ambient.name in _BUILTIN_RANK:
        return _BUILTIN_RANK[coefficient.name] <= _BUILTIN_RANK[ambient.name]
    return True


def _guard_characteristic(a: Algebra, v: Variety):
    if v.rejects_char2 and a.field.char == 2:
        raise InputError(
            f"variety {v.name} is not supported in characteristic 2 "
            "(its multilinear laws are weaker there)")


def _basis_tuples(a: Algebra, degree: int):
    basis = [a.basis_vector(i) for i in range(a.dim)]
    return itertools.product(basis, repeat=degree)


def satisfies(a: Algebra, v: Variety) -> bool:
    """Every law vanishes on every basis tuple (sufficient by multilinearity)."""
    _guard_characteristic(a, v)
    zero = vec_zero(a.field, a.dim)
    for law in v.laws:
        for assignment in _basis_tuples(a, law.degree):
            if law.value(a, assignment) != zero:
                return False
    return True


def law_value_span(a: Algebra, v: Variety) -> Subspace:
    """Span of all law evaluations over basis tuples."""
    _guard_characteristic(a, v)
    vecs = []
    for law in v.laws:
        for assignment in _basis_tuples(a, law.degree):
            vecs.append(law.value(a, assignment))
    return Subspace.from_vectors(a.field, a.dim, vecs)


def verbal_subobject(a: Algebra, v: Variety) -> IdealWitness:
    """Smallest ideal whose quotient satisfies v."""
    return ideal_generated(a, law_value_span(a, v))


def reflect(a: Algebra, v: Variety):
    """Reflection of a into the subvariety v; returns (image, unit).

    The unit is the quotient projection by the verbal subobject; it is the
    identity when a already satisfies v.
    """
    q, eta = quotient_algebra(a, verbal_subobject(a, v))
    return q, eta


def reflect_map(f: LinearMap, v: Variety) -> LinearMap:
    """The induced map between reflections, commuting with the units."""
    fc = f.certified()
    dom_q, eta_dom = reflect(fc.domain, v)
    cod_q, eta_cod = reflect(fc.codomain, v)
    sect = right_section(eta_dom.matrix)
    induced = LinearMap(dom_q, cod_q,
                        sect.mul(fc.matrix).mul(eta_cod.matrix)).certified()
    if eta_dom.matrix.mul(induced.matrix) != fc.matrix.mul(eta_cod.matrix):
        raise CheckFailed("reflection naturality square failed")
    return induced
