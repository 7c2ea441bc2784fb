"""centrex: exact-arithmetic workbench for central extensions of
finite-dimensional algebras over Q and F_p."""

from .algebras import (Algebra, IdealWitness, LinearMap, centre, direct_product,
                       fibre_product, ideal_generated, identity_map, is_morphism,
                       kernel_pair, quotient_algebra, restrict_to_subalgebra,
                       zero_map)
from .errors import (CheckFailed, InputError, LawSyntaxError,
                     NonMultilinearError, WorkbenchError)
from .extensions import (Extension, centralise, compose_extensions,
                         extension_isomorphism_witness, identity_extension,
                         is_central, is_normal, is_perfect, is_trivial,
                         lift_along_trivial, perfect_subobject,
                         pullback_extension, relative_commutator,
                         split_trivial_check, sub_extension)
from .fields import GF, QQ, Field, PrimeField, RationalField
from .laws import (LEIB, LIE, NAALG, VECT, Law, LawTerm, Variety, parse_law,
                   reflect, reflect_map, satisfies, variety_by_name,
                   verbal_subobject)
from .linalg import (Matrix, Subspace, image, kernel, quotient_map, rref,
                     solve_row_system)
from .pruefer import PrueferElement, act_c, add, check_example54, mul_int, u_map
from .uce import (UceResult, build_uce, check_theorem_h1h2, check_uce_condition,
                  cocycle_relations, composite_universality, lift_universal,
                  nested_compare, perfect_h2_dims)

__version__ = "0.1.0"
