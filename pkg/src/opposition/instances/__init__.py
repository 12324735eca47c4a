"""Example structures: finite chains, signed multisets, truth vectors, matrices, strong negations."""
from .finite import boolean, diamond, swap_antichain, three_valued
from .matrix import (
    MatrixOrderConfig,
    antisymmetry_witness,
    load_matrix,
    matrix_leq,
    matrix_neg,
    matrix_zero_member,
    matrix_zero_member_stated,
    zero_discrepancy,
)
from .multiset import (
    INTEGERS,
    MultiplicityConfig,
    SignedMultiset,
    UnsupportedOperation,
    classical_complement,
    load_multiset,
    multiset_leq,
    multiset_leq_literal,
    multiset_neg,
    multiset_union,
)
from .negation import NegationGenerator, fixed_point, load_generator, strong_negation
from .truthtable import (
    TruthVector,
    parse_formula,
    prop_square,
    prop_vertices,
    truth_vector,
    tv_classify,
    tv_relation,
)
