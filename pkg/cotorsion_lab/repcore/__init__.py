from .field import PrimeField
from .quiver import QuiverPresentation
from .module import (Module, Morphism, SES, DirectSum, zero_module, interval_module, identity, zero_morphism, compose,
                     direct_sum, matrix_morphism, submodule, quotient, kernel, cokernel, image_factorisation, pullback,
                     pushout, hom_space, linear_combination, inverse)
from .decompose import Decomposition, Piece, decompose, rank_profile, interval_multiplicities
from .submodules import submodules, submodule_bases, subquotients
from .extensions import cocycle_space, coboundary_rank, ext_dimension, glue, glued_extensions
