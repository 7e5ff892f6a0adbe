"""Exact quantum monodromy of B_3 over cyclotomic fields.

Submodules: cyclo (field arithmetic), braidrep (level-l representation and
word maps), orderlab (finite/infinite order, image groups), fusion (block
dimensions), modular (S and T), cli (command line).
"""

__version__ = "0.1.0"

from .braidrep import Level, eval_braid, eval_word, lantern_check, level_context, phi_map, psi_map, tk_generator
from .cyclo import CycElem, ExtElem, RationalPoly, cyc_make, galois_conjugates, minimal_polynomial, numeric_interval, sign_decide
from .fusion import BlockSpec, Weight, block_dimension, fusion_product, verlinde_dimension
from .linalg import Mat2, SquareMatrix
from .modular import ModularRep, build_modular, modular_image_finite, modular_relations_check
from .orderlab import (CapExceeded, ConsistencyError, GroupID, OrderVerdict, classify_group, gl_order,
                       masbaum_scan, projective_order)
from .words import Word, WordSyntaxError
