"""Exact symbolic computation in the Weyl-type algebras W(l1, l2, l3, Gamma)."""

from .algebra import Monomial, Signature, WeylElement, act_on_A, bracket, derive, op_mul, semigroup_mul
from .derivations import DerivationVector, dual_basis, rewrite_from_dual, rewrite_in_dual
from .iso import SigmaMap, apply_sigma, build_sigma, decide_isomorphism, verify_sigma
from .lattice import (BlockMatrix, Equivalent, GammaGroup, Inequivalent, Undecided, decide_equivalence,
                      gamma_apply, gamma_invariants, gamma_make, gamma_member, verify_witness)
from .numberfield import QQ, FieldElement, NumberField, field_make
from .parser import format_element, load_signature, parse_element, parse_signature
from .structure import (ad_growth, ad_power, classify_local, is_in_E_of_F, is_in_N_of_N,
                        simplicity_probe)

__version__ = "0.1.0"
