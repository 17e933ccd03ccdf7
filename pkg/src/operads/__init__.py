"""Insertion-operad term calculi, coherence decision, and polytopes."""

from .addresses import (EMPTY, GT, INCOMPARABLE_OR_EQUAL, LT, arity_from_str,
                        arity_insert, arity_str, canonical_order,
                        is_nominal_arity, is_prefix_of_arity, k_index,
                        k_inverse, lex_compare, nbar, nominal_arity, nword,
                        scale, strip, word_from_str, word_str)
from .arrows import (Beta, BetaE, BetaInv, BetaInvE, Comp, Id, InsArr,
                     InsArrAt, Lam, LamE, LamInv, LamInvE, Mu, MuE, MuInv,
                     MuInvE, Theta, ThetaE, arrow_eq, arrow_oe_to_ou,
                     arrow_ou_to_oe, basic_moves, is_directed, is_normal,
                     normalize_object, scale_arrow, strictify, word_of,
                     woust_gamma)
from .errors import (BoundExceeded, FlavorMismatch, GeneratorMissing,
                     IllegitimateIndex, IllegitimateInsertion, NotAPrefix,
                     OperadError, OutOfDomain, ParseError, SoundnessError,
                     TypeMismatch, UnknownGenerator)
from .parser import parse_arrow, parse_term
from .perm_engine import (BracketStep, GammaSet, GenStep, PermArrow, bracket,
                          check_gamma, compose, generator, graph,
                          identity_arrow, normal_form, parse_generator_file,
                          perm_eq, symmetric_gamma)
from .polytopes import (Skeleton, STree, TreeInput, build_skeleton,
                        classify_faces, edges, emit, enumerate_objects,
                        internal_vertices, render_stree, stree_of_term)
from .terms import (OGen, OIns, OUnit, OeGen, OeIns, OeUnit, OuGen, OuIns,
                    OuUnit, Signature, Term, build, scale_term,
                    signature_of, strip_term, term_size)
from .translate import (canonical_ou, closure_oracle, o_to_oe, oe_to_o,
                        oe_to_ou, ou_to_oe, term_eq, term_neighbors,
                        translate)
