"""Exact combinatorics of quivers with potentials.

Quiver mutation, potentials in cyclic normal form, truncated Jacobian
algebras over Q and Q(L), DWZ mutation with reduction, the squid and
star-word constructions, and a verification suite replaying the
desk-checkable claims these constructions rest on.
"""

from .quiver import (Arrow, Quiver, QuiverError, canonical_form, from_exchange_matrix,
                     is_acyclic, mutate_exchange_matrix, mutate_quiver, mutate_sequence,
                     mutation_class_bfs, quiver_isomorphic, to_exchange_matrix,
                     transport_arrows)
from .scalars import RF_LAM, RF_ONE, RF_ZERO, Poly, RatFunc, rf
from .potential import (PathSum, Potential, PotentialError, QP, Substitution,
                        SubstitutionError, apply_substitution, canonical_rotation,
                        cyclic_derivative, cyclic_normal_form, make_qp, restrict_qp)
from .jacobian import (TruncatedQuotient, is_reduced_qp, is_rigid_up_to_degree,
                       jacobian_dimension, truncated_quotient)
from .mutation import (MutationTrace, nondegeneracy_explore, premutate, qp_mutate,
                       split_reduce)
from .constructions import (AlgebraPresentation, WeightData, canonical_ct_quiver,
                            five_vertex_qp, genus_and_type, keller_qp, lambda_orbit,
                            make_presentation, q2222_qp, q2222_quiver, squid_qp,
                            squid_tube_tops, tubular_algebra)
from .coxeter import birs_word, gcm_from_quiver, is_reduced, qw, qw_tilde

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
