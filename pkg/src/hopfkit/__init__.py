"""hopfkit: exact verification and construction engine for Rota-Baxter
operators, Hopf braces, post-Hopf algebras, matched pairs and Yang-Baxter
maps on finite-dimensional cocommutative Hopf algebras."""

from . import errors
from .linalg import (BasedSpace, Element, Field, LinearOp, QQ, invert, kron,
                     rank, solve, tensor_elem, tensor_space)
from .hopf import (HopfAlgebraData, ModuleAction, adjoint_action,
                   check_bialgebra_automorphism, check_coalgebra_morphism,
                   check_cocommutative, check_hopf_isomorphism,
                   check_module_bialgebra, convolution_inverse, group_algebra,
                   hopf_from_structure, module_action, opposite_hopf,
                   sub_hopf, tensor_hopf, transport_hopf, trivial_action,
                   unit_counit_map, verify_hopf)
from .rb import (DescendentHopf, RotaBaxterOp, check_central_image,
                 check_descendent_antipode_inverse, check_descendent_isos,
                 check_tilde_conjugate_commute, descend, rb_conjugate,
                 rb_tilde, verify_rb)
from .brace import (BraceAction, HopfBrace, RbEmbedding,
                    brace_from_exact_factorization, brace_from_op_action,
                    brace_from_rb, check_op_module, check_rb_op_module,
                    check_rb_symmetric_sufficient, check_symmetric,
                    check_symmetric_sufficient, derived_action, embed_into_rb,
                    flip_brace, trivial_brace, verify_brace)
from .posthopf import (PostHopf, brace_from_posthopf, posthopf_from_brace,
                       posthopf_from_rb, subadjacent_hopf, verify_posthopf)
from .matched import (MatchedPair, YbeMap, brace_from_matched_pair,
                      matched_pair_from_rb, verify_matched_pair, ybe_from_rb)
from .cocycle import (Cocycle, CocycleRb, RelativeRB, canonical_from_brace,
                      invert_cocycle, invert_relative_rb, rb_hopf_from_cocycle,
                      verify_cocycle, verify_relative_rb)
from .constructions import (SmashProduct, TripleFactorization,
                            check_factorization_descendent_iso,
                            check_smash_descendent_iso, rb_from_triple_factorization,
                            rb_on_smash, smash_product, triple_factorization)
from .groups import (FiniteGroup, RBGroupOp, SkewBrace, cyclic, dihedral,
                     direct_product, enumerate_rb_group_ops,
                     find_exact_factorizations, lift_to_group_algebra,
                     quaternion_group, rb_inverse_op, rb_trivial_op,
                     semidirect_product, skew_brace_from_rb_group, symmetric,
                     trivial_group, verify_rb_group, ybe_set_map)
from .report import AxiomReport, CheckResult, Witness

__version__ = "0.1.0"
