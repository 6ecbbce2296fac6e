"""Generalized DP-coloring of digraphs with variable degeneracy.

The package decides colorability of configurations (a digraph, a cover, and a
per-color degree budget), producing either a coloring transversal with its
elimination order or a machine-checkable certificate that the configuration
belongs to the recursively constructible family; it also carries an exact
small-scale layer for the three coloring parameters (plain, list, dp), for
critical digraphs and covers, and for the low-vertex block-structure and
Brooks-type classification theorems.
"""

from .config import (Configuration, is_degree_feasible, from_vector_function,
                     reduce, strictly_f_degenerate)
from .constructible import (ACert, Certificate, EvenCCert, KCert, MCert,
                            MergeCert, OddCCert, augment_zero, cert_from_sexp,
                            cert_to_sexp, check_certificate, gen_a, gen_c,
                            gen_k, gen_m, merge, recognize)
from .cover import (ColorDigraph, Cover, associated_cover, build_cover,
                    check_transversal, restrict, restrict_to_vertices,
                    saturation_and_uniformity)
from .criticality import (BrooksClassification, CriticalCoverReport,
                          brooks_classify, check_block_structure, chi,
                          chi_at_most, critical_subdigraph, find_critical_cover,
                          is_critical, is_dibrick, low_vertices)
from .digraph import (BlockDecomposition, DecompositionCase, DegreePair,
                      Digraph, FamilyTag, antidirected_cycle, bidirect,
                      bidirected_complete, bidirected_cycle, blocks, classify,
                      decompose_2connected, degree_profile, directed_cycle,
                      eulerian_diregular, build_digraph, single_arc,
                      transitive_tournament)
from .properties import DigraphProperty, builtin, compute_d, in_CR, register
from .solver import Colored, Constructible, Verdict, brute_force, solve, verify

__version__ = "1.0.0"
