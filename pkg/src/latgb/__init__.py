"""Binomial ideals of finite lattices: reduced Groebner bases under
configurable monomial orders, squarefree/quadratic initial-ideal tests,
the bipartite edge-graph correspondence for grid-embedded lattices, and
exhaustive desk-scale conjecture scans."""

__version__ = "0.1.0"

from .monomials import Binomial, Monomial
from .lattice import (Lattice, LatticeError, DuplicateName, NotAPoset,
                      NotALattice, NotPure, NotDistributive, UnknownName,
                      RedundantCovers, PlanarEmbedding, SubPoset,
                      basic_binomials, build_lattice, catalog, cut_edges,
                      find_sublattice, is_distributive, is_modular,
                      join_irreducibles, lattice_from_dict, lattice_to_dict,
                      load_lattice, longest_chain_ranks, modular_rank_law,
                      planar_embedding, product_lattice)
from .orders import (FAMILIES, BudgetError, MonomialOrderSpec, UnknownVariable,
                     compare, enumerate_order_specs, rank_revlex,
                     spec_from_string, spec_to_string)
from .groebner import (LatticeIdealReport, MembershipCertificate,
                       MonomialIdeal, OrientedBinomial, ReducedGroebnerBasis,
                       ZeroBinomial, buchberger, buchberger_with_certificates,
                       initial_ideal, is_quadratic, is_squarefree,
                       lattice_ideal_report, membership_certificate,
                       normal_form, orient, render_binomial, render_monomial,
                       s_binomial, standard_monomial_counts)
from .toric import (BipartiteEdge, BipartiteGraph, EvenCycle,
                    NotPlanarDistributive, cycle_basis_gb, cycle_binomial,
                    even_cycles, graph_of, has_chord, lattice_to_graph,
                    ohsugi_hibi_condition, verify_identification)
from .explorer import (QuadraticVerdict, ScanRecord, SquarefreeScan,
                       canonical_form, enumerate_lattices, lattice_id,
                       quadratic_conjecture_scan, scan_orders,
                       squarefree_conjecture_scan)
