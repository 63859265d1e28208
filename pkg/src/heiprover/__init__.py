"""Symbolic prover for holographic entanglement entropy inequalities.

The package implements an exact calculus for multipartite entropy
inequalities of one-dimensional boundary systems: basis conversions between
subsystem entropies and multipartite informations, chord-diagram expansions
of inequalities under connectivity configurations, a certified clean-gap
rewriting prover, compatibility analysis with CCC-configuration enumeration,
and the cut calculus with its dependency DAG and configuration counting.
"""

__version__ = "0.1.0"

from .algebra import (BalanceClass, EntropyForm, apply_permutation,
                      canonicalize_complement, classify_balance,
                      eliminate_region, evaluate, group_regions,
                      grouped_information, i_to_s, render_form, s_to_i,
                      subsystem)
from .compat import (CCCConfiguration, Split, disconnection_implications,
                     enumerate_ccc, incompatible_pairs, interlace_count,
                     is_incompatible)
from .cuts import (Cut, CutDag, apply_cut_to_iform, apply_cut_to_surface,
                   build_cut_dag, count_allowed_configurations, enumerate_cuts,
                   induces, interpretation_table)
from .diagram import (CircularDiagram, CutAssumption, DiagramSpace,
                      ExchangeStep, OracleVerdict, ProofResult, chords_cross,
                      clean_gap_prove, cross_exchange, is_gapless,
                      numeric_oracle)
from .prover import (KNOWN_INEQUALITIES, InternalConsistencyError,
                     ProofCertificate, UnbalancedFormError, known_suite,
                     prove, prove_without_joint, verify_certificate)
from .simplex import (Chord, Configuration, chord_full, chord_left,
                      chord_name, chord_right, connected_expansion, dual_chord,
                      expand_entropy, expand_inequality, parse_chord)

__all__ = [name for name in dir() if not name.startswith("_")]
