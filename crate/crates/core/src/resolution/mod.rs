//! Multigraded Betti degrees through squarefree divisor complexes, and the
//! predicates read off them.

mod betti;
mod complex;

pub use betti::{
    betti_degrees, betti_degrees_within, certifying_gap_box, group_rank, is_prec_symmetric, minimal_relations, pf_via_betti,
    resolution_summary, sifr_check, tensor_betti, BettiBound, BettiTable, ResolutionSummary, SifrReport,
};
pub use complex::{homology_ranks, sq_divisor_complex, SimplicialComplex, MAX_VERTICES};
