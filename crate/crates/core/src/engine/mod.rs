//! Completion of a generating set to a strong Gröbner basis up to a length
//! bound, plus the reduction and post-processing tools around it.

mod buchberger;
mod criteria;
mod post;
mod reduce;

use std::collections::BTreeMap;
use std::fmt;

pub use buchberger::buchberger;
pub use criteria::{
    chain_criterion, chain_criterion_g, chain_criterion_s, coeff_criterion, pair_replacement, product_criterion,
    ChainKind, Placed,
};
pub use post::{
    completeness_flag, gb_equivalent, interreduce, leading_terms, minimal_leading_terms, monomial_basis, sort_basis,
    verify_basis, Violation,
};
pub use reduce::{find_reducer, lm_reduce_step, normal_form, normal_form_with, Reducers, ReductionStep};

use crate::overlap::PairKind;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Drop elements whose leading term is divisible by another's.
    pub reduce: bool,
    /// Fully reduce tails of the output.
    pub tail_reduce: bool,
    pub chain_criterion: bool,
    /// Skip second-type S-pairs with coprime leading coefficients.
    pub product_criterion: bool,
    /// Keep every discarded pair's polynomial for later inspection.
    pub test_mode: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { reduce: true, tail_reduce: false, chain_criterion: true, product_criterion: true, test_mode: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompletenessFlag {
    /// Heuristic: the bound reaches `3*d - 1` for the longest output word.
    ConjecturallyComplete,
    Truncated,
}

impl fmt::Display for CompletenessFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompletenessFlag::ConjecturallyComplete => "conjecturally-complete",
            CompletenessFlag::Truncated => "truncated",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub pairs_created: u64,
    pub pairs_discarded_product: u64,
    pub pairs_discarded_chain: u64,
    pub pairs_discarded_coeff: u64,
    pub pairs_processed: u64,
    pub reductions_to_zero: u64,
    pub basis_insertions: u64,
    pub peak_queue_size: u64,
    /// Insertions keyed by leading-word length.
    pub insertions_by_length: BTreeMap<usize, u64>,
}

impl Stats {
    /// Flat `key=value` view.
    pub fn entries(&self) -> Vec<(&'static str, u64)> {
        vec![
            ("pairs_created", self.pairs_created),
            ("pairs_discarded_product", self.pairs_discarded_product),
            ("pairs_discarded_chain", self.pairs_discarded_chain),
            ("pairs_discarded_coeff", self.pairs_discarded_coeff),
            ("pairs_processed", self.pairs_processed),
            ("reductions_to_zero", self.reductions_to_zero),
            ("basis_insertions", self.basis_insertions),
            ("peak_queue_size", self.peak_queue_size),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiscardReason {
    Product,
    Chain,
    Coefficient,
}

/// A pair the completion skipped, materialized in test mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscardedPair<E> {
    pub kind: PairKind,
    pub reason: DiscardReason,
    pub poly: Polynomial<E>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GBResult<E> {
    pub basis: Vec<Polynomial<E>>,
    pub bound: usize,
    pub flag: CompletenessFlag,
    pub stats: Stats,
    pub discarded: Vec<DiscardedPair<E>>,
    pub warnings: Vec<String>,
}
