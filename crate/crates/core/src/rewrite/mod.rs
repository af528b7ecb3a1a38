//! Oriented rewriting modulo a monomial order: normal forms, ambiguity
//! resolution, bounded completion and normal-word counting.

mod complete;
mod enumerate;
mod growth;
mod order;
mod system;

pub use complete::{complete, find_overlaps, resolve, ConfluenceCertificate, Overlap, Verdict, RULE_CAP};
pub use enumerate::{count_normal_words, cumulative, enumerate_normal_words, normal_words_unchecked};
pub use growth::{gk_estimate, MIN_POINTS};
pub use order::{MonomialOrder, OrderKey};
pub use system::{orient, RewriteRule, RewriteSystem, RuleOrigin, Strategy};

use thiserror::Error;

use crate::ncpoly::NcError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("relation is zero")]
    ZeroRelation,
    #[error("relation has a word of degree {word} above its leading word of degree {lead}")]
    DegreeIncreasing { lead: usize, word: usize },
    #[error("intermediate word exceeded degree budget {0}")]
    DegreeBudgetExceeded(usize),
    #[error("no confluence certificate covering degree {0}")]
    NoCertificate(usize),
    #[error("need at least {need} data points, have {have}")]
    InsufficientData { have: usize, need: usize },
    #[error("two rules share the leading word `{0}`")]
    DuplicateLead(String),
    #[error("precedence is not a total order on the alphabet: {0}")]
    PrecedenceNotTotal(String),
    #[error(transparent)]
    Nc(#[from] NcError),
}
