//! Exact engine for short partizan games.
//!
//! Positions live in a [`GameStore`], which hash-conses them so that
//! isomorphic game trees share one [`GameId`] and memoizes comparisons,
//! canonical forms and stops. On top of that sit number recognition
//! ([`Dyadic`], [`ValueClass`]), the diamond family of properties that
//! certify integer / dyadic / pair values for option-closed sets, and the
//! Yashima and Tron graph games.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod canonical;
pub mod diamond;
pub mod dyadic;
pub mod error;
pub mod game;
pub mod yashima;

pub use canonical::{NumberSystem, SearchBound, ValueClass};
pub use diamond::{
    ClosedSetPartition, ClosedSetReport, Conclusion, Condition, GuideOptions, Lemma1Instance, Property,
    PropertyReport, Witness,
};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use game::{GameId, GameStore, Outcome, Player, Relation};
pub use yashima::{
    ColorClass, Counterexample, EnumerationBounds, EnumerationReport, MultiGraph, Move, Variant, Violation,
    ViolationCounts, YashimaSolver, YashimaState,
};
