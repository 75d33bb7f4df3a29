//! Cantor-Bendixson analysis of closed families of infinite binary
//! sequences.
//!
//! Families are given either as finite path automata ([`PathAutomaton`])
//! or as expressions in a small combinator language ([`FamilyExpr`]).
//! The engine computes derivatives, ranks and degrees, perfect kernels,
//! accumulation points and least generating sets, and the invariants of
//! the associated Boolean algebra of clopen traces. The [`oracle`] module
//! recomputes the same answers from the definitions, and [`suite`] runs
//! the acceptance battery.

pub mod automaton;
pub mod balg;
pub mod cantor;
pub mod cli;
pub mod corpus;
pub mod dsl;
pub mod error;
pub mod oracle;
pub mod ordinal;
pub mod suite;

pub use automaton::{PathAutomaton, RawAutomaton};
pub use balg::TraceAlgebra;
pub use cantor::{Clopen, UpWord};
pub use dsl::{FamilyExpr, Profile};
pub use error::{Error, ParseError, Result};
pub use ordinal::{Ordinal, RankValue};
