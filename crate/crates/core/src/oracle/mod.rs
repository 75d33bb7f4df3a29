//! Independent recomputation of the engine's answers, used to validate it.
//!
//! Everything here works from the definitions with plain reachability
//! searches and bounded enumeration, and shares no analysis code with
//! [`crate::automaton`] beyond the automaton type itself.

mod naive;
mod random;
mod sampling;

pub use naive::{
    derivative_naive, isolated_points_dense_bruteforce, isolation_bruteforce,
    kernel_nonempty_by_cycles, rank_naive, Isolation,
};
pub use random::{
    random_automata, random_automaton, random_compilable_expr, random_exprs, DEFAULT_SEED,
};
pub use sampling::{sample_coherence, sample_coherence_against, CoherenceReport};
