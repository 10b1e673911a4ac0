//! Differential equivalence checking between an Xd-C program and its MSVL
//! translation.

pub mod corpus;
pub mod harness;
pub mod injection;

pub use harness::{check_state_equiv, compare_runs, differential_run, DiffReport, EquivVerdict, Status, Witness};
pub use injection::{build_injection, check_value_equiv, InjectionError, MemoryInjection};
