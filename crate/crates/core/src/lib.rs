//! Translation of a C subset (Xd-C) into MSVL, with reference interpreters
//! for both languages and a differential harness that checks the translation
//! preserves final states.

pub mod coverage;
pub mod diag;
pub mod equiv;
pub mod externs;
pub mod msvl;
pub mod msvl_interp;
pub mod snapshot;
pub mod stats;
pub mod synth;
pub mod translate;
pub mod types;
pub mod value;
pub mod xdc;
pub mod xdc_interp;
