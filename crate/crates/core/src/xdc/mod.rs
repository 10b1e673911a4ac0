//! The Xd-C frontend: lexing, parsing, subset checking and type checking.

pub mod ast;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod subset;
pub mod typeck;

use crate::diag::Diagnostic;
pub use ast::Program;
pub use typeck::Symbols;

/// A parsed, subset-clean and type-annotated program.
#[derive(Clone, Debug)]
pub struct Checked {
    pub program: Program,
    pub symbols: Symbols,
}

/// Runs the whole frontend. Negative-list violations are reported before
/// any type errors.
pub fn frontend(source: &str) -> Result<Checked, Vec<Diagnostic>> {
    let mut program = parser::parse_source(source).map_err(|d| vec![d])?;
    let violations = subset::check_subset(&program);
    if !violations.is_empty() {
        return Err(violations);
    }
    let symbols = typeck::typecheck(&mut program)?;
    Ok(Checked { program, symbols })
}
