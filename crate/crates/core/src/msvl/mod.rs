//! The MSVL side: syntax tree, text output and a reader for that text.

pub mod ast;
pub mod emit;
pub mod parser;

pub use ast::*;
pub use emit::{emit, emit_program, emit_stmt, Style};
pub use parser::{parse_mexpr, parse_msvl, parse_mstmt};
