//! Tokenizer for Xd-C, parameterized by keyword and punctuator sets so the
//! MSVL reader can share it.

use crate::diag::{Diagnostic, Span};
use crate::types::IntTy;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Ident(String),
    Kw(&'static str),
    Int(i64, IntTy),
    /// Value and whether the literal carried an `f` suffix.
    Float(f64, bool),
    Char(i64),
    Str(String),
    Punct(&'static str),
    Eof,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tok {
            Tok::Ident(s) => write!(f, "[ident {s}]"),
            Tok::Kw(k) => write!(f, "[{k}]"),
            Tok::Int(n, _) => write!(f, "[int {n}]"),
            Tok::Float(x, _) => write!(f, "[float {x}]"),
            Tok::Char(c) => write!(f, "[char {c}]"),
            Tok::Str(s) => write!(f, "[string {s:?}]"),
            Tok::Punct(p) => write!(f, "[{p}]"),
            Tok::Eof => write!(f, "[eof]"),
        }
    }
}

pub const KEYWORDS: &[&str] = &[
    "int", "char", "float", "double", "long", "short", "signed", "unsigned", "void", "struct", "union", "enum", "if",
    "else", "while", "do", "for", "switch", "case", "default", "break", "continue", "return", "goto", "typedef",
    "extern", "static", "auto", "register", "const", "volatile", "sizeof",
];

// Longest first so that maximal munch falls out of a linear scan.
pub const PUNCTS: &[&str] = &[
    "...", "<<=", ">>=", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "+=", "-=", "*=", "/=",
    "%=", "&=", "|=", "^=", "(", ")", "[", "]", "{", "}", ";", ",", ".", "+", "-", "*", "/", "%", "<", ">", "&", "|",
    "^", "!", "~", "?", ":", "=",
];

/// Keyword and punctuator tables for one language.
#[derive(Clone, Copy, Debug)]
pub struct Dialect {
    pub keywords: &'static [&'static str],
    /// Must be ordered longest first.
    pub puncts: &'static [&'static str],
}

pub const XDC: Dialect = Dialect { keywords: KEYWORDS, puncts: PUNCTS };

struct Lexer<'a> {
    dialect: Dialect,
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
    at_line_start: bool,
}

impl<'a> Lexer<'a> {
    fn peek(&self, k: usize) -> u8 {
        self.src.get(self.pos + k).copied().unwrap_or(0)
    }

    fn bump(&mut self) -> u8 {
        let c = self.src[self.pos];
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
            self.at_line_start = true;
        } else {
            self.col += 1;
        }
        c
    }

    fn span(&self) -> Span {
        Span::new(self.line, self.col)
    }

    fn skip_trivia(&mut self) -> Result<(), Diagnostic> {
        loop {
            let c = self.peek(0);
            if c == b'\n' || c == b' ' || c == b'\t' || c == b'\r' || c == 0x0c {
                self.bump();
            } else if c == b'/' && self.peek(1) == b'/' {
                while self.pos < self.src.len() && self.peek(0) != b'\n' {
                    self.bump();
                }
            } else if c == b'/' && self.peek(1) == b'*' {
                let start = self.span();
                self.bump();
                self.bump();
                loop {
                    if self.pos >= self.src.len() {
                        return Err(Diagnostic::error(start, "unterminated comment"));
                    }
                    if self.peek(0) == b'*' && self.peek(1) == b'/' {
                        self.bump();
                        self.bump();
                        break;
                    }
                    self.bump();
                }
            } else {
                return Ok(());
            }
        }
    }

    fn escape(&mut self, start: Span) -> Result<i64, Diagnostic> {
        let c = self.bump();
        Ok(match c {
            b'n' => 10,
            b't' => 9,
            b'r' => 13,
            b'a' => 7,
            b'b' => 8,
            b'f' => 12,
            b'v' => 11,
            b'\\' => 92,
            b'\'' => 39,
            b'"' => 34,
            b'?' => 63,
            b'x' => {
                let mut v: i64 = 0;
                let mut any = false;
                while self.peek(0).is_ascii_hexdigit() {
                    v = v * 16 + (self.bump() as char).to_digit(16).unwrap() as i64;
                    any = true;
                }
                if !any {
                    return Err(Diagnostic::error(start, "malformed hex escape"));
                }
                v & 0xff
            }
            b'0'..=b'7' => {
                let mut v = (c - b'0') as i64;
                for _ in 0..2 {
                    if (b'0'..=b'7').contains(&self.peek(0)) {
                        v = v * 8 + (self.bump() - b'0') as i64;
                    }
                }
                v & 0xff
            }
            _ => return Err(Diagnostic::error(start, format!("unknown escape `\\{}`", c as char))),
        })
    }

    fn number(&mut self, start: Span) -> Result<Tok, Diagnostic> {
        let begin = self.pos;
        let hex = self.peek(0) == b'0' && (self.peek(1) == b'x' || self.peek(1) == b'X');
        if hex {
            self.bump();
            self.bump();
            while self.peek(0).is_ascii_hexdigit() {
                self.bump();
            }
        } else {
            while self.peek(0).is_ascii_digit() {
                self.bump();
            }
        }
        let mut is_float = false;
        if !hex && self.peek(0) == b'.' {
            is_float = true;
            self.bump();
            while self.peek(0).is_ascii_digit() {
                self.bump();
            }
        }
        if !hex && (self.peek(0) == b'e' || self.peek(0) == b'E') {
            let save = (self.pos, self.line, self.col);
            self.bump();
            if self.peek(0) == b'+' || self.peek(0) == b'-' {
                self.bump();
            }
            if self.peek(0).is_ascii_digit() {
                is_float = true;
                while self.peek(0).is_ascii_digit() {
                    self.bump();
                }
            } else {
                (self.pos, self.line, self.col) = save;
            }
        }
        let text = std::str::from_utf8(&self.src[begin..self.pos]).unwrap().to_string();
        if is_float {
            let mut single = false;
            if matches!(self.peek(0), b'f' | b'F') {
                self.bump();
                single = true;
            } else if matches!(self.peek(0), b'l' | b'L') {
                self.bump();
            }
            let v: f64 = text.parse().map_err(|_| Diagnostic::error(start, "malformed float literal"))?;
            return Ok(Tok::Float(v, single));
        }
        let mut unsigned = false;
        loop {
            match self.peek(0) {
                b'u' | b'U' if !unsigned => {
                    unsigned = true;
                    self.bump();
                }
                b'l' | b'L' => {
                    self.bump();
                }
                _ => break,
            }
        }
        let v = if hex {
            i64::from_str_radix(&text[2..], 16)
        } else if text.len() > 1 && text.starts_with('0') {
            i64::from_str_radix(&text[1..], 8)
        } else {
            text.parse()
        }
        .map_err(|_| Diagnostic::error(start, format!("malformed integer literal `{text}`")))?;
        if v > u32::MAX as i64 {
            return Err(Diagnostic::error(start, format!("integer literal `{text}` exceeds 32 bits")));
        }
        let ty = if unsigned || v > i32::MAX as i64 { IntTy::U32 } else { IntTy::I32 };
        if self.peek(0).is_ascii_alphanumeric() || self.peek(0) == b'_' {
            return Err(Diagnostic::error(self.span(), "invalid suffix on numeric literal"));
        }
        Ok(Tok::Int(v, ty))
    }

    fn next_token(&mut self) -> Result<Token, Diagnostic> {
        self.skip_trivia()?;
        let span = self.span();
        if self.pos >= self.src.len() {
            return Ok(Token { tok: Tok::Eof, span });
        }
        let line_start = self.at_line_start;
        self.at_line_start = false;
        let c = self.peek(0);
        if c == b'#' {
            let msg = if line_start {
                "preprocessor directive in input; run the C preprocessor first (includes and macros are not accepted)"
            } else {
                "stray `#` in program"
            };
            return Err(Diagnostic::error(span, msg));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let begin = self.pos;
            while self.peek(0).is_ascii_alphanumeric() || self.peek(0) == b'_' {
                self.bump();
            }
            let word = std::str::from_utf8(&self.src[begin..self.pos]).unwrap();
            let tok = match self.dialect.keywords.iter().find(|k| **k == word) {
                Some(k) => Tok::Kw(k),
                None => Tok::Ident(word.to_string()),
            };
            return Ok(Token { tok, span });
        }
        if c.is_ascii_digit() || (c == b'.' && self.peek(1).is_ascii_digit()) {
            let tok = self.number(span)?;
            return Ok(Token { tok, span });
        }
        if c == b'\'' {
            self.bump();
            let v = match self.peek(0) {
                b'\\' => {
                    self.bump();
                    self.escape(span)?
                }
                b'\'' | b'\n' | 0 => return Err(Diagnostic::error(span, "empty character literal")),
                _ => self.bump() as i64,
            };
            if self.peek(0) != b'\'' {
                return Err(Diagnostic::error(span, "unterminated character literal"));
            }
            self.bump();
            return Ok(Token { tok: Tok::Char(v), span });
        }
        if c == b'"' {
            self.bump();
            let mut s = String::new();
            loop {
                match self.peek(0) {
                    b'"' => {
                        self.bump();
                        break;
                    }
                    b'\n' | 0 => return Err(Diagnostic::error(span, "unterminated string literal")),
                    b'\\' => {
                        self.bump();
                        let v = self.escape(span)?;
                        s.push(v as u8 as char);
                    }
                    _ => s.push(self.bump() as char),
                }
            }
            return Ok(Token { tok: Tok::Str(s), span });
        }
        for p in self.dialect.puncts {
            if self.src[self.pos..].starts_with(p.as_bytes()) {
                for _ in 0..p.len() {
                    self.bump();
                }
                return Ok(Token { tok: Tok::Punct(p), span });
            }
        }
        Err(Diagnostic::error(span, format!("illegal character {:?}", c as char)))
    }
}

/// Splits Xd-C source into tokens; the last token is always `Eof`.
pub fn tokenize(source: &str) -> Result<Vec<Token>, Diagnostic> {
    tokenize_with(source, XDC)
}

pub fn tokenize_with(source: &str, dialect: Dialect) -> Result<Vec<Token>, Diagnostic> {
    let mut lx = Lexer { dialect, src: source.as_bytes(), pos: 0, line: 1, col: 1, at_line_start: true };
    let mut out = Vec::new();
    loop {
        let t = lx.next_token()?;
        let eof = t.tok == Tok::Eof;
        out.push(t);
        if eof {
            return Ok(out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(src: &str) -> String {
        tokenize(src).unwrap().iter().filter(|t| t.tok != Tok::Eof).map(|t| t.to_string()).collect()
    }

    #[test]
    fn post_increment_statement() {
        assert_eq!(show("le++;"), "[ident le][++][;]");
    }

    #[test]
    fn equality() {
        assert_eq!(show("x == 1"), "[ident x][==][int 1]");
    }

    #[test]
    fn illegal_byte_reports_position() {
        let e = tokenize("\x01").unwrap_err();
        assert_eq!((e.span.line, e.span.col), (1, 1));
    }

    #[test]
    fn literals() {
        let t = tokenize("0x1F 017 10u 1.5f 2e3 'a' '\\n' \"hi\\n\"").unwrap();
        assert_eq!(t[0].tok, Tok::Int(31, IntTy::I32));
        assert_eq!(t[1].tok, Tok::Int(15, IntTy::I32));
        assert_eq!(t[2].tok, Tok::Int(10, IntTy::U32));
        assert_eq!(t[3].tok, Tok::Float(1.5, true));
        assert_eq!(t[4].tok, Tok::Float(2000.0, false));
        assert_eq!(t[5].tok, Tok::Char(97));
        assert_eq!(t[6].tok, Tok::Char(10));
        assert_eq!(t[7].tok, Tok::Str("hi\n".into()));
    }

    #[test]
    fn comments_and_positions() {
        let t = tokenize("/* a\n b */ x // c\n  y").unwrap();
        assert_eq!((t[0].span.line, t[0].span.col), (2, 7));
        assert_eq!((t[1].span.line, t[1].span.col), (3, 3));
    }

    #[test]
    fn preprocessor_lines_are_rejected() {
        let e = tokenize("#include <stdio.h>\nint main(){return 0;}").unwrap_err();
        assert!(e.message.contains("preprocessor"));
    }

    #[test]
    fn maximal_munch() {
        assert_eq!(show("a<<=b->c..."), "[ident a][<<=][ident b][->][ident c][...]");
    }
}
