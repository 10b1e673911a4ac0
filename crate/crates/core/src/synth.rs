//! Seeded generators for Xd-C test programs.
//!
//! `program` builds terminating statement-heavy programs whose size grows
//! linearly with the requested statement count. `pure_expr_case` builds a
//! one-assignment program around a random side-effect-free expression over
//! randomly initialised globals.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write;

const GLOBALS: usize = 6;
const ARR: usize = 8;

struct Gen {
    rng: ChaCha8Rng,
    out: String,
    used: usize,
}

impl Gen {
    fn g(&mut self) -> String {
        format!("g{}", self.rng.gen_range(0..GLOBALS))
    }

    fn operand(&mut self, counter: Option<&str>) -> String {
        match (self.rng.gen_range(0..5), counter) {
            (0, _) => self.rng.gen_range(-9..10).to_string(),
            (1, Some(c)) => c.to_string(),
            (2, _) => format!("arr[{}]", self.rng.gen_range(0..ARR)),
            _ => self.g(),
        }
    }

    fn expr(&mut self, counter: Option<&str>) -> String {
        let ops = ["+", "-", "*", "&", "|", "^", "<", "==", "!=", ">="];
        let op = *ops.choose(&mut self.rng).expect("non-empty");
        let (a, b) = (self.operand(counter), self.operand(counter));
        match self.rng.gen_range(0..6) {
            0 => a,
            1 => format!("{a} % 7"),
            2 => format!("helper({a}, {b})"),
            _ => format!("{a} {op} {b}"),
        }
    }

    fn line(&mut self, indent: usize, s: &str) {
        let _ = writeln!(self.out, "{:w$}{s}", "", w = indent * 2);
    }

    fn simple_text(&mut self, counter: Option<&str>) -> String {
        self.used += 1;
        match self.rng.gen_range(0..7) {
            0 => format!("{}++;", self.g()),
            1 => format!("bump({});", self.expr(counter)),
            2 => match counter {
                Some(c) => format!("arr[{c}] = {};", self.expr(counter)),
                None => format!("arr[{}] = {};", self.rng.gen_range(0..ARR), self.expr(None)),
            },
            _ => format!("{} = {};", self.g(), self.expr(counter)),
        }
    }

    fn simple(&mut self, indent: usize, counter: Option<&str>) {
        let s = self.simple_text(counter);
        self.line(indent, &s);
    }

    /// One construct; `depth` is the loop nesting so far. Single-statement
    /// bodies share the line of their header, as in compact C sources.
    fn stmt(&mut self, indent: usize, depth: usize) {
        let counter = format!("i{depth}");
        match self.rng.gen_range(0..11) {
            9 if depth < 2 => {
                self.used += 4;
                let n = self.rng.gen_range(1..=ARR);
                let (jump, g) = (["break", "continue"].choose(&mut self.rng).copied().unwrap_or("break"), self.g());
                self.line(indent, &format!("for ({counter} = 0; {counter} < {n}; {counter}++) {{"));
                self.line(indent + 1, &format!("if (arr[{counter}] > {g}) {jump};"));
                for _ in 0..self.rng.gen_range(1..3) {
                    self.simple(indent + 1, Some(&counter));
                }
                self.close(indent);
            }
            0 | 1 if depth < 2 => {
                self.used += 1;
                let n = self.rng.gen_range(1..=ARR);
                let head = format!("for ({counter} = 0; {counter} < {n}; {counter}++)");
                if self.rng.gen_bool(0.5) {
                    let body = self.simple_text(Some(&counter));
                    self.line(indent, &format!("{head} {body}"));
                } else {
                    self.line(indent, &format!("{head} {{"));
                    for _ in 0..self.rng.gen_range(2..4) {
                        self.nested(indent + 1, depth + 1, &counter);
                    }
                    self.close(indent);
                }
            }
            2 if depth < 2 => {
                self.used += 3;
                let n = self.rng.gen_range(1..5);
                self.line(indent, &format!("{counter} = 0;"));
                self.line(indent, &format!("while ({counter} < {n}) {{"));
                self.nested(indent + 1, depth + 1, &counter);
                if self.rng.gen_bool(0.3) {
                    self.used += 2;
                    let g = self.g();
                    self.line(indent + 1, &format!("if ({g} > 40) break;"));
                }
                self.line(indent + 1, &format!("{counter}++;"));
                self.close(indent);
            }
            3 | 4 => {
                self.used += 1;
                let c = self.expr(None);
                let (a, b) = (self.simple_text(None), self.simple_text(None));
                self.line(indent, &format!("if ({c}) {a}"));
                self.line(indent, &format!("else {b}"));
            }
            5 | 6 => {
                self.used += 2;
                let g = self.g();
                self.line(indent, &format!("switch ({g} % 3) {{"));
                let a = self.simple_text(None);
                self.line(indent, &format!("case 0: {a} break;"));
                let b = self.simple_text(None);
                self.line(indent, &format!("case 1: {b}"));
                let c = self.simple_text(None);
                self.line(indent, &format!("default: {c}"));
                self.close(indent);
            }
            _ => self.simple(indent, None),
        }
    }

    fn nested(&mut self, indent: usize, depth: usize, counter: &str) {
        if self.rng.gen_bool(0.25) {
            self.stmt(indent, depth);
        } else {
            self.simple(indent, Some(counter));
        }
    }

    fn close(&mut self, indent: usize) {
        let _ = writeln!(self.out, "{:w$}}}", "", w = indent * 2);
    }
}

/// A terminating program with at least `stmts` statements in `main`
/// (loop headers and switch arms included).
pub fn program(stmts: usize, seed: u64) -> String {
    let mut g = Gen { rng: ChaCha8Rng::seed_from_u64(seed), out: String::new(), used: 0 };
    let names: Vec<String> = (0..GLOBALS).map(|i| format!("g{i}")).collect();
    let _ = writeln!(g.out, "int {};", names.join(", "));
    let items: Vec<String> = (0..ARR).map(|_| g.rng.gen_range(-9..10).to_string()).collect();
    let _ = writeln!(g.out, "int arr[{ARR}] = {{{}}};", items.join(", "));
    let _ = writeln!(g.out, "int i0, i1;\n");
    g.out.push_str("int helper(int a, int b)\n{\n  return a * 2 - b;\n}\n\n");
    g.out.push_str("void bump(int k)\n{\n  g0 = g0 + k % 5;\n}\n\n");
    g.out.push_str("int main(void)\n{\n");
    for i in 0..GLOBALS {
        let v = g.rng.gen_range(-5..6);
        g.line(1, &format!("g{i} = {v};"));
    }
    g.used = 0;
    while g.used < stmts {
        g.stmt(1, 0);
    }
    g.out.push_str("  return g0 % 100;\n}\n");
    g.out
}

/// Renders a random double that round-trips exactly.
fn double_lit(rng: &mut ChaCha8Rng) -> String {
    format!("{:.2}", rng.gen_range(-40..41) as f64 / 4.0)
}

struct ExprGen<'a> {
    rng: &'a mut ChaCha8Rng,
}

impl ExprGen<'_> {
    fn int(&mut self, d: u32) -> String {
        if d == 0 || self.rng.gen_bool(0.25) {
            return match self.rng.gen_range(0..9) {
                0 => self.rng.gen_range(-12..13).to_string(),
                1 => "a".into(),
                2 => "b".into(),
                3 => "c".into(),
                4 => "u".into(),
                5 => "ch".into(),
                6 => format!("arr[{}]", self.rng.gen_range(0..4)),
                7 => "*p".into(),
                _ => format!("*(p + {})", self.rng.gen_range(-1..3)),
            };
        }
        let ops = ["+", "-", "*", "/", "%", "<<", ">>", "&", "|", "^", "<", ">", "<=", ">=", "==", "!=", "&&", "||"];
        match self.rng.gen_range(0..12) {
            0 => format!("-({})", self.int(d - 1)),
            1 => format!("~({})", self.int(d - 1)),
            2 => format!("!({})", self.int(d - 1)),
            3 => format!("({}) ? ({}) : ({})", self.int(d - 1), self.int(d - 1), self.int(d - 1)),
            4 => format!("(int)({})", self.double(d - 1)),
            5 => {
                let op = ["<", ">=", "==", "!="].choose(self.rng).expect("non-empty");
                format!("({}) {op} ({})", self.double(d - 1), self.double(d - 1))
            }
            6 => format!("sq({})", self.int(d - 1)),
            7 => format!("({}) << {}", self.int(d - 1), self.rng.gen_range(0..5)),
            _ => {
                let op = ops.choose(self.rng).expect("non-empty");
                let op = if *op == "<<" || *op == ">>" { ">>" } else { op };
                if op == ">>" {
                    return format!("({}) >> {}", self.int(d - 1), self.rng.gen_range(0..5));
                }
                format!("({}) {op} ({})", self.int(d - 1), self.int(d - 1))
            }
        }
    }

    fn double(&mut self, d: u32) -> String {
        if d == 0 || self.rng.gen_bool(0.3) {
            return match self.rng.gen_range(0..4) {
                0 => double_lit(self.rng),
                1 => "x".into(),
                2 => "y".into(),
                _ => format!("(double)({})", self.int(0)),
            };
        }
        match self.rng.gen_range(0..6) {
            0 => format!("-({})", self.double(d - 1)),
            1 => format!("({}) ? ({}) : ({})", self.int(d - 1), self.double(d - 1), self.double(d - 1)),
            _ => {
                let op = ["+", "-", "*", "/"].choose(self.rng).expect("non-empty");
                format!("({}) {op} ({})", self.double(d - 1), self.double(d - 1))
            }
        }
    }
}

/// A program assigning one random pure expression to `r` (int) or `rd`
/// (double). Globals get random initial values, shared by both sides.
pub fn pure_expr_case(seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::new();
    let (a, b, c) = (rng.gen_range(-50..51), rng.gen_range(-50..51), rng.gen_range(1..20));
    let _ = writeln!(out, "int a = {a}, b = {b}, c = {c};");
    let _ = writeln!(out, "unsigned int u = {}u;", rng.gen_range(0..100));
    let _ = writeln!(out, "char ch = {};", rng.gen_range(-20..100));
    let (x, y) = (double_lit(&mut rng), double_lit(&mut rng));
    let _ = writeln!(out, "double x = {x}, y = {y};");
    let items: Vec<String> = (0..4).map(|_| rng.gen_range(-30..31).to_string()).collect();
    let _ = writeln!(out, "int arr[4] = {{{}}};", items.join(", "));
    out.push_str("int *p;\nint r;\ndouble rd;\n\nint sq(int v)\n{\n  return v * v;\n}\n\n");
    let depth = rng.gen_range(1..5);
    let assign = if rng.gen_bool(0.75) {
        format!("r = {};", ExprGen { rng: &mut rng }.int(depth))
    } else {
        format!("rd = {};", ExprGen { rng: &mut rng }.double(depth))
    };
    let _ = write!(out, "int main(void)\n{{\n  p = &arr[1];\n  {assign}\n  return 0;\n}}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xdc::frontend;

    #[test]
    fn generated_programs_pass_the_frontend() {
        for seed in 0..40 {
            let src = program(40, seed);
            frontend(&src).unwrap_or_else(|d| panic!("seed {seed}: {d:?}\n{src}"));
        }
    }

    #[test]
    fn generated_expressions_pass_the_frontend() {
        for seed in 0..400 {
            let src = pure_expr_case(seed);
            frontend(&src).unwrap_or_else(|d| panic!("seed {seed}: {d:?}\n{src}"));
        }
    }

    #[test]
    fn generation_is_deterministic_and_grows_linearly() {
        assert_eq!(program(64, 7), program(64, 7));
        assert_ne!(program(64, 7), program(64, 8));
        let small = crate::stats::nonblank_lines(&program(256, 1)) as f64;
        let big = crate::stats::nonblank_lines(&program(1024, 1)) as f64;
        assert!((3.0..5.5).contains(&(big / small)), "{small} {big}");
    }
}
