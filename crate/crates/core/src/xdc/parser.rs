//! Recursive-descent parser for Xd-C with C89 operator precedence.

use super::ast::*;
use super::lexer::{tokenize, Tok, Token};
use crate::diag::{Diagnostic, Span};
use crate::types::{CType, FuncSig, IntKind, StructDef};
use crate::value::{BinOp, UnOp};
use std::collections::HashMap;

pub fn parse_source(source: &str) -> Result<Program, Diagnostic> {
    parse_program(tokenize(source)?)
}

pub fn parse_program(tokens: Vec<Token>) -> Result<Program, Diagnostic> {
    let mut p = Parser { toks: tokens, pos: 0, typedefs: HashMap::new(), marks: Vec::new() };
    let items = p.program()?;
    Ok(Program { items, marks: p.marks })
}

/// Parses a single expression (used by tests and generators).
pub fn parse_expr(source: &str) -> Result<Expr, Diagnostic> {
    let mut p = Parser { toks: tokenize(source)?, pos: 0, typedefs: HashMap::new(), marks: Vec::new() };
    let e = p.expr()?;
    p.expect_eof()?;
    Ok(e)
}

/// Parses a statement list as it would appear in a function body.
pub fn parse_stmts(source: &str) -> Result<Stmt, Diagnostic> {
    let mut p = Parser { toks: tokenize(source)?, pos: 0, typedefs: HashMap::new(), marks: Vec::new() };
    let sp = p.span();
    let mut v = Vec::new();
    while !p.at_eof() {
        v.push(p.stmt()?);
    }
    Ok(Stmt::seq(v, sp))
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    typedefs: HashMap<String, CType>,
    marks: Vec<(Span, Mark)>,
}

struct Specs {
    ty: CType,
    def: Option<(StructDef, Span)>,
    storage: Option<(&'static str, Span)>,
    span: Span,
}

enum Suffix {
    Array(Option<u32>, Span),
    Func(Vec<(Option<String>, CType, Span)>),
}

struct Declarator {
    name: Option<(String, Span)>,
    ptrs: usize,
    inner: Option<Box<Declarator>>,
    suffixes: Vec<Suffix>,
}

impl Declarator {
    fn name(&self) -> Option<(String, Span)> {
        self.name.clone().or_else(|| self.inner.as_ref().and_then(|d| d.name()))
    }

    /// Parameters of the function suffix closest to the name, if the
    /// declarator declares a function.
    fn func_params(&self) -> Option<&Vec<(Option<String>, CType, Span)>> {
        if let Some(inner) = &self.inner {
            if inner.ptrs > 0 || !inner.suffixes.is_empty() {
                return None;
            }
            return inner.func_params();
        }
        match self.suffixes.first() {
            Some(Suffix::Func(ps)) if self.ptrs == 0 || self.suffixes.len() == 1 => Some(ps),
            _ => None,
        }
    }
}

fn is_type_kw(k: &str) -> bool {
    matches!(
        k,
        "int" | "char" | "float" | "double" | "long" | "short" | "signed" | "unsigned" | "void" | "struct" | "union"
            | "enum" | "const" | "volatile" | "typedef" | "extern" | "static" | "auto" | "register"
    )
}

fn binop_of(p: &str) -> Option<(BinOp, u8)> {
    use BinOp::*;
    Some(match p {
        "||" => (Or, 1),
        "&&" => (And, 2),
        "|" => (BitOr, 3),
        "^" => (BitXor, 4),
        "&" => (BitAnd, 5),
        "==" => (Eq, 6),
        "!=" => (Ne, 6),
        "<" => (Lt, 7),
        ">" => (Gt, 7),
        "<=" => (Le, 7),
        ">=" => (Ge, 7),
        "<<" => (Shl, 8),
        ">>" => (Shr, 8),
        "+" => (Add, 9),
        "-" => (Sub, 9),
        "*" => (Mul, 10),
        "/" => (Div, 10),
        "%" => (Mod, 10),
        _ => return None,
    })
}

fn compound_op(p: &str) -> Option<BinOp> {
    use BinOp::*;
    Some(match p {
        "+=" => Add,
        "-=" => Sub,
        "*=" => Mul,
        "/=" => Div,
        "%=" => Mod,
        "<<=" => Shl,
        ">>=" => Shr,
        "&=" => BitAnd,
        "|=" => BitOr,
        "^=" => BitXor,
        _ => return None,
    })
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Kw(k) => format!("`{k}`"),
        Tok::Int(n, _) => format!("integer `{n}`"),
        Tok::Float(x, _) => format!("float `{x}`"),
        Tok::Char(_) => "character literal".into(),
        Tok::Str(_) => "string literal".into(),
        Tok::Punct(p) => format!("`{p}`"),
        Tok::Eof => "end of input".into(),
    }
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn span(&self) -> Span {
        self.toks[self.pos].span
    }

    fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn is_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Tok::Punct(q) if *q == p)
    }

    fn is_kw(&self, k: &str) -> bool {
        matches!(self.peek(), Tok::Kw(q) if *q == k)
    }

    fn eat_punct(&mut self, p: &str) -> bool {
        if self.is_punct(p) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_kw(&mut self, k: &str) -> bool {
        if self.is_kw(k) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err_expected(&self, what: &str) -> Diagnostic {
        Diagnostic::error(self.span(), format!("expected {what}, found {}", describe(self.peek())))
    }

    fn expect_punct(&mut self, p: &str) -> Result<Span, Diagnostic> {
        let sp = self.span();
        if self.eat_punct(p) {
            Ok(sp)
        } else {
            Err(self.err_expected(&format!("`{p}`")))
        }
    }

    fn expect_eof(&self) -> Result<(), Diagnostic> {
        if self.at_eof() {
            Ok(())
        } else {
            Err(self.err_expected("end of input"))
        }
    }

    fn ident(&mut self) -> Result<(String, Span), Diagnostic> {
        let sp = self.span();
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.pos += 1;
                Ok((s, sp))
            }
            _ => Err(self.err_expected("identifier")),
        }
    }

    fn starts_type(&self) -> bool {
        match self.peek() {
            Tok::Kw(k) => is_type_kw(k),
            Tok::Ident(s) => self.typedefs.contains_key(s),
            _ => false,
        }
    }

    // ---- declarations -------------------------------------------------

    fn specs(&mut self) -> Result<Specs, Diagnostic> {
        let span = self.span();
        let mut storage = None;
        let (mut signed, mut unsigned, mut short, mut long, mut int, mut char_, mut float, mut double, mut void) =
            (0, 0, 0, 0, 0, 0, 0, 0, 0);
        let mut other: Option<CType> = None;
        let mut def = None;
        let mut any = false;
        loop {
            let sp = self.span();
            match self.peek().clone() {
                Tok::Kw(k) => match k {
                    "signed" => signed += 1,
                    "unsigned" => unsigned += 1,
                    "short" => short += 1,
                    "long" => long += 1,
                    "int" => int += 1,
                    "char" => char_ += 1,
                    "float" => float += 1,
                    "double" => double += 1,
                    "void" => void += 1,
                    "const" | "volatile" => self.marks.push((sp, Mark::Qualifier(k))),
                    "typedef" | "extern" | "static" | "auto" | "register" => {
                        if storage.is_some() {
                            return Err(Diagnostic::error(sp, "multiple storage classes"));
                        }
                        storage = Some((k, sp));
                    }
                    "struct" | "union" => {
                        self.pos += 1;
                        if k == "union" {
                            self.marks.push((sp, Mark::Union));
                        }
                        let (ty, d) = self.struct_spec(sp)?;
                        if other.is_some() {
                            return Err(Diagnostic::error(sp, "two types in one declaration"));
                        }
                        other = Some(ty);
                        def = d;
                        any = true;
                        continue;
                    }
                    "enum" => return Err(Diagnostic::error(sp, "enum types are not part of Xd-C")),
                    _ => break,
                },
                Tok::Ident(s)
                    if self.typedefs.contains_key(&s)
                        && other.is_none()
                        && signed + unsigned + short + long + int + char_ + float + double + void == 0 =>
                {
                    other = Some(self.typedefs[&s].clone());
                }
                _ => break,
            }
            any = true;
            self.pos += 1;
        }
        if !any {
            return Err(self.err_expected("type"));
        }
        let arith = signed + unsigned + short + long + int + char_ + float + double + void;
        let ty = if let Some(t) = other {
            if arith > 0 {
                return Err(Diagnostic::error(span, "two types in one declaration"));
            }
            t
        } else {
            self.resolve_arith(span, signed, unsigned, short, long, int, char_, float, double, void)?
        };
        Ok(Specs { ty, def, storage, span })
    }

    #[allow(clippy::too_many_arguments)]
    fn resolve_arith(
        &self,
        span: Span,
        signed: u32,
        unsigned: u32,
        short: u32,
        long: u32,
        int: u32,
        char_: u32,
        float: u32,
        double: u32,
        void: u32,
    ) -> Result<CType, Diagnostic> {
        let bad = || Diagnostic::error(span, "invalid combination of type specifiers");
        if signed + unsigned > 1 || int > 1 || char_ > 1 || float > 1 || double > 1 || void > 1 || short > 1 {
            return Err(bad());
        }
        if long > 1 {
            return Err(Diagnostic::error(span, "`long long` is not part of Xd-C"));
        }
        let sign = signed + unsigned;
        if void == 1 {
            if sign + short + long + int + char_ + float + double > 0 {
                return Err(bad());
            }
            return Ok(CType::Void);
        }
        if float == 1 {
            if sign + short + long + int + char_ + double > 0 {
                return Err(bad());
            }
            return Ok(CType::Float);
        }
        if double == 1 {
            if sign + short + int + char_ > 0 {
                return Err(bad());
            }
            return Ok(if long == 1 { CType::LongDouble } else { CType::Double });
        }
        if char_ == 1 {
            if short + long + int > 0 {
                return Err(bad());
            }
            return Ok(CType::Int(if unsigned == 1 {
                IntKind::UChar
            } else if signed == 1 {
                IntKind::SChar
            } else {
                IntKind::Char
            }));
        }
        if short + long > 1 {
            return Err(bad());
        }
        let k = match (short, long, unsigned) {
            (1, _, 0) => IntKind::Short,
            (1, _, _) => IntKind::UShort,
            (_, 1, 0) => IntKind::Long,
            (_, 1, _) => IntKind::ULong,
            (_, _, 0) => IntKind::Int,
            _ => IntKind::UInt,
        };
        Ok(CType::Int(k))
    }

    fn struct_spec(&mut self, kw_span: Span) -> Result<(CType, Option<(StructDef, Span)>), Diagnostic> {
        let name = match self.peek().clone() {
            Tok::Ident(s) => {
                self.pos += 1;
                s
            }
            _ => return Err(Diagnostic::error(kw_span, "anonymous structs are not supported; name the struct")),
        };
        if !self.eat_punct("{") {
            return Ok((CType::Struct(name), None));
        }
        let mut fields: Vec<(String, CType)> = Vec::new();
        while !self.eat_punct("}") {
            let specs = self.specs()?;
            if let Some((_, sp)) = specs.def {
                return Err(Diagnostic::error(sp, "nested struct definitions are not supported"));
            }
            if let Some((s, sp)) = specs.storage {
                self.marks.push((sp, Mark::StorageClass(s)));
            }
            loop {
                let d = self.declarator(false)?;
                let (fname, fsp) = d.name().ok_or_else(|| self.err_expected("field name"))?;
                let ty = self.build(&d, specs.ty.clone())?;
                if fields.iter().any(|(n, _)| *n == fname) {
                    return Err(Diagnostic::error(fsp, format!("duplicate field `{fname}`")));
                }
                fields.push((fname, ty));
                if !self.eat_punct(",") {
                    break;
                }
            }
            self.expect_punct(";")?;
        }
        if fields.is_empty() {
            return Err(Diagnostic::error(kw_span, "struct with no fields"));
        }
        Ok((CType::Struct(name.clone()), Some((StructDef { name, fields }, kw_span))))
    }

    fn declarator(&mut self, abstract_ok: bool) -> Result<Declarator, Diagnostic> {
        let mut ptrs = 0;
        loop {
            if self.eat_punct("*") {
                ptrs += 1;
            } else if self.is_kw("const") || self.is_kw("volatile") {
                let sp = self.span();
                let Tok::Kw(k) = *self.peek() else { unreachable!() };
                self.marks.push((sp, Mark::Qualifier(k)));
                self.pos += 1;
            } else {
                break;
            }
        }
        let mut name = None;
        let mut inner = None;
        if self.is_punct("(") && matches!(self.peek_at(1), Tok::Punct("*")) {
            self.pos += 1;
            inner = Some(Box::new(self.declarator(abstract_ok)?));
            self.expect_punct(")")?;
        } else if let Tok::Ident(s) = self.peek().clone() {
            if !self.typedefs.contains_key(&s) || !abstract_ok {
                name = Some((s, self.span()));
                self.pos += 1;
            }
        } else if !abstract_ok {
            return Err(self.err_expected("identifier"));
        }
        let mut suffixes = Vec::new();
        loop {
            let sp = self.span();
            if self.eat_punct("[") {
                if self.eat_punct("]") {
                    suffixes.push(Suffix::Array(None, sp));
                } else {
                    let n = match self.bump().tok {
                        Tok::Int(n, _) if n > 0 => n as u32,
                        _ => return Err(Diagnostic::error(sp, "array extent must be a positive integer constant")),
                    };
                    self.expect_punct("]")?;
                    suffixes.push(Suffix::Array(Some(n), sp));
                }
            } else if self.is_punct("(") {
                self.pos += 1;
                suffixes.push(Suffix::Func(self.params()?));
            } else {
                break;
            }
        }
        Ok(Declarator { name, ptrs, inner, suffixes })
    }

    fn params(&mut self) -> Result<Vec<(Option<String>, CType, Span)>, Diagnostic> {
        let mut out = Vec::new();
        if self.eat_punct(")") {
            return Ok(out);
        }
        if self.is_kw("void") && matches!(self.peek_at(1), Tok::Punct(")")) {
            self.pos += 2;
            return Ok(out);
        }
        loop {
            let sp = self.span();
            if self.eat_punct("...") {
                self.marks.push((sp, Mark::Variadic));
                self.expect_punct(")")?;
                return Ok(out);
            }
            let specs = self.specs()?;
            if let Some((s, sp)) = specs.storage {
                self.marks.push((sp, Mark::StorageClass(s)));
            }
            let d = self.declarator(true)?;
            let mut ty = self.build(&d, specs.ty)?;
            // Array parameters decay to pointers.
            if let CType::Array(t, dims) = ty {
                ty = if dims.len() == 2 { CType::ptr(CType::Array(t, vec![dims[1]])) } else { CType::ptr(*t) };
            }
            out.push((d.name().map(|n| n.0), ty, sp));
            if !self.eat_punct(",") {
                break;
            }
        }
        self.expect_punct(")")?;
        Ok(out)
    }

    fn build(&self, d: &Declarator, base: CType) -> Result<CType, Diagnostic> {
        let mut t = base;
        for _ in 0..d.ptrs {
            t = CType::ptr(t);
        }
        let mut i = d.suffixes.len();
        while i > 0 {
            i -= 1;
            match &d.suffixes[i] {
                Suffix::Array(n, sp) => {
                    let mut dims = vec![n.ok_or_else(|| Diagnostic::error(*sp, "array extent required"))?];
                    while i > 0 {
                        if let Suffix::Array(m, sp2) = &d.suffixes[i - 1] {
                            let m = match m {
                                Some(m) => *m,
                                None if i - 1 == 0 => 0,
                                None => return Err(Diagnostic::error(*sp2, "array extent required")),
                            };
                            dims.insert(0, m);
                            i -= 1;
                        } else {
                            break;
                        }
                    }
                    if dims.len() > 2 {
                        return Err(Diagnostic::error(*sp, "arrays have at most two dimensions"));
                    }
                    if matches!(t, CType::Array(..)) {
                        return Err(Diagnostic::error(*sp, "arrays have at most two dimensions"));
                    }
                    t = CType::Array(Box::new(t), dims);
                }
                Suffix::Func(ps) => {
                    t = CType::Func(Box::new(FuncSig { ret: t, params: ps.iter().map(|p| p.1.clone()).collect() }));
                }
            }
        }
        if let Some(inner) = &d.inner {
            t = self.build(inner, t)?;
        }
        Ok(t)
    }

    /// Builds a declared type, allowing an open_extent leading extent (`a[]`),
    /// which is returned as 0 for the caller to fix from the initializer.
    fn build_var(&self, d: &Declarator, base: CType) -> Result<(CType, bool), Diagnostic> {
        let open_extent = matches!(d.suffixes.first(), Some(Suffix::Array(None, _))) && d.inner.is_none();
        if open_extent {
            let mut d2 = Declarator { name: d.name.clone(), ptrs: d.ptrs, inner: None, suffixes: Vec::new() };
            d2.suffixes.push(Suffix::Array(Some(1), Span::default()));
            for s in &d.suffixes[1..] {
                d2.suffixes.push(match s {
                    Suffix::Array(n, sp) => Suffix::Array(*n, *sp),
                    Suffix::Func(p) => Suffix::Func(p.clone()),
                });
            }
            let mut t = self.build(&d2, base)?;
            if let CType::Array(_, dims) = &mut t {
                dims[0] = 0;
            }
            return Ok((t, true));
        }
        Ok((self.build(d, base)?, false))
    }

    fn init(&mut self) -> Result<Init, Diagnostic> {
        let sp = self.span();
        if self.eat_punct("{") {
            let mut items = Vec::new();
            if !self.is_punct("}") {
                loop {
                    items.push(self.init()?);
                    if !self.eat_punct(",") || self.is_punct("}") {
                        break;
                    }
                }
            }
            self.expect_punct("}")?;
            Ok(Init::List(items, sp))
        } else {
            Ok(Init::Expr(self.assign_expr()?))
        }
    }

    /// A declaration or function definition after its specifiers.
    fn declaration_rest(&mut self, specs: Specs, top: bool) -> Result<Vec<Item>, Diagnostic> {
        let mut items = Vec::new();
        if let Some((def, sp)) = specs.def.clone() {
            items.push(Item::Decl(Decl::Struct(def, sp)));
        }
        if self.eat_punct(";") {
            if specs.def.is_none() {
                return Err(Diagnostic::error(specs.span, "declaration declares nothing"));
            }
            return Ok(items);
        }
        let storage = specs.storage;
        let mut vars = Vec::new();
        loop {
            let d = self.declarator(false)?;
            let (name, nsp) = d.name().ok_or_else(|| self.err_expected("identifier"))?;
            if let Some(("typedef", sp)) = storage {
                if vars.is_empty() && !self.marks.iter().any(|(s, m)| *m == Mark::StorageClass("typedef") && (s.line, s.col) == (sp.line, sp.col)) {
                    self.marks.push((sp, Mark::StorageClass("typedef")));
                }
                let t = self.build(&d, specs.ty.clone())?;
                self.typedefs.insert(name, t);
            } else if let Some(params) = d.func_params() {
                let params = params.clone();
                let ty = self.build(&d, specs.ty.clone())?;
                let CType::Func(sig) = ty else { unreachable!() };
                if self.is_punct("{") {
                    if !top {
                        return Err(Diagnostic::error(nsp, "nested function definitions are not allowed"));
                    }
                    if let Some((s, sp)) = storage {
                        self.marks.push((sp, Mark::StorageClass(s)));
                    }
                    let mut ps = Vec::new();
                    for (pn, pt, psp) in params {
                        let pn = pn.ok_or_else(|| Diagnostic::error(psp, "parameter name omitted"))?;
                        ps.push(Param { name: pn, ty: pt, span: psp });
                    }
                    let (locals, body) = self.func_body()?;
                    items.push(Item::Func(FuncDef {
                        name,
                        ret: sig.ret,
                        params: ps,
                        locals,
                        body,
                        span: nsp,
                    }));
                    return Ok(items);
                }
                match storage {
                    Some(("extern", _)) | None => {}
                    Some((s, sp)) => self.marks.push((sp, Mark::StorageClass(s))),
                }
                items.push(Item::Extern(ExternDecl {
                    name,
                    ret: sig.ret,
                    params: sig.params,
                    explicit: matches!(storage, Some(("extern", _))),
                    span: nsp,
                }));
            } else {
                if let Some((s, sp)) = storage {
                    self.marks.push((sp, Mark::StorageClass(s)));
                }
                let (mut ty, open_extent) = self.build_var(&d, specs.ty.clone())?;
                let init = if self.eat_punct("=") { Some(self.init()?) } else { None };
                if open_extent {
                    match &init {
                        Some(Init::List(items, _)) if !items.is_empty() => {
                            if let CType::Array(_, dims) = &mut ty {
                                dims[0] = items.len() as u32;
                            }
                        }
                        _ => return Err(Diagnostic::error(nsp, "array extent required without an initializer list")),
                    }
                }
                vars.push(VarDecl { name, ty, init, open_extent, span: nsp });
            }
            if !self.eat_punct(",") {
                break;
            }
        }
        self.expect_punct(";")?;
        if !vars.is_empty() {
            items.push(Item::Decl(Decl::Vars(specs.ty, vars)));
        }
        Ok(items)
    }

    fn program(&mut self) -> Result<Vec<Item>, Diagnostic> {
        let mut items = Vec::new();
        while !self.at_eof() {
            if self.eat_punct(";") {
                continue;
            }
            if !self.starts_type() {
                return Err(self.err_expected("declaration or function definition"));
            }
            let specs = self.specs()?;
            items.extend(self.declaration_rest(specs, true)?);
        }
        Ok(items)
    }

    fn func_body(&mut self) -> Result<(Vec<Decl>, Stmt), Diagnostic> {
        let open = self.expect_punct("{")?;
        let mut locals = Vec::new();
        while self.starts_type() {
            let specs = self.specs()?;
            for it in self.declaration_rest(specs, false)? {
                match it {
                    Item::Decl(d @ Decl::Vars(..)) => locals.push(d),
                    Item::Decl(Decl::Struct(_, sp)) => {
                        return Err(Diagnostic::error(sp, "struct definitions must be at file scope"))
                    }
                    Item::Extern(e) => {
                        return Err(Diagnostic::error(e.span, "function declarations must be at file scope"))
                    }
                    Item::Func(_) => unreachable!(),
                }
            }
        }
        let mut stmts = Vec::new();
        while !self.eat_punct("}") {
            if self.at_eof() {
                return Err(self.err_expected("`}`"));
            }
            stmts.push(self.stmt()?);
        }
        Ok((locals, Stmt::seq(stmts, open)))
    }

    // ---- statements ---------------------------------------------------

    fn block_items(&mut self) -> Result<Stmt, Diagnostic> {
        let open = self.expect_punct("{")?;
        let mut stmts = Vec::new();
        while !self.eat_punct("}") {
            if self.at_eof() {
                return Err(self.err_expected("`}`"));
            }
            stmts.push(self.stmt()?);
        }
        Ok(Stmt::seq(stmts, open))
    }

    fn local_decl(&mut self) -> Result<Stmt, Diagnostic> {
        let sp = self.span();
        let specs = self.specs()?;
        let mut out = Vec::new();
        for it in self.declaration_rest(specs, false)? {
            match it {
                Item::Decl(d) => out.push(Stmt::new(StmtKind::LocalDecl(d), sp)),
                _ => return Err(Diagnostic::error(sp, "function declarations must be at file scope")),
            }
        }
        Ok(Stmt::seq(out, sp))
    }

    pub(crate) fn stmt(&mut self) -> Result<Stmt, Diagnostic> {
        let sp = self.span();
        if self.starts_type() {
            return self.local_decl();
        }
        match self.peek().clone() {
            Tok::Punct(";") => {
                self.pos += 1;
                Ok(Stmt::null(sp))
            }
            Tok::Punct("{") => self.block_items(),
            Tok::Kw("if") => {
                self.pos += 1;
                self.expect_punct("(")?;
                let c = self.expr()?;
                self.expect_punct(")")?;
                let t = self.stmt()?;
                let e = if self.eat_kw("else") { self.stmt()? } else { Stmt::null(self.span()) };
                Ok(Stmt::new(StmtKind::If(c, Box::new(t), Box::new(e)), sp))
            }
            Tok::Kw("while") => {
                self.pos += 1;
                self.expect_punct("(")?;
                let c = self.expr()?;
                self.expect_punct(")")?;
                let b = self.stmt()?;
                Ok(Stmt::new(StmtKind::While(c, Box::new(b)), sp))
            }
            Tok::Kw("do") => {
                self.pos += 1;
                let b = self.stmt()?;
                if !self.eat_kw("while") {
                    return Err(self.err_expected("`while`"));
                }
                self.expect_punct("(")?;
                let c = self.expr()?;
                self.expect_punct(")")?;
                self.expect_punct(";")?;
                Ok(Stmt::new(StmtKind::Do(Box::new(b), c), sp))
            }
            Tok::Kw("for") => {
                self.pos += 1;
                self.expect_punct("(")?;
                let init = if self.starts_type() {
                    let d = self.local_decl()?;
                    // local_decl consumed the `;`
                    d
                } else {
                    let s = self.simple_stmt()?;
                    self.expect_punct(";")?;
                    s
                };
                let cond = if self.is_punct(";") { None } else { Some(self.expr()?) };
                self.expect_punct(";")?;
                let step = self.simple_stmt()?;
                self.expect_punct(")")?;
                let body = self.stmt()?;
                Ok(Stmt::new(StmtKind::For(Box::new(init), cond, Box::new(step), Box::new(body)), sp))
            }
            Tok::Kw("switch") => self.switch(),
            Tok::Kw("case") | Tok::Kw("default") => {
                // A label outside the arm list of a switch.
                if self.eat_kw("case") {
                    self.case_label()?;
                } else {
                    self.pos += 1;
                }
                self.expect_punct(":")?;
                let s = self.stmt()?;
                Ok(Stmt::new(StmtKind::StrayCase(Box::new(s)), sp))
            }
            Tok::Kw("break") => {
                self.pos += 1;
                self.expect_punct(";")?;
                Ok(Stmt::new(StmtKind::Break, sp))
            }
            Tok::Kw("continue") => {
                self.pos += 1;
                self.expect_punct(";")?;
                Ok(Stmt::new(StmtKind::Continue, sp))
            }
            Tok::Kw("return") => {
                self.pos += 1;
                let e = if self.is_punct(";") { None } else { Some(self.expr()?) };
                self.expect_punct(";")?;
                Ok(Stmt::new(StmtKind::Return(e), sp))
            }
            Tok::Kw("goto") => {
                self.pos += 1;
                let (l, _) = self.ident()?;
                self.expect_punct(";")?;
                Ok(Stmt::new(StmtKind::Goto(l), sp))
            }
            Tok::Ident(l) if matches!(self.peek_at(1), Tok::Punct(":")) => {
                self.pos += 2;
                let s = self.stmt()?;
                Ok(Stmt::new(StmtKind::Labeled(l, Box::new(s)), sp))
            }
            _ => {
                let s = self.simple_stmt()?;
                self.expect_punct(";")?;
                Ok(s)
            }
        }
    }

    /// An expression statement without its `;` (also `for` init and step).
    fn simple_stmt(&mut self) -> Result<Stmt, Diagnostic> {
        let sp = self.span();
        if self.is_punct(";") || self.is_punct(")") {
            return Ok(Stmt::null(sp));
        }
        let e = self.expr()?;
        let kind = match e.kind {
            ExprKind::Assign(l, r) if !matches!(r.kind, ExprKind::Assign(..)) => StmtKind::Assign(*l, *r),
            ExprKind::PostInc(l) => StmtKind::PostInc(*l),
            ExprKind::PostDec(l) => StmtKind::PostDec(*l),
            ExprKind::Call(c, args) => StmtKind::Call(*c, args),
            kind => StmtKind::Expr(Expr { kind, span: e.span, ty: None }),
        };
        Ok(Stmt::new(kind, sp))
    }

    fn case_label(&mut self) -> Result<i64, Diagnostic> {
        let sp = self.span();
        let neg = self.eat_punct("-");
        let v = match self.bump().tok {
            Tok::Int(n, _) => n,
            Tok::Char(c) => c,
            _ => return Err(Diagnostic::error(sp, "case label must be an integer constant")),
        };
        Ok(if neg { -v } else { v })
    }

    fn switch(&mut self) -> Result<Stmt, Diagnostic> {
        let sp = self.span();
        self.pos += 1;
        self.expect_punct("(")?;
        let e = self.expr()?;
        self.expect_punct(")")?;
        self.expect_punct("{")?;
        let mut cases = Vec::new();
        let mut default = None;
        loop {
            let lsp = self.span();
            if self.eat_punct("}") {
                break;
            }
            let label = if self.eat_kw("case") {
                if default.is_some() {
                    return Err(Diagnostic::error(lsp, "`default` must be the last arm of a switch"));
                }
                let v = self.case_label()?;
                if cases.iter().any(|c: &Case| c.label == v) {
                    return Err(Diagnostic::error(lsp, format!("duplicate case label {v}")));
                }
                Some(v)
            } else if self.eat_kw("default") {
                if default.is_some() {
                    return Err(Diagnostic::error(lsp, "duplicate `default` arm"));
                }
                None
            } else {
                return Err(self.err_expected("`case` or `default`"));
            };
            self.expect_punct(":")?;
            let mut body = Vec::new();
            while !(self.is_kw("case") || self.is_kw("default") || self.is_punct("}")) {
                if self.at_eof() {
                    return Err(self.err_expected("`}`"));
                }
                body.push(self.stmt()?);
            }
            let body = Stmt::seq(body, lsp);
            match label {
                Some(v) => cases.push(Case { label: v, body, span: lsp }),
                None => default = Some(body),
            }
        }
        let default = default.ok_or_else(|| Diagnostic::error(sp, "switch without a `default` arm"))?;
        Ok(Stmt::new(StmtKind::Switch(e, cases, Box::new(default)), sp))
    }

    // ---- expressions --------------------------------------------------

    pub(crate) fn expr(&mut self) -> Result<Expr, Diagnostic> {
        let mut e = self.assign_expr()?;
        while self.is_punct(",") {
            let sp = self.span();
            self.pos += 1;
            let r = self.assign_expr()?;
            e = Expr::new(ExprKind::Comma(Box::new(e), Box::new(r)), sp);
        }
        Ok(e)
    }

    fn assign_expr(&mut self) -> Result<Expr, Diagnostic> {
        let l = self.cond_expr()?;
        let sp = self.span();
        if self.eat_punct("=") {
            let r = if self.is_punct("{") {
                let Init::List(items, lsp) = self.init()? else { unreachable!() };
                let flat = items
                    .into_iter()
                    .map(|i| match i {
                        Init::Expr(e) => e,
                        Init::List(_, s) => Expr::new(ExprKind::InitList(vec![]), s),
                    })
                    .collect();
                Expr::new(ExprKind::InitList(flat), lsp)
            } else {
                self.assign_expr()?
            };
            return Ok(Expr::new(ExprKind::Assign(Box::new(l), Box::new(r)), sp));
        }
        if let Tok::Punct(p) = self.peek().clone() {
            if let Some(op) = compound_op(p) {
                self.pos += 1;
                let r = self.assign_expr()?;
                return Ok(Expr::new(ExprKind::CompoundAssign(op, Box::new(l), Box::new(r)), sp));
            }
        }
        Ok(l)
    }

    fn cond_expr(&mut self) -> Result<Expr, Diagnostic> {
        let c = self.binary(1)?;
        if self.is_punct("?") {
            let sp = self.span();
            self.pos += 1;
            let a = self.expr()?;
            self.expect_punct(":")?;
            let b = self.cond_expr()?;
            return Ok(Expr::new(ExprKind::Cond(Box::new(c), Box::new(a), Box::new(b)), sp));
        }
        Ok(c)
    }

    fn binary(&mut self, min: u8) -> Result<Expr, Diagnostic> {
        let mut l = self.unary()?;
        while let Tok::Punct(p) = self.peek().clone() {
            let Some((op, prec)) = binop_of(p) else { break };
            if prec < min {
                break;
            }
            let sp = self.span();
            self.pos += 1;
            let r = self.binary(prec + 1)?;
            l = Expr::new(ExprKind::Binary(op, Box::new(l), Box::new(r)), sp);
        }
        Ok(l)
    }

    fn is_cast(&self) -> bool {
        if !self.is_punct("(") {
            return false;
        }
        match self.peek_at(1) {
            Tok::Kw(k) => is_type_kw(k),
            Tok::Ident(s) => self.typedefs.contains_key(s),
            _ => false,
        }
    }

    fn type_name(&mut self) -> Result<CType, Diagnostic> {
        let specs = self.specs()?;
        if let Some((s, sp)) = specs.storage {
            self.marks.push((sp, Mark::StorageClass(s)));
        }
        let d = self.declarator(true)?;
        if let Some((n, sp)) = d.name() {
            return Err(Diagnostic::error(sp, format!("unexpected identifier `{n}` in type name")));
        }
        self.build(&d, specs.ty)
    }

    fn unary(&mut self) -> Result<Expr, Diagnostic> {
        let sp = self.span();
        if self.is_cast() {
            self.pos += 1;
            let t = self.type_name()?;
            self.expect_punct(")")?;
            let e = self.unary()?;
            return Ok(Expr::new(ExprKind::Cast(t, Box::new(e)), sp));
        }
        if self.eat_kw("sizeof") {
            if self.is_cast() {
                self.pos += 1;
                let t = self.type_name()?;
                self.expect_punct(")")?;
                return Ok(Expr::new(ExprKind::Sizeof(t), sp));
            }
            return Err(Diagnostic::error(sp, "`sizeof` is only accepted with a parenthesized type"));
        }
        let Tok::Punct(p) = self.peek().clone() else { return self.postfix() };
        let wrap = |k: fn(Box<Expr>) -> ExprKind, e: Expr| Expr::new(k(Box::new(e)), sp);
        match p {
            "+" | "-" | "~" | "!" => {
                self.pos += 1;
                let op = match p {
                    "+" => UnOp::Plus,
                    "-" => UnOp::Neg,
                    "~" => UnOp::BitNot,
                    _ => UnOp::Not,
                };
                let e = self.unary()?;
                Ok(Expr::new(ExprKind::Unary(op, Box::new(e)), sp))
            }
            "*" => {
                self.pos += 1;
                let e = self.unary()?;
                Ok(wrap(ExprKind::Deref, e))
            }
            "&" => {
                self.pos += 1;
                let e = self.unary()?;
                Ok(wrap(ExprKind::AddrOf, e))
            }
            "++" => {
                self.pos += 1;
                let e = self.unary()?;
                Ok(wrap(ExprKind::PreInc, e))
            }
            "--" => {
                self.pos += 1;
                let e = self.unary()?;
                Ok(wrap(ExprKind::PreDec, e))
            }
            _ => self.postfix(),
        }
    }

    fn postfix(&mut self) -> Result<Expr, Diagnostic> {
        let mut e = self.primary()?;
        loop {
            let sp = self.span();
            if self.eat_punct("[") {
                let i = self.expr()?;
                self.expect_punct("]")?;
                e = match e.kind {
                    ExprKind::Var(n) => Expr::new(ExprKind::Index(n, Box::new(i)), e.span),
                    ExprKind::Index(n, a) => Expr::new(ExprKind::Index2(n, a, Box::new(i)), e.span),
                    _ => {
                        return Err(Diagnostic::error(
                            sp,
                            "subscripts apply to array or pointer names only (`id[e]` or `id[e][e]`)",
                        ))
                    }
                };
            } else if self.eat_punct("(") {
                let mut args = Vec::new();
                if !self.eat_punct(")") {
                    loop {
                        args.push(self.assign_expr()?);
                        if !self.eat_punct(",") {
                            break;
                        }
                    }
                    self.expect_punct(")")?;
                }
                e = Expr::new(ExprKind::Call(Box::new(e), args), sp);
            } else if self.eat_punct(".") {
                let (f, _) = self.ident()?;
                e = Expr::new(ExprKind::Member(Box::new(e), f), sp);
            } else if self.eat_punct("->") {
                let (f, _) = self.ident()?;
                e = Expr::new(ExprKind::Arrow(Box::new(e), f), sp);
            } else if self.eat_punct("++") {
                e = Expr::new(ExprKind::PostInc(Box::new(e)), sp);
            } else if self.eat_punct("--") {
                e = Expr::new(ExprKind::PostDec(Box::new(e)), sp);
            } else {
                return Ok(e);
            }
        }
    }

    fn primary(&mut self) -> Result<Expr, Diagnostic> {
        let sp = self.span();
        let kind = match self.peek().clone() {
            Tok::Ident(s) => ExprKind::Var(s),
            Tok::Int(n, t) => ExprKind::Int(n, t),
            Tok::Float(x, single) => ExprKind::Float(x, single),
            Tok::Char(c) => ExprKind::Char(c),
            Tok::Str(s) => {
                self.pos += 1;
                let mut s = s;
                // Adjacent literals concatenate.
                while let Tok::Str(t) = self.peek().clone() {
                    s.push_str(&t);
                    self.pos += 1;
                }
                return Ok(Expr::new(ExprKind::Str(s), sp));
            }
            Tok::Punct("(") => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect_punct(")")?;
                return Ok(e);
            }
            _ => return Err(self.err_expected("expression")),
        };
        self.pos += 1;
        Ok(Expr::new(kind, sp))
    }
}

/// The literal value of an integer constant expression as written in a
/// declaration or label (`n`, `-n`, `'c'`).
pub fn const_int(e: &Expr) -> Option<i64> {
    match &e.kind {
        ExprKind::Int(n, _) | ExprKind::Char(n) => Some(*n),
        ExprKind::Unary(UnOp::Neg, x) => const_int(x).map(|v| -v),
        ExprKind::Unary(UnOp::Plus, x) => const_int(x),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::IntTy;

    fn first_decl(src: &str) -> Decl {
        match parse_source(src).unwrap().items.remove(0) {
            Item::Decl(d) => d,
            other => panic!("not a declaration: {other:?}"),
        }
    }

    #[test]
    fn declaration_with_initializer() {
        let Decl::Vars(ty, vs) = first_decl("int i=0;") else { panic!() };
        assert_eq!(ty, CType::INT);
        assert_eq!(vs.len(), 1);
        assert_eq!(vs[0].name, "i");
        assert!(matches!(&vs[0].init, Some(Init::Expr(e)) if e.kind == ExprKind::Int(0, IntTy::I32)));
    }

    #[test]
    fn conditional_expression() {
        let e = parse_expr("e1?e2:e3").unwrap();
        let ExprKind::Cond(a, b, c) = e.kind else { panic!() };
        assert_eq!(a.kind, ExprKind::Var("e1".into()));
        assert_eq!(b.kind, ExprKind::Var("e2".into()));
        assert_eq!(c.kind, ExprKind::Var("e3".into()));
    }

    #[test]
    fn switch_needs_default() {
        let e = parse_stmts("switch(e){case 1: ;}").unwrap_err();
        assert!(e.message.contains("default"), "{}", e.message);
    }

    #[test]
    fn two_dimensional_index() {
        let e = parse_expr("a[i][j]").unwrap();
        assert!(matches!(e.kind, ExprKind::Index2(ref n, _, _) if n == "a"));
    }

    #[test]
    fn precedence_is_c89() {
        let e = parse_expr("a + b * c == d && e || f").unwrap();
        let ExprKind::Binary(BinOp::Or, l, _) = e.kind else { panic!() };
        let ExprKind::Binary(BinOp::And, l, _) = l.kind else { panic!() };
        let ExprKind::Binary(BinOp::Eq, l, _) = l.kind else { panic!() };
        let ExprKind::Binary(BinOp::Add, _, r) = l.kind else { panic!() };
        assert!(matches!(r.kind, ExprKind::Binary(BinOp::Mul, _, _)));
        let e = parse_expr("a - b - c").unwrap();
        let ExprKind::Binary(BinOp::Sub, l, _) = e.kind else { panic!() };
        assert!(matches!(l.kind, ExprKind::Binary(BinOp::Sub, _, _)));
    }

    #[test]
    fn declarators() {
        let Decl::Vars(_, vs) = first_decl("int (*fp)(int, int), *p, a[2][3];") else { panic!() };
        assert_eq!(vs[0].ty.declare("fp"), "int (*fp)(int, int)");
        assert_eq!(vs[1].ty, CType::ptr(CType::INT));
        assert_eq!(vs[2].ty, CType::Array(Box::new(CType::INT), vec![2, 3]));
        let Decl::Vars(_, vs) = first_decl("int a[] = {1, 2};") else { panic!() };
        assert_eq!(vs[0].ty, CType::Array(Box::new(CType::INT), vec![2]));
        assert!(vs[0].open_extent);
    }

    #[test]
    fn program_shape() {
        let p = parse_source(
            "struct S { int x; int y; };\nextern int get(void);\nint f(int a) { int t; t = a; return t; }\nint main(int argc, char **argv) { return f(1); }",
        )
        .unwrap();
        assert_eq!(p.items.len(), 4);
        assert!(p.is_extern("get"));
        let f = p.func("f").unwrap();
        assert_eq!(f.params.len(), 1);
        assert_eq!(f.locals.len(), 1);
    }

    #[test]
    fn statement_shapes() {
        let s = parse_stmts("x++; y = 1; f(x); if (x) y = 2;").unwrap();
        let mut kinds = Vec::new();
        s.walk(&mut |s| kinds.push(std::mem::discriminant(&s.kind)));
        assert!(kinds.contains(&std::mem::discriminant(&StmtKind::PostInc(Expr::new(ExprKind::Int(0, IntTy::I32), Span::default())))));
        let s = parse_stmts("x = y = z;").unwrap();
        assert!(matches!(s.kind, StmtKind::Expr(_)));
    }

    #[test]
    fn marks_for_negative_constructs() {
        let p = parse_source("typedef int T; static const T x; union U { int a; }; int f(int n, ...);").unwrap();
        assert!(p.marks.iter().any(|(_, m)| *m == Mark::StorageClass("typedef")));
        assert!(p.marks.iter().any(|(_, m)| *m == Mark::StorageClass("static")));
        assert!(p.marks.iter().any(|(_, m)| *m == Mark::Qualifier("const")));
        assert!(p.marks.iter().any(|(_, m)| *m == Mark::Union));
        assert!(p.marks.iter().any(|(_, m)| *m == Mark::Variadic));
    }

    #[test]
    fn syntax_error_position() {
        let e = parse_source("int main() { x = ; }").unwrap_err();
        assert_eq!((e.span.line, e.span.col), (1, 18));
        assert!(e.message.contains("expected expression"));
    }
}
