//! C-level types shared by both languages, with sizes, access modes and
//! packed struct layout.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IntKind {
    Char,
    SChar,
    UChar,
    Short,
    UShort,
    Int,
    UInt,
    Long,
    ULong,
}

/// Machine-level integer shape: width in bits and signedness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IntTy {
    pub bits: u8,
    pub signed: bool,
}

impl IntTy {
    pub const I32: IntTy = IntTy { bits: 32, signed: true };
    pub const U32: IntTy = IntTy { bits: 32, signed: false };

    /// Wraps `v` into the representable range (two's complement).
    pub fn normalize(self, v: i64) -> i64 {
        let bits = self.bits as u32;
        let mask: i64 = (1i64 << bits) - 1;
        let raw = v & mask;
        if self.signed && raw >> (bits - 1) & 1 == 1 {
            raw - (1i64 << bits)
        } else {
            raw
        }
    }
}

impl IntKind {
    pub fn ty(self) -> IntTy {
        use IntKind::*;
        match self {
            Char | SChar => IntTy { bits: 8, signed: true },
            UChar => IntTy { bits: 8, signed: false },
            Short => IntTy { bits: 16, signed: true },
            UShort => IntTy { bits: 16, signed: false },
            Int | Long => IntTy::I32,
            UInt | ULong => IntTy::U32,
        }
    }

    pub fn name(self) -> &'static str {
        use IntKind::*;
        match self {
            Char => "char",
            SChar => "signed char",
            UChar => "unsigned char",
            Short => "short",
            UShort => "unsigned short",
            Int => "int",
            UInt => "unsigned int",
            Long => "long",
            ULong => "unsigned long",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FuncSig {
    pub ret: CType,
    pub params: Vec<CType>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CType {
    Void,
    Int(IntKind),
    Float,
    Double,
    LongDouble,
    /// `Pointer(Void)` is `void*`; `Pointer(Func(..))` is a function pointer.
    Pointer(Box<CType>),
    /// Type of a function designator.
    Func(Box<FuncSig>),
    Struct(String),
    /// Element type and one or two extents.
    Array(Box<CType>, Vec<u32>),
}

/// Memory chunk used by a by-value access.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Chunk {
    I8S,
    I8U,
    I16S,
    I16U,
    I32,
    F32,
    F64,
}

impl Chunk {
    pub fn size(self) -> u32 {
        match self {
            Chunk::I8S | Chunk::I8U => 1,
            Chunk::I16S | Chunk::I16U => 2,
            Chunk::I32 | Chunk::F32 => 4,
            Chunk::F64 => 8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Access {
    ByValue(Chunk),
    ByReference,
    ByNothing,
}

impl CType {
    pub const INT: CType = CType::Int(IntKind::Int);

    pub fn ptr(to: CType) -> CType {
        CType::Pointer(Box::new(to))
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, CType::Int(_))
    }

    pub fn is_float(&self) -> bool {
        matches!(self, CType::Float | CType::Double | CType::LongDouble)
    }

    pub fn is_arith(&self) -> bool {
        self.is_integer() || self.is_float()
    }

    pub fn is_pointer(&self) -> bool {
        matches!(self, CType::Pointer(_))
    }

    pub fn is_scalar(&self) -> bool {
        self.is_arith() || self.is_pointer()
    }

    pub fn is_func_pointer(&self) -> bool {
        matches!(self, CType::Pointer(t) if matches!(**t, CType::Func(_)))
    }

    pub fn pointee(&self) -> Option<&CType> {
        match self {
            CType::Pointer(t) => Some(t),
            _ => None,
        }
    }

    pub fn int_ty(&self) -> Option<IntTy> {
        match self {
            CType::Int(k) => Some(k.ty()),
            _ => None,
        }
    }

    /// Appendix-style access mode table.
    pub fn access(&self) -> Access {
        use IntKind::*;
        match self {
            CType::Int(Char | SChar) => Access::ByValue(Chunk::I8S),
            CType::Int(UChar) => Access::ByValue(Chunk::I8U),
            CType::Int(Short) => Access::ByValue(Chunk::I16S),
            CType::Int(UShort) => Access::ByValue(Chunk::I16U),
            CType::Int(_) => Access::ByValue(Chunk::I32),
            CType::Float => Access::ByValue(Chunk::F32),
            CType::Double | CType::LongDouble => Access::ByValue(Chunk::F64),
            CType::Pointer(_) => Access::ByValue(Chunk::I32),
            CType::Array(..) => Access::ByReference,
            CType::Struct(_) | CType::Void | CType::Func(_) => Access::ByNothing,
        }
    }

    fn base_name(&self) -> String {
        match self {
            CType::Void => "void".into(),
            CType::Int(k) => k.name().into(),
            CType::Float => "float".into(),
            CType::Double => "double".into(),
            CType::LongDouble => "long double".into(),
            CType::Struct(n) => format!("struct {n}"),
            _ => unreachable!("not a base type"),
        }
    }

    /// C declarator syntax for a variable of this type named `name`
    /// (`name` may be empty for an abstract declarator).
    pub fn declare(&self, name: &str) -> String {
        self.declare_inner(name.to_string(), true)
    }

    /// The declarator alone, without the base type: `*p`, `a[3]`, `(*fp)(int)`.
    pub fn declarator(&self, name: &str) -> String {
        self.declare_inner(name.to_string(), false)
    }

    /// The type left after stripping pointers, arrays and function types.
    pub fn base_type(&self) -> &CType {
        match self {
            CType::Pointer(t) | CType::Array(t, _) => t.base_type(),
            CType::Func(sig) => sig.ret.base_type(),
            base => base,
        }
    }

    fn declare_inner(&self, inner: String, with_base: bool) -> String {
        let params = |sig: &FuncSig| {
            if sig.params.is_empty() {
                "void".to_string()
            } else {
                sig.params.iter().map(|p| p.declare("")).collect::<Vec<_>>().join(", ")
            }
        };
        match self {
            CType::Pointer(t) => match &**t {
                CType::Func(sig) => sig.ret.declare_inner(format!("(*{inner})({})", params(sig)), with_base),
                CType::Array(..) => t.declare_inner(format!("(*{inner})"), with_base),
                t => t.declare_inner(format!("*{inner}"), with_base),
            },
            CType::Array(t, dims) => {
                let mut s = inner;
                for d in dims {
                    s.push_str(&format!("[{d}]"));
                }
                t.declare_inner(s, with_base)
            }
            CType::Func(sig) => sig.ret.declare_inner(format!("{inner}({})", params(sig)), with_base),
            base => {
                if !with_base {
                    inner
                } else if inner.is_empty() {
                    base.base_name()
                } else {
                    format!("{} {}", base.base_name(), inner)
                }
            }
        }
    }
}

impl fmt::Display for CType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.declare(""))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructDef {
    pub name: String,
    pub fields: Vec<(String, CType)>,
}

/// Struct definitions in scope, with packed layout queries.
#[derive(Clone, Debug, Default)]
pub struct StructTable {
    defs: BTreeMap<String, StructDef>,
}

/// A scalar leaf of an object: display path suffix, byte offset, type.
#[derive(Clone, Debug, PartialEq)]
pub struct Leaf {
    pub path: String,
    pub offset: u32,
    pub ty: CType,
}

impl StructTable {
    pub fn insert(&mut self, def: StructDef) {
        self.defs.insert(def.name.clone(), def);
    }

    pub fn get(&self, name: &str) -> Option<&StructDef> {
        self.defs.get(name)
    }

    pub fn sizeof(&self, ty: &CType) -> Option<u32> {
        self.sizeof_depth(ty, 0)
    }

    fn sizeof_depth(&self, ty: &CType, depth: u32) -> Option<u32> {
        if depth > 64 {
            return None;
        }
        match ty {
            CType::Void | CType::Func(_) => None,
            CType::Int(k) => Some(k.ty().bits as u32 / 8),
            CType::Float => Some(4),
            CType::Double | CType::LongDouble => Some(8),
            CType::Pointer(_) => Some(4),
            CType::Array(t, dims) => {
                let e = self.sizeof_depth(t, depth + 1)?;
                Some(dims.iter().product::<u32>() * e)
            }
            CType::Struct(n) => {
                let def = self.defs.get(n)?;
                let mut total = 0;
                for (_, t) in &def.fields {
                    total += self.sizeof_depth(t, depth + 1)?;
                }
                Some(total)
            }
        }
    }

    /// Packed field offset: the sum of the sizes of the preceding fields.
    pub fn field(&self, sname: &str, field: &str) -> Option<(u32, CType)> {
        let def = self.defs.get(sname)?;
        let mut off = 0;
        for (n, t) in &def.fields {
            if n == field {
                return Some((off, t.clone()));
            }
            off += self.sizeof(t)?;
        }
        None
    }

    /// All scalar leaves of an object of type `ty`, in layout order.
    pub fn leaves(&self, ty: &CType) -> Vec<Leaf> {
        let mut out = Vec::new();
        self.collect_leaves(ty, String::new(), 0, &mut out);
        out
    }

    fn collect_leaves(&self, ty: &CType, path: String, off: u32, out: &mut Vec<Leaf>) {
        match ty {
            CType::Array(t, dims) => {
                let esz = self.sizeof(t).unwrap_or(0);
                if dims.len() == 2 {
                    for i in 0..dims[0] {
                        for j in 0..dims[1] {
                            let o = off + (i * dims[1] + j) * esz;
                            self.collect_leaves(t, format!("{path}[{i}][{j}]"), o, out);
                        }
                    }
                } else {
                    for i in 0..dims[0] {
                        self.collect_leaves(t, format!("{path}[{i}]"), off + i * esz, out);
                    }
                }
            }
            CType::Struct(n) => {
                if let Some(def) = self.defs.get(n) {
                    let mut o = off;
                    for (f, t) in &def.fields {
                        self.collect_leaves(t, format!("{path}.{f}"), o, out);
                        o += self.sizeof(t).unwrap_or(0);
                    }
                }
            }
            _ => out.push(Leaf { path, offset: off, ty: ty.clone() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> StructTable {
        let mut t = StructTable::default();
        t.insert(StructDef {
            name: "S".into(),
            fields: vec![("a".into(), CType::INT), ("f2".into(), CType::Int(IntKind::Char)), ("d".into(), CType::Double)],
        });
        t
    }

    #[test]
    fn sizes_follow_access_widths() {
        let t = table();
        assert_eq!(t.sizeof(&CType::Int(IntKind::Short)), Some(2));
        assert_eq!(t.sizeof(&CType::Int(IntKind::Long)), Some(4));
        assert_eq!(t.sizeof(&CType::LongDouble), Some(8));
        assert_eq!(t.sizeof(&CType::ptr(CType::Double)), Some(4));
        assert_eq!(t.sizeof(&CType::Struct("S".into())), Some(13));
        assert_eq!(t.sizeof(&CType::Array(Box::new(CType::INT), vec![3, 4])), Some(48));
    }

    #[test]
    fn packed_field_offsets() {
        let t = table();
        assert_eq!(t.field("S", "f2"), Some((4, CType::Int(IntKind::Char))));
        assert_eq!(t.field("S", "d"), Some((5, CType::Double)));
        assert_eq!(t.field("S", "zz"), None);
    }

    #[test]
    fn declarators() {
        let fp = CType::ptr(CType::Func(Box::new(FuncSig { ret: CType::INT, params: vec![CType::INT, CType::INT] })));
        assert_eq!(fp.declare("fp"), "int (*fp)(int, int)");
        let argv = CType::ptr(CType::ptr(CType::Int(IntKind::Char)));
        assert_eq!(argv.declare("argv"), "char **argv");
        let a = CType::Array(Box::new(CType::Int(IntKind::UChar)), vec![256]);
        assert_eq!(a.declare("yy"), "unsigned char yy[256]");
        assert_eq!(CType::ptr(CType::INT).to_string(), "int *");
        let pa = CType::ptr(CType::Array(Box::new(CType::INT), vec![3]));
        assert_eq!(pa.declare("p"), "int (*p)[3]");
        assert_eq!(pa.declarator("p"), "(*p)[3]");
        assert_eq!(fp.base_type(), &CType::INT);
    }

    #[test]
    fn normalize_wraps() {
        assert_eq!(IntKind::UChar.ty().normalize(300), 44);
        assert_eq!(IntKind::Char.ty().normalize(200), -56);
        assert_eq!(IntTy::I32.normalize(1i64 << 31), -(1i64 << 31));
        assert_eq!(IntTy::U32.normalize(-1), 4294967295);
    }

    #[test]
    fn leaves_of_nested_aggregates() {
        let t = table();
        let arr = CType::Array(Box::new(CType::Struct("S".into())), vec![2]);
        let l = t.leaves(&arr);
        assert_eq!(l.len(), 6);
        assert_eq!(l[4].path, "[1].f2");
        assert_eq!(l[4].offset, 17);
    }
}
