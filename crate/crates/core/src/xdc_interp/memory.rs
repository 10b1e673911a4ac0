//! Block-structured byte memory.
//!
//! Every block has bounds `[0, size)`; block 0 is the null block and is never
//! allocated. Pointer and string values are stored as tagged fragments so a
//! pointer survives a round trip through memory without being forged from
//! integers.

use crate::types::{Chunk, IntTy};
use crate::value::{Ptr, Value};

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Undef,
    Byte(u8),
    /// Byte `k` of a 4-byte pointer or string value.
    Frag(Value, u8),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    pub cells: Vec<Cell>,
    pub live: bool,
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum MemError {
    #[error("access through a null pointer")]
    Null,
    #[error("access to unallocated block {0}")]
    NoBlock(u32),
    #[error("access to freed block {0}")]
    Freed(u32),
    #[error("access of {size} bytes at offset {off} is outside block {block} of size {len}")]
    Bounds { block: u32, off: i64, size: u32, len: usize },
    #[error("partial read of a stored pointer")]
    Fragment,
    #[error("cannot store {0} in a {1:?} cell")]
    Shape(String, Chunk),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Memory {
    blocks: Vec<Block>,
}

impl Default for Memory {
    fn default() -> Self {
        Memory { blocks: vec![Block { cells: vec![], live: false }] }
    }
}

impl Memory {
    /// A fresh block of `size` undefined bytes. Blocks are never reused.
    pub fn alloc(&mut self, size: u32) -> u32 {
        self.blocks.push(Block { cells: vec![Cell::Undef; size as usize], live: true });
        (self.blocks.len() - 1) as u32
    }

    pub fn free(&mut self, b: u32) {
        if let Some(bl) = self.blocks.get_mut(b as usize) {
            bl.live = false;
        }
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_live(&self, b: u32) -> bool {
        self.blocks.get(b as usize).is_some_and(|x| x.live)
    }

    pub fn size(&self, b: u32) -> Option<usize> {
        self.blocks.get(b as usize).map(|x| x.cells.len())
    }

    /// True when the first `n` blocks are identical in both memories.
    pub fn same_prefix(&self, other: &Memory, n: usize) -> bool {
        self.blocks.len() >= n && other.blocks.len() >= n && self.blocks[..n] == other.blocks[..n]
    }

    fn range(&self, p: Ptr, size: u32) -> Result<(usize, usize), MemError> {
        if p.is_null() {
            return Err(MemError::Null);
        }
        let bl = self.blocks.get(p.block as usize).ok_or(MemError::NoBlock(p.block))?;
        if !bl.live {
            return Err(MemError::Freed(p.block));
        }
        let len = bl.cells.len();
        if p.off < 0 || p.off + size as i64 > len as i64 {
            return Err(MemError::Bounds { block: p.block, off: p.off, size, len });
        }
        Ok((p.block as usize, p.off as usize))
    }

    /// Reads a value; `Value::Undef` if any byte is undefined.
    pub fn load(&self, chunk: Chunk, p: Ptr) -> Result<Value, MemError> {
        let size = chunk.size();
        let (b, o) = self.range(p, size)?;
        let cells = &self.blocks[b].cells[o..o + size as usize];
        if cells.contains(&Cell::Undef) {
            return Ok(Value::Undef);
        }
        if let Cell::Frag(v, _) = &cells[0] {
            let whole = chunk == Chunk::I32
                && cells.iter().enumerate().all(|(k, c)| matches!(c, Cell::Frag(w, j) if w == v && *j as usize == k));
            return if whole { Ok(v.clone()) } else { Err(MemError::Fragment) };
        }
        let mut bytes = [0u8; 8];
        for (k, c) in cells.iter().enumerate() {
            match c {
                Cell::Byte(x) => bytes[k] = *x,
                _ => return Err(MemError::Fragment),
            }
        }
        Ok(decode(chunk, bytes))
    }

    pub fn store(&mut self, chunk: Chunk, p: Ptr, v: &Value) -> Result<(), MemError> {
        let size = chunk.size();
        let (b, o) = self.range(p, size)?;
        let cells = encode(chunk, v)?;
        self.blocks[b].cells[o..o + size as usize].clone_from_slice(&cells);
        Ok(())
    }
}

fn decode(chunk: Chunk, b: [u8; 8]) -> Value {
    match chunk {
        Chunk::I8S => Value::Int(b[0] as i8 as i64, IntTy { bits: 8, signed: true }),
        Chunk::I8U => Value::Int(b[0] as i64, IntTy { bits: 8, signed: false }),
        Chunk::I16S => Value::Int(i16::from_le_bytes([b[0], b[1]]) as i64, IntTy { bits: 16, signed: true }),
        Chunk::I16U => Value::Int(u16::from_le_bytes([b[0], b[1]]) as i64, IntTy { bits: 16, signed: false }),
        Chunk::I32 => Value::Int(i32::from_le_bytes([b[0], b[1], b[2], b[3]]) as i64, IntTy::I32),
        Chunk::F32 => Value::F32(f32::from_le_bytes([b[0], b[1], b[2], b[3]])),
        Chunk::F64 => Value::F64(f64::from_le_bytes(b)),
    }
}

fn encode(chunk: Chunk, v: &Value) -> Result<Vec<Cell>, MemError> {
    let bytes = |bs: &[u8]| bs.iter().map(|x| Cell::Byte(*x)).collect::<Vec<_>>();
    let size = chunk.size() as usize;
    Ok(match (chunk, v) {
        (_, Value::Undef) => vec![Cell::Undef; size],
        (Chunk::F32, Value::F32(x)) => bytes(&x.to_le_bytes()),
        (Chunk::F64, Value::F64(x)) => bytes(&x.to_le_bytes()),
        (Chunk::F32 | Chunk::F64, _) => return Err(MemError::Shape(v.to_string(), chunk)),
        (Chunk::I32, Value::Ptr(_) | Value::Str(_)) => (0..4).map(|k| Cell::Frag(v.clone(), k)).collect(),
        (_, Value::Int(n, _)) => bytes(&n.to_le_bytes()[..size]),
        _ => return Err(MemError::Shape(v.to_string(), chunk)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn store_load_round_trip() {
        let mut m = Memory::default();
        let b = m.alloc(8);
        let p = Ptr::new(b, 0);
        for (chunk, v) in [
            (Chunk::I8S, Value::Int(-3, IntTy { bits: 8, signed: true })),
            (Chunk::I16U, Value::Int(65000, IntTy { bits: 16, signed: false })),
            (Chunk::I32, Value::int(-70000)),
            (Chunk::F32, Value::F32(1.5)),
            (Chunk::F64, Value::F64(-2.25)),
            (Chunk::I32, Value::Ptr(Ptr::new(7, 12))),
        ] {
            m.store(chunk, p, &v).unwrap();
            assert_eq!(m.load(chunk, p).unwrap(), v);
        }
    }

    #[test]
    fn bounds_and_lifetime() {
        let mut m = Memory::default();
        let b = m.alloc(4);
        assert!(matches!(m.load(Chunk::I32, Ptr::new(b, 1)), Err(MemError::Bounds { .. })));
        assert_eq!(m.load(Chunk::I32, Ptr::new(b, 0)), Ok(Value::Undef));
        assert_eq!(m.load(Chunk::I8S, Ptr::NULL), Err(MemError::Null));
        m.free(b);
        assert_eq!(m.load(Chunk::I32, Ptr::new(b, 0)), Err(MemError::Freed(b)));
        assert_ne!(m.alloc(4), b);
    }

    #[test]
    fn pointer_bytes_are_opaque() {
        let mut m = Memory::default();
        let b = m.alloc(4);
        m.store(Chunk::I32, Ptr::new(b, 0), &Value::Ptr(Ptr::new(3, 0))).unwrap();
        assert_eq!(m.load(Chunk::I8U, Ptr::new(b, 0)), Err(MemError::Fragment));
    }
}
