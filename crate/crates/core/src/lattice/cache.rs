//! Binary lattice serialisation. Layout, all integers little-endian:
//! magic, version, group fingerprint (64 hex bytes), n, s, then per subgroup
//! its generators, member words, containment words, d, lower covers and a
//! normality byte; a SHA-256 of everything before it closes the file.

use std::collections::HashMap;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use super::{SubgroupLattice, Subgroup};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

const MAGIC: &[u8; 8] = b"GRPXLAT\0";
pub const CACHE_VERSION: u32 = 1;

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, k: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(k).filter(|&e| e <= self.buf.len());
        let end = end.ok_or_else(|| Error::CorruptCache("unexpected end of data".into()))?;
        let s = &self.buf[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn words(&mut self, k: usize) -> Result<Vec<u64>> {
        let raw = self.take(k * 8)?;
        Ok(raw.chunks_exact(8).map(|c| u64::from_le_bytes(c.try_into().unwrap())).collect())
    }

    fn bounded(&mut self, limit: usize, what: &str) -> Result<u32> {
        let v = self.u32()?;
        if v as usize >= limit {
            return Err(Error::CorruptCache(format!("{what} {v} out of range")));
        }
        Ok(v)
    }
}

fn put_u32(out: &mut Vec<u8>, v: u32) {
    out.extend_from_slice(&v.to_le_bytes());
}

fn put_words(out: &mut Vec<u8>, w: &[u64]) {
    for x in w {
        out.extend_from_slice(&x.to_le_bytes());
    }
}

impl SubgroupLattice {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(MAGIC);
        put_u32(&mut out, CACHE_VERSION);
        out.extend_from_slice(self.group.fingerprint().as_bytes());
        put_u32(&mut out, self.group.order() as u32);
        put_u32(&mut out, self.subs.len() as u32);
        for (i, h) in self.subs.iter().enumerate() {
            put_u32(&mut out, h.gens().len() as u32);
            for &x in h.gens() {
                put_u32(&mut out, x);
            }
            put_words(&mut out, h.members().words());
            put_words(&mut out, self.below[i].words());
            put_u32(&mut out, self.d[i]);
            put_u32(&mut out, self.lower_covers[i].len() as u32);
            for &c in &self.lower_covers[i] {
                put_u32(&mut out, c);
            }
            out.push(self.normal.contains(i) as u8);
        }
        let digest = Sha256::digest(&out);
        out.extend_from_slice(&digest);
        out
    }

    /// Rebuilds a lattice written by [`to_bytes`](Self::to_bytes) for the
    /// same group. Containment and covers are taken from the data rather
    /// than recomputed.
    pub fn from_bytes(group: Arc<FiniteGroup>, bytes: &[u8]) -> Result<Self> {
        if bytes.len() < MAGIC.len() + 4 + 32 || &bytes[..8] != MAGIC {
            return Err(Error::CorruptCache("bad header".into()));
        }
        let version = u32::from_le_bytes(bytes[8..12].try_into().unwrap());
        if version != CACHE_VERSION {
            return Err(Error::CacheVersionMismatch { found: version, expected: CACHE_VERSION });
        }
        let (body, digest) = bytes.split_at(bytes.len() - 32);
        if Sha256::digest(body).as_slice() != digest {
            return Err(Error::CorruptCache("checksum mismatch".into()));
        }
        let mut r = Reader { buf: body, pos: 12 };
        if r.take(64)? != group.fingerprint().as_bytes() {
            return Err(Error::CorruptCache("cache belongs to a different group".into()));
        }
        let n = group.order();
        if r.u32()? as usize != n {
            return Err(Error::CorruptCache("group order differs".into()));
        }
        let s = r.u32()? as usize;
        if s == 0 || s > body.len() {
            return Err(Error::CorruptCache("implausible subgroup count".into()));
        }
        let (nw, sw) = (n.div_ceil(64), s.div_ceil(64));
        let mut subs = Vec::with_capacity(s);
        let mut below = Vec::with_capacity(s);
        let mut d = Vec::with_capacity(s);
        let mut lower_covers = Vec::with_capacity(s);
        let mut normal = BitSet::new(s);
        for i in 0..s {
            let k = r.bounded(n + 1, "generator count")? as usize;
            let gens = (0..k).map(|_| r.bounded(n, "element")).collect::<Result<Vec<_>>>()?;
            let members = BitSet::from_words(n, r.words(nw)?);
            below.push(BitSet::from_words(s, r.words(sw)?));
            d.push(r.u32()?);
            let k = r.bounded(s + 1, "cover count")? as usize;
            lower_covers.push((0..k).map(|_| r.bounded(s, "subgroup")).collect::<Result<Vec<_>>>()?);
            match r.take(1)?[0] {
                0 => {}
                1 => {
                    normal.insert(i);
                }
                _ => return Err(Error::CorruptCache("bad normality flag".into())),
            }
            subs.push(Subgroup::from_parts(members, gens));
        }
        if r.pos != body.len() {
            return Err(Error::CorruptCache("trailing data".into()));
        }
        if subs[0].order() != 1 || !subs[0].contains(0) {
            return Err(Error::CorruptCache("first subgroup is not trivial".into()));
        }
        let index: HashMap<BitSet, u32> = subs
            .iter()
            .enumerate()
            .map(|(i, h)| (h.members().clone(), i as u32))
            .collect();
        if index.len() != s {
            return Err(Error::CorruptCache("duplicate subgroups".into()));
        }
        // every cyclic subgroup must be present for the derived tables
        for x in 0..n as u32 {
            let c = BitSet::from_indices(n, group.powers(x).into_iter().map(|v| v as usize));
            if !index.contains_key(&c) {
                return Err(Error::CorruptCache("missing cyclic subgroup".into()));
            }
        }
        Ok(Self::assemble(group, subs, index, below, lower_covers, Some(d), Some(normal)))
    }

    /// Bit-exact equality of subgroup lists and containment matrices.
    pub fn same_as(&self, other: &SubgroupLattice) -> bool {
        self.group.fingerprint() == other.group.fingerprint()
            && self.subs.len() == other.subs.len()
            && self.subs.iter().zip(&other.subs).all(|(a, b)| a.members() == b.members())
            && self.below == other.below
            && self.d == other.d
            && self.lower_covers == other.lower_covers
            && self.normal == other.normal
    }
}
