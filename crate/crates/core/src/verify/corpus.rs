//! Named groups with expected metadata.

use crate::dsl::{build_str, Built};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tag {
    Abelian,
    Nilpotent,
    PGroup,
    /// Semidirect `P ⋊ Q` whose complement acts fixed-point-freely.
    Frobenius,
    ModularNonhamiltonian,
    Hamiltonian,
    /// Order 3125: lattice-level checks take seconds, complexes are
    /// truncated.
    Large,
}

/// Frozen invariants recorded from the construction: element-order census,
/// number of subgroups, d(G) and rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub census: &'static [(u32, usize)],
    pub subgroups: usize,
    pub d: u32,
    pub rank: u32,
}

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub key: &'static str,
    pub spec: &'static str,
    pub order: usize,
    pub tags: &'static [Tag],
    pub fingerprint: Fingerprint,
}

impl CorpusEntry {
    pub fn has(&self, t: Tag) -> bool {
        self.tags.contains(&t)
    }

    pub fn build(&self) -> Result<Built> {
        build_str(self.spec)
    }
}

use Tag::*;

macro_rules! entry {
    ($key:expr, $spec:expr, $order:expr, [$($tag:ident),*], $census:expr, $subs:expr, $d:expr, $rank:expr) => {
        CorpusEntry {
            key: $key,
            spec: $spec,
            order: $order,
            tags: &[$($tag),*],
            fingerprint: Fingerprint { census: $census, subgroups: $subs, d: $d, rank: $rank },
        }
    };
}

pub static CORPUS: &[CorpusEntry] = &[
    entry!("C1", "C(1)", 1, [Abelian, Nilpotent], &[(1, 1)], 1, 0, 0),
    entry!("C2", "C(2)", 2, [Abelian, Nilpotent, PGroup], &[(1, 1), (2, 1)], 2, 1, 1),
    entry!("C3", "C(3)", 3, [Abelian, Nilpotent, PGroup], &[(1, 1), (3, 2)], 2, 1, 1),
    entry!("C4", "C(4)", 4, [Abelian, Nilpotent, PGroup], &[(1, 1), (2, 1), (4, 2)], 3, 1, 1),
    entry!("C5", "C(5)", 5, [Abelian, Nilpotent, PGroup], &[(1, 1), (5, 4)], 2, 1, 1),
    entry!("C6", "C(6)", 6, [Abelian, Nilpotent], &[(1, 1), (2, 1), (3, 2), (6, 2)], 4, 1, 1),
    entry!("C8", "C(8)", 8, [Abelian, Nilpotent, PGroup], &[(1, 1), (2, 1), (4, 2), (8, 4)], 4, 1, 1),
    entry!("C9", "C(9)", 9, [Abelian, Nilpotent, PGroup], &[(1, 1), (3, 2), (9, 6)], 3, 1, 1),
    entry!("C12", "C(12)", 12, [Abelian, Nilpotent], &[(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (12, 4)], 6, 1, 1),
    entry!("V4", "C(2) x C(2)", 4, [Abelian, Nilpotent, PGroup], &[(1, 1), (2, 3)], 5, 2, 2),
    entry!("C4xC2", "C(4) x C(2)", 8, [Abelian, Nilpotent, PGroup], &[(1, 1), (2, 3), (4, 4)], 8, 2, 2),
    entry!("E8", "C(2) x C(2) x C(2)", 8, [Abelian, Nilpotent, PGroup], &[(1, 1), (2, 7)], 16, 3, 3),
    entry!("D8", "SD(C(4), C(2), pow(-1))", 8, [Nilpotent, PGroup], &[(1, 1), (2, 5), (4, 2)], 10, 2, 2),
    entry!("Q8", "PC(2; i,j,z; i^2=z, j^2=z, [j,i]=z)", 8, [Nilpotent, PGroup, Hamiltonian], &[(1, 1), (2, 1), (4, 6)], 6, 2, 2),
    entry!("C8xC2", "C(8) x C(2)", 16, [Abelian, Nilpotent, PGroup], &[(1, 1), (2, 3), (4, 4), (8, 8)], 11, 2, 2),
    entry!("M16", "SD(C(8), C(2), pow(5))", 16, [Nilpotent, PGroup, ModularNonhamiltonian], &[(1, 1), (2, 3), (4, 4), (8, 8)], 11, 2, 2),
    entry!("C3xC3", "C(3) x C(3)", 9, [Abelian, Nilpotent, PGroup], &[(1, 1), (3, 8)], 6, 2, 2),
    entry!("S3", "SD(C(3), C(2), pow(-1))", 6, [Frobenius], &[(1, 1), (2, 3), (3, 2)], 6, 2, 2),
    entry!("D10", "SD(C(5), C(2), pow(-1))", 10, [Frobenius], &[(1, 1), (2, 5), (5, 4)], 8, 2, 2),
    entry!("D12", "SD(C(6), C(2), pow(-1))", 12, [], &[(1, 1), (2, 7), (3, 2), (6, 2)], 16, 2, 2),
    entry!("DIC12", "SD(C(3), C(4), pow(-1))", 12, [], &[(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)], 8, 2, 2),
    entry!("A4", "SD(C(2) x C(2), C(3), mat[0 1; 1 1])", 12, [Frobenius], &[(1, 1), (2, 3), (3, 8)], 10, 2, 2),
    entry!("GD18", "SD(C(3) x C(3), C(2), pow(-1))", 18, [Frobenius], &[(1, 1), (2, 9), (3, 8)], 28, 3, 3),
    entry!("F20", "SD(C(5), C(4), pow(2))", 20, [Frobenius], &[(1, 1), (2, 5), (4, 10), (5, 4)], 14, 2, 2),
    entry!("F21", "SD(C(7), C(3), pow(2))", 21, [Frobenius], &[(1, 1), (3, 14), (7, 6)], 10, 2, 2),
    entry!("S4", "Perm(4; (0 1 2 3), (0 1))", 24, [], &[(1, 1), (2, 9), (3, 8), (4, 6)], 30, 2, 2),
    entry!("SL23", "SD(Q8, C(3), imgs{g2, g1*g2, g3})", 24, [], &[(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)], 15, 2, 2),
    entry!("C9xC3", "C(9) x C(3)", 27, [Abelian, Nilpotent, PGroup], &[(1, 1), (3, 8), (9, 18)], 10, 2, 2),
    entry!("ES27", "SD(C(9), C(3), pow(4))", 27, [Nilpotent, PGroup, ModularNonhamiltonian], &[(1, 1), (3, 8), (9, 18)], 10, 2, 2),
    entry!("C12xC2", "C(12) x C(2)", 24, [Abelian, Nilpotent], &[(1, 1), (2, 3), (3, 2), (4, 4), (6, 6), (12, 8)], 16, 2, 2),
    entry!("SG32_32", "PC(2; a,b,c,d,e; a^2=d, b^2=e, c^2=d*e, [b,a]=e, [c,a]=d)", 32, [Nilpotent, PGroup], &[(1, 1), (2, 3), (4, 28)], 34, 3, 3),
    entry!("G42_1", "SD(C(7), C(6), pow(-1))", 42, [], &[(1, 1), (2, 7), (3, 2), (6, 14), (7, 6), (21, 12)], 20, 2, 2),
    entry!("G42_2", "SD(C(7), C(6), pow(2))", 42, [], &[(1, 1), (2, 1), (3, 14), (6, 14), (7, 6), (14, 6)], 20, 2, 2),
    entry!("P48", "SD(C(4) x C(4), C(3), mat[0 3; 1 3])", 48, [Frobenius], &[(1, 1), (2, 3), (3, 32), (4, 12)], 36, 2, 2),
    entry!("F75", "SD(C(5) x C(5), C(3), mat[0 4; 1 4])", 75, [Frobenius], &[(1, 1), (3, 50), (5, 24)], 34, 2, 2),
    entry!("C9xC9", "C(9) x C(9)", 81, [Abelian, Nilpotent, PGroup], &[(1, 1), (3, 8), (9, 72)], 23, 2, 2),
    entry!("SG81_10", "PC(3; a,b,c,d; a^3=d, b^3=d^2, [b,a]=c, [c,a]=d)", 81, [Nilpotent, PGroup], &[(1, 1), (3, 8), (9, 72)], 23, 2, 2),
    entry!("G605_2", "SD(C(11) x C(11), C(5), mat[3 0; 0 9])", 605, [Frobenius], &[(1, 1), (5, 484), (11, 120)], 158, 2, 2),
    entry!("G605_3", "SD(C(11) x C(11), C(5), mat[3 0; 0 5])", 605, [Frobenius], &[(1, 1), (5, 484), (11, 120)], 158, 2, 2),
    entry!("G605_4", "SD(C(11) x C(11), C(5), mat[3 0; 0 4])", 605, [Frobenius], &[(1, 1), (5, 484), (11, 120)], 158, 2, 2),
    entry!(
        "BLACKBURN5",
        "SD(C(5) x C(5) x C(5) x C(5), C(5), mat[1 1 0 0; 0 1 1 0; 0 0 1 1; 0 0 0 1])",
        3125,
        [Nilpotent, PGroup, Large],
        &[(1, 1), (5, 3124)],
        1901,
        2,
        4
    ),
    entry!("FREE3_5", "PC(5; a,b,c,d,e; [b,a]=c, [c,a]=d, [c,b]=e)", 3125, [Nilpotent, PGroup, Large], &[(1, 1), (5, 3124)], 1901, 2, 3),
];

pub fn entry(key: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.key == key)
}

/// Construction text behind a corpus key.
pub fn lookup(key: &str) -> Option<&'static str> {
    entry(key).map(|e| e.spec)
}
