//! The group construction language.
//!
//! ```text
//! expr   := term { "x" term }
//! term   := "C(" INT ")" | "SD(" expr "," expr "," action ")"
//!         | "PC(" INT ";" names ";" rels ")" | "Perm(" INT ";" perms ")"
//!         | NAME | "(" expr ")"
//! action := item { "|" item }          one item per acting generator
//! item   := "pow(" INT ")" | "mat[" row { ";" row } "]" | "imgs{" word { "," word } "}"
//! ```
//!
//! Actions refer to the generator lists of the factors: `C(n)` has the
//! generator 1, a direct product lists the left generators then the right
//! ones, `SD` lists the normal generators then the acting ones, `PC` its pc
//! generators and `Perm` its permutations. Inside `imgs{…}` the normal
//! generators are called `g1, g2, …`; matrix columns are images.

mod build;
mod parse;

use std::fmt;

pub use build::{build, build_str, Built};
pub use parse::parse_construction;

/// Product of generator powers, e.g. `g1*g2^-1` or `d*e`.
pub type Word = Vec<(String, i64)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionItem {
    Pow(i64),
    Mat(Vec<Vec<i64>>),
    Imgs(Vec<Word>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PcRelation {
    /// `g^p = w`
    Power { gen: String, word: Word },
    /// `[a, b] = w`
    Commutator { a: String, b: String, word: Word },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionSpec {
    Cyclic(u64),
    DirectProduct(Box<ConstructionSpec>, Box<ConstructionSpec>),
    Semidirect {
        normal: Box<ConstructionSpec>,
        acting: Box<ConstructionSpec>,
        action: Vec<ActionItem>,
    },
    PcGroup {
        p: u64,
        gens: Vec<String>,
        relations: Vec<PcRelation>,
    },
    /// Degree and generators, each a list of cycles.
    PermGroup { degree: u64, gens: Vec<Vec<Vec<u32>>> },
    Named(String),
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &Word) -> fmt::Result {
    if w.is_empty() {
        return write!(f, "1");
    }
    for (i, (g, e)) in w.iter().enumerate() {
        if i > 0 {
            write!(f, "*")?;
        }
        if *e == 1 {
            write!(f, "{g}")?;
        } else {
            write!(f, "{g}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for ActionItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionItem::Pow(k) => write!(f, "pow({k})"),
            ActionItem::Mat(rows) => {
                write!(f, "mat[")?;
                for (i, r) in rows.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                    write!(f, "{}", cells.join(" "))?;
                }
                write!(f, "]")
            }
            ActionItem::Imgs(ws) => {
                write!(f, "imgs{{")?;
                for (i, w) in ws.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write_word(f, w)?;
                }
                write!(f, "}}")
            }
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionSpec::Cyclic(n) => write!(f, "C({n})"),
            ConstructionSpec::DirectProduct(a, b) => {
                write!(f, "{a} x ")?;
                if matches!(**b, ConstructionSpec::DirectProduct(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            ConstructionSpec::Semidirect { normal, acting, action } => {
                write!(f, "SD({normal}, {acting}, ")?;
                for (i, a) in action.iter().enumerate() {
                    if i > 0 {
                        write!(f, " | ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
            ConstructionSpec::PcGroup { p, gens, relations } => {
                write!(f, "PC({p}; {}", gens.join(","))?;
                if !relations.is_empty() {
                    write!(f, "; ")?;
                }
                for (i, r) in relations.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    match r {
                        PcRelation::Power { gen, word } => {
                            write!(f, "{gen}^{p}=")?;
                            write_word(f, word)?;
                        }
                        PcRelation::Commutator { a, b, word } => {
                            write!(f, "[{a},{b}]=")?;
                            write_word(f, word)?;
                        }
                    }
                }
                write!(f, ")")
            }
            ConstructionSpec::PermGroup { degree, gens } => {
                write!(f, "Perm({degree}; ")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    if g.is_empty() {
                        write!(f, "()")?;
                    }
                    for c in g {
                        let pts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                        write!(f, "({})", pts.join(" "))?;
                    }
                }
                write!(f, ")")
            }
            ConstructionSpec::Named(n) => write!(f, "{n}"),
        }
    }
}
