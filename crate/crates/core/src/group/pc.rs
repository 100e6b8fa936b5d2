use super::build::table_from_right_actions;
use super::{is_prime, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

/// A product of generator powers, `[(i, e), …]` meaning `gᵢ^e ⋯`.
pub type PcWord = Vec<(usize, u32)>;

/// Power-commutator presentation of a group of order `p^k` with generators
/// `g₀ … g_{k-1}`, relations `gᵢ^p = wᵢ` (word in later generators) and
/// `[gⱼ, gᵢ] = w_{ji}` for `j > i` (word in generators after `gⱼ`).
/// Unspecified relations are trivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcPresentation {
    pub p: u32,
    pub names: Vec<String>,
    powers: Vec<PcWord>,
    commutators: Vec<Vec<PcWord>>,
}

impl PcPresentation {
    pub fn new(p: u32, names: Vec<String>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let k = names.len();
        Ok(Self {
            p,
            names,
            powers: vec![Vec::new(); k],
            commutators: vec![vec![Vec::new(); k]; k],
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn power(&self, i: usize) -> &PcWord {
        &self.powers[i]
    }

    pub fn commutator(&self, j: usize, i: usize) -> &PcWord {
        &self.commutators[j][i]
    }

    pub fn set_power(&mut self, i: usize, w: PcWord) -> Result<()> {
        self.check_word(&w, i)?;
        self.powers[i] = w;
        Ok(())
    }

    /// Sets `[gⱼ, gᵢ]`; requires `j > i`.
    pub fn set_commutator(&mut self, j: usize, i: usize, w: PcWord) -> Result<()> {
        if j <= i || j >= self.len() {
            return Err(Error::InvalidInput(format!(
                "commutator [{}, {}] must list the later generator first",
                self.name(j),
                self.name(i)
            )));
        }
        self.check_word(&w, j)?;
        self.commutators[j][i] = w;
        Ok(())
    }

    fn name(&self, i: usize) -> &str {
        self.names.get(i).map(String::as_str).unwrap_or("?")
    }

    fn check_word(&self, w: &PcWord, after: usize) -> Result<()> {
        if after >= self.len() {
            return Err(Error::InvalidInput(format!("generator index {after} out of range")));
        }
        for &(g, _) in w {
            if g <= after || g >= self.len() {
                return Err(Error::InvalidInput(format!(
                    "relation for {} may only involve generators after it, found {}",
                    self.name(after),
                    self.name(g)
                )));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> Option<usize> {
        (self.p as usize).checked_pow(self.len() as u32)
    }

    /// Index of the normal word `g₀^{e₀} ⋯ g_{k-1}^{e_{k-1}}`.
    pub fn word_index(&self, exps: &[u32]) -> u32 {
        exps.iter().fold(0u32, |acc, &e| acc * self.p + e)
    }

    pub fn index_word(&self, mut idx: u32) -> Vec<u32> {
        let mut v = vec![0u32; self.len()];
        for slot in v.iter_mut().rev() {
            *slot = idx % self.p;
            idx /= self.p;
        }
        v
    }

    fn letters(word: &PcWord) -> Vec<usize> {
        word.iter()
            .flat_map(|&(g, e)| std::iter::repeat_n(g, e as usize))
            .collect()
    }

    /// Multiplies the normal word `exps` on the right by `gᵢ` (collection
    /// from the left).
    pub fn mul_gen(&self, exps: &mut [u32], i: usize) {
        let k = self.len();
        let tail: Vec<u32> = exps[i + 1..].to_vec();
        exps[i + 1..].iter_mut().for_each(|e| *e = 0);
        exps[i] += 1;
        if exps[i] == self.p {
            exps[i] = 0;
            for g in Self::letters(&self.powers[i]) {
                self.mul_gen(exps, g);
            }
        }
        // the tail conjugated by gᵢ: each gⱼ becomes gⱼ·[gⱼ, gᵢ]
        for j in i + 1..k {
            for _ in 0..tail[j - i - 1] {
                self.mul_gen(exps, j);
                for g in Self::letters(&self.commutators[j][i]) {
                    self.mul_gen(exps, g);
                }
            }
        }
    }

    /// Builds and validates the group; any failure of the group axioms means
    /// the relations are inconsistent.
    pub fn to_group(&self) -> Result<FiniteGroup> {
        let n = self
            .order()
            .filter(|&n| n <= DEFAULT_ORDER_CAP)
            .ok_or(Error::OrderCapExceeded { cap: DEFAULT_ORDER_CAP })?;
        let k = self.len();
        let mut right = vec![vec![0u32; n]; k];
        for x in 0..n as u32 {
            let exps = self.index_word(x);
            for (i, r) in right.iter_mut().enumerate() {
                let mut e = exps.clone();
                self.mul_gen(&mut e, i);
                r[x as usize] = self.word_index(&e);
            }
        }
        let table = table_from_right_actions(n, &right).ok_or_else(|| {
            Error::InconsistentPresentation("normal words are not all reachable".into())
        })?;
        FiniteGroup::from_table(n, table).map_err(|e| {
            Error::InconsistentPresentation(format!("collected multiplication is not a group: {e}"))
        })
    }

    /// Group element index of generator `gᵢ`.
    pub fn generator_index(&self, i: usize) -> u32 {
        let mut e = vec![0u32; self.len()];
        e[i] = 1;
        self.word_index(&e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(s: &[&str]) -> Vec<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn quaternion_group() {
        let mut pc = PcPresentation::new(2, names(&["i", "j", "z"])).unwrap();
        pc.set_power(0, vec![(2, 1)]).unwrap();
        pc.set_power(1, vec![(2, 1)]).unwrap();
        pc.set_commutator(1, 0, vec![(2, 1)]).unwrap();
        let g = pc.to_group().unwrap();
        assert_eq!(g.order(), 8);
        let stats = g.order_statistics();
        assert_eq!(stats.get(&4), Some(&6));
        assert_eq!(stats.get(&2), Some(&1));
    }

    #[test]
    fn elementary_abelian_default() {
        let pc = PcPresentation::new(3, names(&["a", "b"])).unwrap();
        let g = pc.to_group().unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 3);
    }

    #[test]
    fn composite_prime_rejected() {
        assert_eq!(PcPresentation::new(4, names(&["a"])).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn relation_order_enforced() {
        let mut pc = PcPresentation::new(2, names(&["a", "b"])).unwrap();
        assert!(pc.set_power(1, vec![(0, 1)]).is_err());
        assert!(pc.set_commutator(0, 1, vec![]).is_err());
    }

    #[test]
    fn inconsistent_relations_detected() {
        // c = a^2 commutes with a, so [c, a] = d forces d = 1
        let mut pc = PcPresentation::new(2, names(&["a", "b", "c", "d"])).unwrap();
        pc.set_power(0, vec![(2, 1)]).unwrap();
        pc.set_commutator(2, 0, vec![(3, 1)]).unwrap();
        assert!(matches!(pc.to_group(), Err(Error::InconsistentPresentation(_))));
    }

    #[test]
    fn nonabelian_order_27_exponent_3() {
        let mut pc = PcPresentation::new(3, names(&["a", "b", "c"])).unwrap();
        pc.set_commutator(1, 0, vec![(2, 1)]).unwrap();
        let g = pc.to_group().unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.exponent(), 3);
        assert!(!g.is_abelian());
    }
}
