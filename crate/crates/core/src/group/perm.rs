use std::collections::HashMap;

use super::build::table_from_right_actions;
use super::FiniteGroup;
use crate::error::{Error, Result};

/// A permutation of `0..degree` in image form: point `i` goes to `self[i]`.
pub type Permutation = Vec<u32>;

/// Closes the given permutations under composition. Products apply the left
/// factor first. Element 0 of the result is the identity permutation and the
/// returned list gives the permutation behind each group element.
pub fn group_from_permutations(
    degree: usize,
    gens: &[Permutation],
    cap: usize,
) -> Result<(FiniteGroup, Vec<Permutation>)> {
    for (k, p) in gens.iter().enumerate() {
        if p.len() != degree {
            return Err(Error::InvalidInput(format!(
                "generator {k} has degree {}, expected {degree}",
                p.len()
            )));
        }
        let mut hit = vec![false; degree];
        for &v in p {
            if v as usize >= degree || std::mem::replace(&mut hit[v as usize], true) {
                return Err(Error::InvalidInput(format!("generator {k} is not a permutation")));
            }
        }
    }
    let identity: Permutation = (0..degree as u32).collect();
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<Permutation, u32> = HashMap::from([(identity, 0)]);
    let mut right: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut head = 0;
    while head < elems.len() {
        for (i, g) in gens.iter().enumerate() {
            let prod: Permutation = elems[head].iter().map(|&x| g[x as usize]).collect();
            let next = index.len() as u32;
            let id = *index.entry(prod).or_insert(next);
            if id == next {
                if elems.len() >= cap {
                    return Err(Error::OrderCapExceeded { cap });
                }
                elems.push(elems[head].iter().map(|&x| g[x as usize]).collect());
            }
            right[i].push(id);
        }
        head += 1;
    }
    let n = elems.len();
    let table = table_from_right_actions(n, &right).expect("closure reaches every element");
    Ok((FiniteGroup::from_valid_table(n, table), elems))
}

/// Parses cycle notation like `(0 1 2)(3 4)` into image form.
pub fn parse_cycles(degree: usize, text: &str) -> Result<Permutation> {
    let mut perm: Permutation = (0..degree as u32).collect();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body_end = rest
            .strip_prefix('(')
            .and_then(|r| r.find(')'))
            .ok_or_else(|| Error::InvalidInput(format!("malformed cycle in {text:?}")))?;
        let body = &rest[1..=body_end];
        let pts = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidInput(format!("bad point in {text:?}: {e}")))?;
        if let Some(&bad) = pts.iter().find(|&&p| p as usize >= degree) {
            return Err(Error::InvalidInput(format!("point {bad} exceeds degree {degree}")));
        }
        for (k, &a) in pts.iter().enumerate() {
            perm[a as usize] = pts[(k + 1) % pts.len()];
        }
        rest = rest[body_end + 2..].trim_start();
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_s3() {
        let a = parse_cycles(3, "(0 1 2)").unwrap();
        let b = parse_cycles(3, "(0 1)").unwrap();
        let (g, elems) = group_from_permutations(3, &[a, b], 100).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(elems[0], vec![0, 1, 2]);
        assert!(!g.is_abelian());
    }

    #[test]
    fn product_applies_left_first() {
        let a = parse_cycles(3, "(0 1)").unwrap();
        let b = parse_cycles(3, "(1 2)").unwrap();
        let (g, elems) = group_from_permutations(3, &[a.clone(), b.clone()], 100).unwrap();
        let ia = elems.iter().position(|p| *p == a).unwrap() as u32;
        let ib = elems.iter().position(|p| *p == b).unwrap() as u32;
        let ab = &elems[g.mul(ia, ib) as usize];
        // 0 -a-> 1 -b-> 2
        assert_eq!(ab[0], 2);
    }

    #[test]
    fn cap_enforced() {
        let a = parse_cycles(5, "(0 1 2 3 4)").unwrap();
        let b = parse_cycles(5, "(0 1)").unwrap();
        assert!(matches!(
            group_from_permutations(5, &[a, b], 50),
            Err(Error::OrderCapExceeded { cap: 50 })
        ));
    }

    #[test]
    fn no_generators_is_trivial() {
        let (g, _) = group_from_permutations(4, &[], 10).unwrap();
        assert_eq!(g.order(), 1);
    }
}
