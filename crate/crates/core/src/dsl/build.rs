use super::{parse_construction, ActionItem, ConstructionSpec, PcRelation, Word};
use crate::error::{Error, Result};
use crate::group::{
    group_from_permutations, make_cyclic, make_direct_product, make_semidirect_product, Action,
    FiniteGroup, PcPresentation, PcWord, DEFAULT_ORDER_CAP,
};

/// A constructed group together with the generator list that actions in
/// enclosing constructions refer to.
#[derive(Clone, Debug)]
pub struct Built {
    pub group: FiniteGroup,
    pub gens: Vec<u32>,
}

const MAX_NAME_DEPTH: usize = 16;

pub fn build_str(text: &str) -> Result<Built> {
    build(&parse_construction(text)?)
}

pub fn build(spec: &ConstructionSpec) -> Result<Built> {
    build_at(spec, 0)
}

fn build_at(spec: &ConstructionSpec, depth: usize) -> Result<Built> {
    match spec {
        ConstructionSpec::Cyclic(n) => {
            let n = usize::try_from(*n).map_err(|_| Error::OrderCapExceeded { cap: DEFAULT_ORDER_CAP })?;
            let group = make_cyclic(n)?;
            let gens = if n > 1 { vec![1] } else { Vec::new() };
            Ok(Built { group, gens })
        }
        ConstructionSpec::DirectProduct(a, b) => {
            let a = build_at(a, depth)?;
            let b = build_at(b, depth)?;
            let nb = b.group.order() as u32;
            let group = make_direct_product(&a.group, &b.group)?;
            let gens = a.gens.iter().map(|&x| x * nb).chain(b.gens.iter().copied()).collect();
            Ok(Built { group, gens })
        }
        ConstructionSpec::Semidirect { normal, acting, action } => {
            let n = build_at(normal, depth)?;
            let h = build_at(acting, depth)?;
            if action.len() != h.gens.len() {
                return Err(Error::DimensionMismatch(format!(
                    "{} action items for {} acting generators",
                    action.len(),
                    h.gens.len()
                )));
            }
            let images = action
                .iter()
                .map(|item| action_images(&n, item))
                .collect::<Result<Vec<_>>>()?;
            let act = Action { n_gens: n.gens.clone(), h_gens: h.gens.clone(), images };
            let group = make_semidirect_product(&n.group, &h.group, &act)?;
            let nh = h.group.order() as u32;
            let gens = n.gens.iter().map(|&x| x * nh).chain(h.gens.iter().copied()).collect();
            Ok(Built { group, gens })
        }
        ConstructionSpec::PcGroup { p, gens, relations } => {
            let p32 = u32::try_from(*p).map_err(|_| Error::NotPrime(*p))?;
            for (i, g) in gens.iter().enumerate() {
                if gens[..i].contains(g) {
                    return Err(Error::InvalidInput(format!("generator {g} listed twice")));
                }
            }
            let mut pc = PcPresentation::new(p32, gens.clone())?;
            let idx = |name: &str| {
                pc_index(gens, name)
            };
            for r in relations {
                match r {
                    PcRelation::Power { gen, word } => {
                        let i = idx(gen)?;
                        pc.set_power(i, pc_word(gens, word)?)?;
                    }
                    PcRelation::Commutator { a, b, word } => {
                        let (j, i) = (idx(a)?, idx(b)?);
                        pc.set_commutator(j, i, pc_word(gens, word)?)?;
                    }
                }
            }
            let group = pc.to_group()?;
            let gens = (0..pc.len()).map(|i| pc.generator_index(i)).collect();
            Ok(Built { group, gens })
        }
        ConstructionSpec::PermGroup { degree, gens } => {
            let degree = *degree as usize;
            let perms = gens
                .iter()
                .map(|cycles| cycles_to_perm(degree, cycles))
                .collect::<Result<Vec<_>>>()?;
            let (group, elems) = group_from_permutations(degree, &perms, DEFAULT_ORDER_CAP)?;
            let gens = perms
                .iter()
                .map(|p| elems.iter().position(|e| e == p).unwrap() as u32)
                .collect();
            Ok(Built { group, gens })
        }
        ConstructionSpec::Named(name) => {
            if depth >= MAX_NAME_DEPTH {
                return Err(Error::InvalidInput(format!("names nested too deeply at {name}")));
            }
            let text = crate::verify::corpus::lookup(name).ok_or_else(|| Error::UnknownName(name.clone()))?;
            build_at(&parse_construction(text)?, depth + 1)
        }
    }
}

fn pc_index(gens: &[String], name: &str) -> Result<usize> {
    gens.iter()
        .position(|g| g == name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown pc generator {name}")))
}

fn pc_word(gens: &[String], w: &Word) -> Result<PcWord> {
    w.iter()
        .map(|(g, e)| {
            if *e < 0 {
                return Err(Error::InvalidInput(format!(
                    "negative exponent on {g} in a pc relation"
                )));
            }
            Ok((pc_index(gens, g)?, *e as u32))
        })
        .collect()
}

fn cycles_to_perm(degree: usize, cycles: &[Vec<u32>]) -> Result<Vec<u32>> {
    let mut perm: Vec<u32> = (0..degree as u32).collect();
    for c in cycles {
        if let Some(&bad) = c.iter().find(|&&v| v as usize >= degree) {
            return Err(Error::InvalidInput(format!("point {bad} exceeds degree {degree}")));
        }
        let mut cyc: Vec<u32> = (0..degree as u32).collect();
        for (k, &a) in c.iter().enumerate() {
            cyc[a as usize] = c[(k + 1) % c.len()];
        }
        perm = perm.iter().map(|&x| cyc[x as usize]).collect();
    }
    let mut seen = vec![false; degree];
    if perm.iter().any(|&v| std::mem::replace(&mut seen[v as usize], true)) {
        return Err(Error::InvalidInput("cycle lists a point twice".into()));
    }
    Ok(perm)
}

fn eval_word(n: &Built, w: &Word) -> Result<u32> {
    let g = &n.group;
    let mut acc = 0u32;
    for (name, e) in w {
        let k: usize = name
            .strip_prefix('g')
            .and_then(|s| s.parse().ok())
            .filter(|&k| k >= 1 && k <= n.gens.len())
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "unknown generator {name}; the normal factor has g1..g{}",
                    n.gens.len()
                ))
            })?;
        acc = g.mul(acc, g.pow(n.gens[k - 1], *e));
    }
    Ok(acc)
}

fn action_images(n: &Built, item: &ActionItem) -> Result<Vec<u32>> {
    let g = &n.group;
    let r = n.gens.len();
    match item {
        ActionItem::Pow(k) => Ok(n.gens.iter().map(|&x| g.pow(x, *k)).collect()),
        ActionItem::Imgs(ws) => {
            if ws.len() != r {
                return Err(Error::DimensionMismatch(format!(
                    "{} images for {r} normal generators",
                    ws.len()
                )));
            }
            ws.iter().map(|w| eval_word(n, w)).collect()
        }
        ActionItem::Mat(rows) => {
            if rows.len() != r || rows.iter().any(|row| row.len() != r) {
                return Err(Error::DimensionMismatch(format!(
                    "matrix must be {r}×{r} for the normal generators"
                )));
            }
            if !g.is_abelian() {
                return Err(Error::InvalidInput("matrix actions need an abelian normal factor".into()));
            }
            let q = n.gens.first().map_or(1, |&x| g.element_order(x) as u64);
            let homocyclic_basis = n.gens.iter().all(|&x| g.element_order(x) as u64 == q)
                && q.checked_pow(r as u32) == Some(g.order() as u64);
            if !homocyclic_basis {
                return Err(Error::InvalidInput(
                    "matrix actions need a homocyclic normal factor with its generators as basis".into(),
                ));
            }
            Ok((0..r)
                .map(|j| {
                    (0..r).fold(0u32, |acc, i| g.mul(acc, g.pow(n.gens[i], rows[i][j])))
                })
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_three_from_inversion() {
        let b = build_str("SD(C(3), C(2), pow(-1))").unwrap();
        assert_eq!(b.group.order(), 6);
        assert_eq!(b.group.order_statistics().get(&2), Some(&3));
    }

    #[test]
    fn trivial_action_equals_direct_product() {
        let sd = build_str("SD(C(4), C(3), pow(1))").unwrap();
        let dp = build_str("C(4) x C(3)").unwrap();
        assert_eq!(sd.group, dp.group);
    }

    #[test]
    fn order_605_matrix_action() {
        let b = build_str("SD(C(11) x C(11), C(5), mat[3 0; 0 9])").unwrap();
        assert_eq!(b.group.order(), 605);
        assert!(!b.group.is_abelian());
    }

    #[test]
    fn matrix_dimension_checked() {
        assert!(matches!(
            build_str("SD(C(11) x C(11), C(5), mat[3 0 0; 0 9 0; 0 0 1])"),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            build_str("SD(C(4) x C(2), C(2), mat[1 0; 0 1])"),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn quaternion_perm_generators() {
        let b = build_str("Perm(8; (0 1 2 3)(4 5 6 7), (0 4 2 6)(1 7 3 5))").unwrap();
        assert_eq!(b.group.order(), 8);
        assert_eq!(b.group.order_statistics().get(&2), Some(&1));
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(build_str("NOPE"), Err(Error::UnknownName(_))));
    }
}
