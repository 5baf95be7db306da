//! Automorphism groups of Cayley tables.
//!
//! Automorphisms are found level by level along the greedy generating
//! sequence `s_0, …, s_{d-1}`: for level `i`, the automorphisms fixing
//! `s_0, …, s_{i-1}` are known once a representative is found for every orbit
//! point of `s_i`. Candidates already in the orbit under the automorphisms
//! found so far are skipped.

use std::collections::HashMap;
use std::sync::Arc;

use rand::Rng;

use super::search::{SourceGraph, Search, DEFAULT_NODE_BUDGET};
use super::CayleyTable;
use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};

#[derive(Clone, Debug)]
pub struct AutGroup {
    table: Arc<CayleyTable>,
    /// `Aut T` acting on element indices.
    pub autos: PermGroup,
    /// `Inn T = {i_g}`, a normal subgroup of `autos`.
    pub inner: PermGroup,
    /// Backtracking nodes visited.
    pub nodes: u64,
}

impl AutGroup {
    pub fn compute(table: Arc<CayleyTable>, node_budget: u64) -> Result<AutGroup> {
        let (gens, nodes) = automorphism_generators(&table, node_budget)?;
        let n = table.order();
        let autos = PermGroup::new(n, gens)?;
        let inner_gens = table
            .generators()
            .iter()
            .map(|&g| inner_automorphism(&table, g))
            .collect();
        let inner = PermGroup::new(n, inner_gens)?;
        Ok(AutGroup {
            table,
            autos,
            inner,
            nodes,
        })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn shared_table(&self) -> Arc<CayleyTable> {
        Arc::clone(&self.table)
    }

    /// `i_g : x ↦ g x g⁻¹`.
    pub fn inn(&self, g: u32) -> Permutation {
        inner_automorphism(&self.table, g)
    }

    pub fn order(&self) -> u128 {
        self.autos.order()
    }

    pub fn is_complete(&self) -> bool {
        self.autos.order() == self.inner.order()
    }

    /// Checks the structural invariants, returning a description of each violation.
    pub fn check_invariants<R: Rng + ?Sized>(&self, rng: &mut R, samples: usize) -> Vec<String> {
        let t = &self.table;
        let mut violations = Vec::new();
        for a in self.autos.generators() {
            if !is_automorphism(t, a) {
                violations.push(format!("generator {} is not an automorphism", a));
            }
        }
        if !self.inner.is_normal_in(&self.autos) {
            violations.push("Inn is not normal in Aut".into());
        }
        let centre = t.center().len() as u128;
        if self.inner.order() * centre != t.order() as u128 {
            violations.push(format!(
                "|Inn| = {} but |G|/|Z(G)| = {}/{}",
                self.inner.order(),
                t.order(),
                centre
            ));
        }
        if !self.autos.order().is_multiple_of(self.inner.order()) {
            violations.push("|Inn| does not divide |Aut|".into());
        }
        for pi in self.autos.generators() {
            let pi_inv = pi.inverse();
            for _ in 0..samples {
                let g = rng.gen_range(0..t.order() as u32);
                let lhs = &(pi * &self.inn(g)) * &pi_inv;
                if lhs != self.inn(pi.apply(g)) {
                    violations.push(format!("π i_g π⁻¹ ≠ i_π(g) for g = {}", g));
                }
            }
        }
        violations
    }
}

pub(crate) fn inner_automorphism(t: &CayleyTable, g: u32) -> Permutation {
    Permutation::from_images_unchecked((0..t.order() as u32).map(|x| t.conj(g, x)).collect())
}

/// Whether a permutation of element indices respects multiplication.
pub(crate) fn is_automorphism(t: &CayleyTable, p: &Permutation) -> bool {
    if p.degree() != t.order() || p.apply(0) != 0 {
        return false;
    }
    let gens = t.generators();
    (0..t.order() as u32).all(|x| {
        gens.iter()
            .all(|&s| p.apply(t.mul(x, s)) == t.mul(p.apply(x), p.apply(s)))
    })
}

/// Candidates for the image of each element: elements with an equal profile.
pub(crate) fn profile_buckets(t: &CayleyTable) -> HashMap<&[u64], Vec<u32>> {
    let mut buckets: HashMap<&[u64], Vec<u32>> = HashMap::new();
    for x in 0..t.order() as u32 {
        buckets.entry(t.profile(x)).or_default().push(x);
    }
    buckets
}

fn automorphism_generators(t: &CayleyTable, budget: u64) -> Result<(Vec<Permutation>, u64)> {
    let gens = t.generators().to_vec();
    let d = gens.len();
    if d == 0 {
        return Ok((Vec::new(), 0));
    }
    let src = SourceGraph::from_table(t, &gens);
    let buckets = profile_buckets(t);
    let free: Vec<Vec<u32>> = gens
        .iter()
        .map(|&g| buckets[t.profile(g)].clone())
        .collect();
    let no_pins: [(u32, u32); 0] = [];
    let mut search = Search::new(&src, t, true, &no_pins, budget);
    let mut found: Vec<(usize, Permutation)> = Vec::new();
    let n = t.order();

    for level in (0..d).rev() {
        let orbit_of = |found: &[(usize, Permutation)]| {
            let mut in_orbit = vec![false; n];
            let start = gens[level];
            in_orbit[start as usize] = true;
            let mut orbit = vec![start];
            let mut k = 0;
            while k < orbit.len() {
                for (_, a) in found.iter().filter(|(l, _)| *l >= level) {
                    let y = a.apply(orbit[k]);
                    if !in_orbit[y as usize] {
                        in_orbit[y as usize] = true;
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            in_orbit
        };
        let mut in_orbit = orbit_of(&found);
        for &c in &free[level] {
            if in_orbit[c as usize] {
                continue;
            }
            let mut candidates: Vec<Vec<u32>> = Vec::with_capacity(d);
            candidates.extend(gens[..level].iter().map(|&g| vec![g]));
            candidates.push(vec![c]);
            candidates.extend(free[level + 1..].iter().cloned());
            if let Some(map) = search.run(&candidates, &mut |_, _| true)? {
                found.push((level, Permutation::from_images_unchecked(map)));
                in_orbit = orbit_of(&found);
            }
        }
    }
    let nodes = search.nodes;
    Ok((found.into_iter().map(|(_, a)| a).collect(), nodes))
}

/// Full automorphism group, as permutations of the element indices.
pub fn automorphism_group(t: &CayleyTable) -> Result<AutGroup> {
    AutGroup::compute(Arc::new(t.clone()), DEFAULT_NODE_BUDGET)
}

/// `Aut T = Inn T` for a centreless table.
pub fn is_complete(t: &CayleyTable) -> Result<bool> {
    let centre = t.center().len();
    if centre != 1 {
        return Err(Error::NontrivialCentre { order: centre });
    }
    Ok(automorphism_group(t)?.is_complete())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::to_table;

    fn p(deg: usize, s: &str) -> Permutation {
        Permutation::parse(deg, s).unwrap()
    }

    fn table(deg: usize, gens: &[&str]) -> CayleyTable {
        let g = PermGroup::new(deg, gens.iter().map(|s| p(deg, s)).collect()).unwrap();
        to_table(&g).unwrap()
    }

    #[test]
    fn small_automorphism_groups() {
        let s3 = table(3, &["(0 1 2)", "(0 1)"]);
        let a = automorphism_group(&s3).unwrap();
        assert_eq!(a.order(), 6);
        assert!(a.is_complete());

        let v4 = table(4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        assert_eq!(automorphism_group(&v4).unwrap().order(), 6);

        let d5 = table(5, &["(0 1 2 3 4)", "(1 4)(2 3)"]);
        let a = automorphism_group(&d5).unwrap();
        assert_eq!(a.order(), 20);
        assert_eq!(a.inner.order(), 10);
    }

    #[test]
    fn completeness() {
        let s3 = table(3, &["(0 1 2)", "(0 1)"]);
        assert!(is_complete(&s3).unwrap());
        let a5 = table(5, &["(0 1 2)", "(0 1 3)", "(0 1 4)"]);
        assert!(!is_complete(&a5).unwrap());
        let s5 = table(5, &["(0 1 2 3 4)", "(0 1)"]);
        assert!(is_complete(&s5).unwrap());
        let c4 = table(4, &["(0 1 2 3)"]);
        assert_eq!(
            is_complete(&c4).unwrap_err(),
            Error::NontrivialCentre { order: 4 }
        );
    }

    #[test]
    fn invariants_hold() {
        use rand::SeedableRng;
        let a5 = table(5, &["(0 1 2)", "(0 1 3)", "(0 1 4)"]);
        let a = automorphism_group(&a5).unwrap();
        assert_eq!(a.order(), 120);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        assert!(a.check_invariants(&mut rng, 20).is_empty());
    }

    #[test]
    fn node_budget_is_explicit() {
        let s5 = table(5, &["(0 1 2 3 4)", "(0 1)"]);
        let err = AutGroup::compute(Arc::new(s5), 3).unwrap_err();
        assert!(matches!(err, Error::NodeBudget { budget: 3, .. }));
    }
}
