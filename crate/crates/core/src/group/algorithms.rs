//! Subgroup algorithms: normalisers, centralisers, normal closures, subnormality.

use std::collections::HashMap;

use serde::Serialize;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

/// Groups up to this order use the exhaustive tiers of normalizer/centralizer.
pub const EXHAUSTIVE_LIMIT: u128 = 200_000;

/// Bound on conjugacy orbits explored by the orbit–stabilizer tiers.
pub const CONJUGATE_ORBIT_CAP: usize = 100_000;

#[derive(Clone, Debug, Serialize)]
pub struct SubnormalCertificate {
    /// `chain[0] = H ⊴ chain[1] ⊴ … ⊴ chain[last] = G`.
    pub chain: Vec<PermGroup>,
    pub defect: usize,
}

impl SubnormalCertificate {
    pub fn is_valid(&self) -> bool {
        self.chain.len() == self.defect + 1
            && self.chain.windows(2).all(|w| w[0].is_normal_in(&w[1]))
    }
}

impl PermGroup {
    /// `N_G(H)` with `G = self`.
    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h, "normalizer")?;
        if self.order() <= EXHAUSTIVE_LIMIT {
            self.normalizer_exhaustive(h)
        } else {
            self.normalizer_by_conjugates(h)
        }
    }

    /// Scans every element of `self`.
    pub fn normalizer_exhaustive(&self, h: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h, "normalizer")?;
        let mut acc = PermGroup::from_incremental(self.degree, h.generators.iter().cloned());
        self.for_each_element(|g| {
            if !acc.has(g) && h.generators.iter().all(|x| h.has(&x.conjugate_by(g))) {
                let gens = acc
                    .generators
                    .iter()
                    .cloned()
                    .chain(std::iter::once(g.clone()));
                acc = PermGroup::from_incremental(self.degree, gens);
            }
            true
        })?;
        Ok(acc)
    }

    /// Orbit–stabilizer on the conjugation action of `self` on conjugates of `h`;
    /// cost scales with the index `[G : N_G(H)]`.
    pub fn normalizer_by_conjugates(&self, h: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h, "normalizer")?;
        let mut orbit: Vec<PermGroup> = vec![h.clone()];
        let mut reps: Vec<Permutation> = vec![self.identity()];
        let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        buckets.entry(orbit_signature(h)).or_default().push(0);
        let mut schreier = Vec::new();
        let mut k = 0;
        while k < orbit.len() {
            for s in &self.generators {
                let image = orbit[k].conjugate(s);
                let key = orbit_signature(&image);
                let hit = buckets
                    .get(&key)
                    .and_then(|ids| ids.iter().copied().find(|&j| orbit[j].same_group(&image)));
                match hit {
                    Some(j) => {
                        // u_j⁻¹ s u_k maps H to itself.
                        schreier.push(&(&reps[j].inverse() * s) * &reps[k]);
                    }
                    None => {
                        if orbit.len() >= CONJUGATE_ORBIT_CAP {
                            return Err(Error::OrderCap {
                                order: orbit.len() as u128,
                                cap: CONJUGATE_ORBIT_CAP as u128,
                                what: "conjugacy orbit of subgroup",
                            });
                        }
                        let j = orbit.len();
                        buckets.entry(key).or_default().push(j);
                        reps.push(s * &reps[k]);
                        orbit.push(image);
                    }
                }
            }
            k += 1;
        }
        let gens = h.generators.iter().cloned().chain(schreier);
        Ok(PermGroup::from_incremental(self.degree, gens))
    }

    /// `C_G(H)` with `G = self`.
    pub fn centralizer(&self, h: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(h, "centralizer")?;
        if self.order() <= EXHAUSTIVE_LIMIT {
            self.centralizer_exhaustive(h)
        } else {
            self.centralizer_by_conjugates(h)
        }
    }

    pub fn centralizer_exhaustive(&self, h: &PermGroup) -> Result<PermGroup> {
        self.check_degree(h.degree)?;
        let mut acc = PermGroup::trivial(self.degree);
        self.for_each_element(|g| {
            if !acc.has(g) && h.generators.iter().all(|x| x.commutes_with(g)) {
                let gens = acc
                    .generators
                    .iter()
                    .cloned()
                    .chain(std::iter::once(g.clone()));
                acc = PermGroup::from_incremental(self.degree, gens);
            }
            true
        })?;
        Ok(acc)
    }

    /// Stabilizer of the generator tuple of `h` under conjugation.
    pub fn centralizer_by_conjugates(&self, h: &PermGroup) -> Result<PermGroup> {
        self.check_degree(h.degree)?;
        let start: Vec<Permutation> = h.generators.clone();
        let mut index: HashMap<Vec<Permutation>, usize> = HashMap::new();
        index.insert(start.clone(), 0);
        let mut orbit = vec![start];
        let mut reps = vec![self.identity()];
        let mut schreier = Vec::new();
        let mut k = 0;
        while k < orbit.len() {
            for s in &self.generators {
                let image: Vec<Permutation> = orbit[k].iter().map(|x| x.conjugate_by(s)).collect();
                match index.get(&image) {
                    Some(&j) => schreier.push(&(&reps[j].inverse() * s) * &reps[k]),
                    None => {
                        if orbit.len() >= super::ENUMERATION_CAP as usize {
                            return Err(Error::OrderCap {
                                order: orbit.len() as u128,
                                cap: super::ENUMERATION_CAP,
                                what: "conjugacy orbit of generator tuple",
                            });
                        }
                        index.insert(image.clone(), orbit.len());
                        reps.push(s * &reps[k]);
                        orbit.push(image);
                    }
                }
            }
            k += 1;
        }
        Ok(PermGroup::from_incremental(self.degree, schreier))
    }

    pub fn center(&self) -> Result<PermGroup> {
        self.centralizer(self)
    }

    /// Smallest normal subgroup of `self` containing `s`.
    pub fn normal_closure(&self, s: &PermGroup) -> Result<PermGroup> {
        self.require_subgroup(s, "normal closure")?;
        let mut closure = PermGroup::from_incremental(self.degree, s.generators.iter().cloned());
        let mut pending: Vec<Permutation> = closure.generators.clone();
        while let Some(x) = pending.pop() {
            for g in &self.generators {
                let c = x.conjugate_by(g);
                if !closure.has(&c) {
                    let gens = closure
                        .generators
                        .iter()
                        .cloned()
                        .chain(std::iter::once(c.clone()));
                    closure = PermGroup::from_incremental(self.degree, gens);
                    pending.push(c);
                }
            }
        }
        Ok(closure)
    }

    /// Descends `K₀ = G`, `K_{i+1} = ⟨H^{K_i}⟩` to a fixpoint; `H` is subnormal
    /// exactly when the fixpoint is `H`.
    pub fn is_subnormal(&self, h: &PermGroup) -> Result<Option<SubnormalCertificate>> {
        self.require_subgroup(h, "subnormality")?;
        let mut descent = vec![self.clone()];
        loop {
            let current = descent.last().unwrap();
            if current.order() == h.order() {
                break;
            }
            let next = current.normal_closure(h)?;
            if next.order() == current.order() {
                return Ok(None);
            }
            descent.push(next);
        }
        descent.reverse();
        descent[0] = h.clone();
        let defect = descent.len() - 1;
        Ok(Some(SubnormalCertificate {
            chain: descent,
            defect,
        }))
    }

    /// Simplicity via normal closures of conjugacy-class representatives.
    pub fn is_simple(&self) -> Result<bool> {
        if self.is_trivial() {
            return Err(Error::TrivialGroup("simplicity is defined for |G| > 1"));
        }
        for class in self.conjugacy_classes()? {
            let rep = &class[0];
            if rep.is_identity() {
                continue;
            }
            let cyclic = PermGroup::new(self.degree, vec![rep.clone()])?;
            if self.normal_closure(&cyclic)?.order() != self.order() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimal normal subgroups: the inclusion-minimal normal closures of single
    /// nontrivial elements.
    pub fn minimal_normal_subgroups(&self) -> Result<Vec<PermGroup>> {
        let mut closures: Vec<PermGroup> = Vec::new();
        for class in self.conjugacy_classes()? {
            let rep = &class[0];
            if rep.is_identity() {
                continue;
            }
            let n = self.normal_closure(&PermGroup::new(self.degree, vec![rep.clone()])?)?;
            if !closures.iter().any(|c| c.same_group(&n)) {
                closures.push(n);
            }
        }
        let minimal = closures
            .iter()
            .filter(|n| {
                !closures
                    .iter()
                    .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
            })
            .cloned()
            .collect();
        Ok(minimal)
    }

    /// Whether every commutator of generators `[a, b]` is trivial.
    pub fn commutes_elementwise(&self, other: &PermGroup) -> bool {
        self.generators
            .iter()
            .all(|a| other.generators.iter().all(|b| a.commutes_with(b)))
    }

    /// `|self ∩ other|`, by enumerating the smaller group.
    pub fn intersection_order(&self, other: &PermGroup) -> Result<u128> {
        let (small, large) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let mut count = 0u128;
        small.for_each_element(|g| {
            if large.has(g) {
                count += 1;
            }
            true
        })?;
        Ok(count)
    }
}

/// Conjugation-invariant fingerprint of a subgroup: order and sorted orbit lengths.
fn orbit_signature(g: &PermGroup) -> Vec<usize> {
    let mut lens: Vec<usize> = g.orbits().iter().map(|o| o.len()).collect();
    lens.sort_unstable();
    let order = g.order();
    lens.push((order & 0xffff_ffff_ffff) as usize);
    lens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(deg: usize, s: &str) -> Permutation {
        Permutation::parse(deg, s).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        let cycle: Vec<u32> = (0..n as u32).collect();
        PermGroup::new(
            n,
            vec![
                Permutation::from_cycles(n, &[cycle]).unwrap(),
                Permutation::from_cycles(n, &[vec![0, 1]]).unwrap(),
            ],
        )
        .unwrap()
    }

    fn alt5() -> PermGroup {
        PermGroup::new(5, vec![p(5, "(0 1 2)"), p(5, "(0 1 3)"), p(5, "(0 1 4)")]).unwrap()
    }

    #[test]
    fn normalizer_of_four_cycle_in_sym4() {
        let s4 = sym(4);
        let c4 = PermGroup::new(4, vec![p(4, "(0 1 2 3)")]).unwrap();
        let n = s4.normalizer(&c4).unwrap();
        assert_eq!(n.order(), 8);
        assert!(c4.is_normal_in(&n));
        let by_conj = s4.normalizer_by_conjugates(&c4).unwrap();
        assert!(by_conj.same_group(&n));
    }

    #[test]
    fn normalizer_trivial_cases() {
        let s5 = sym(5);
        assert!(s5.normalizer(&s5).unwrap().same_group(&s5));
        assert!(s5.normalizer(&alt5()).unwrap().same_group(&s5));
    }

    #[test]
    fn normalizer_rejects_non_subgroup() {
        let a5 = alt5();
        let t = PermGroup::new(5, vec![p(5, "(0 1)")]).unwrap();
        assert!(matches!(a5.normalizer(&t), Err(Error::NotSubgroup(_))));
        assert!(matches!(a5.centralizer(&t), Err(Error::NotSubgroup(_))));
    }

    #[test]
    fn centres() {
        assert_eq!(sym(3).center().unwrap().order(), 1);
        let d4 = PermGroup::new(4, vec![p(4, "(0 1 2 3)"), p(4, "(1 3)")]).unwrap();
        let z = d4.center().unwrap();
        assert_eq!(z.order(), 2);
        assert!(z.has(&p(4, "(0 2)(1 3)")));
        assert!(d4.centralizer_by_conjugates(&d4).unwrap().same_group(&z));
    }

    #[test]
    fn subnormality() {
        let s5 = sym(5);
        let cert = s5.is_subnormal(&alt5()).unwrap().unwrap();
        assert_eq!(cert.defect, 1);
        assert!(cert.is_valid());
        let cert = s5.is_subnormal(&s5).unwrap().unwrap();
        assert_eq!(cert.defect, 0);
        let t = PermGroup::new(3, vec![p(3, "(0 1)")]).unwrap();
        assert!(sym(3).is_subnormal(&t).unwrap().is_none());
    }

    #[test]
    fn subnormal_with_defect_two() {
        // ⟨(0 1)(2 3)⟩ ⊴ V₄ ⊴ Alt(4)
        let a4 = PermGroup::new(4, vec![p(4, "(0 1 2)"), p(4, "(1 2 3)")]).unwrap();
        let h = PermGroup::new(4, vec![p(4, "(0 1)(2 3)")]).unwrap();
        let cert = a4.is_subnormal(&h).unwrap().unwrap();
        assert_eq!(cert.defect, 2);
        assert_eq!(cert.chain[1].order(), 4);
        assert!(cert.is_valid());
    }

    #[test]
    fn simplicity() {
        assert!(alt5().is_simple().unwrap());
        assert!(!sym(4).is_simple().unwrap());
        let c7 = PermGroup::new(7, vec![p(7, "(0 1 2 3 4 5 6)")]).unwrap();
        assert!(c7.is_simple().unwrap());
        assert!(PermGroup::trivial(3).is_simple().is_err());
    }

    #[test]
    fn minimal_normal_subgroups_of_sym4() {
        let mins = sym(4).minimal_normal_subgroups().unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);
    }
}
