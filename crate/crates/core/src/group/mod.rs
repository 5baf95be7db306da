//! Permutation groups backed by a stabilizer chain.

mod algorithms;
mod chain;
pub mod perm;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

pub use algorithms::SubnormalCertificate;
use chain::StabChain;
pub use perm::Permutation;

use crate::error::{Error, Result};

/// Groups larger than this refuse element enumeration unless overridden.
pub const ENUMERATION_CAP: u128 = 2_000_000;

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Arc<StabChain>,
}

impl PermGroup {
    /// Builds the group generated by `gens` on `degree` points. Identity
    /// generators are dropped; an empty list gives the trivial group.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree 0".into()));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut chain = StabChain::new(degree);
        let mut kept = Vec::new();
        for g in gens {
            if g.is_identity() || kept.contains(&g) {
                continue;
            }
            chain.extend(&g);
            kept.push(g);
        }
        Ok(PermGroup {
            degree,
            generators: kept,
            chain: Arc::new(chain),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("degree checked by caller")
    }

    /// Builds a group by adding generators one at a time, skipping members.
    pub(crate) fn from_incremental<I: IntoIterator<Item = Permutation>>(
        degree: usize,
        gens: I,
    ) -> Self {
        let mut chain = StabChain::new(degree);
        let mut kept = Vec::new();
        for g in gens {
            if chain.extend(&g) {
                kept.push(g);
            }
        }
        PermGroup {
            degree,
            generators: kept,
            chain: Arc::new(chain),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.chain.strong_generators()
    }

    pub fn base(&self) -> Vec<u32> {
        self.chain.base()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.chain.levels().iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.check_degree(p.degree())?;
        Ok(self.chain.contains(p))
    }

    /// Membership without the degree check.
    pub fn has(&self, p: &Permutation) -> bool {
        self.chain.contains(p)
    }

    pub(crate) fn check_degree(&self, degree: usize) -> Result<()> {
        if degree != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: degree,
            });
        }
        Ok(())
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.has(g))
    }

    /// `self ⊴ other`.
    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other
                .generators
                .iter()
                .all(|g| self.generators.iter().all(|h| self.has(&h.conjugate_by(g))))
    }

    /// Same set of elements.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && other.generators.iter().all(|g| self.has(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..].iter().all(|b| a.commutes_with(b))
        })
    }

    /// Uniform random element, drawn through the chain's transversals.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = self.identity();
        for level in self.chain.levels() {
            let x = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = &g * level.reps[x as usize].as_ref().unwrap();
        }
        g
    }

    /// All elements, identity first, in the chain's deterministic order.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        self.elements_with_override(false)
    }

    pub fn elements_with_override(&self, allow_large: bool) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > ENUMERATION_CAP && !allow_large {
            return Err(Error::OrderCap {
                order,
                cap: ENUMERATION_CAP,
                what: "element enumeration",
            });
        }
        let mut out = Vec::with_capacity(order as usize);
        self.chain.for_each_element(|g| {
            out.push(g.clone());
            true
        });
        Ok(out)
    }

    /// Streams elements; the callback returns false to stop early.
    pub fn for_each_element<F: FnMut(&Permutation) -> bool>(&self, f: F) -> Result<()> {
        let order = self.order();
        if order > ENUMERATION_CAP {
            return Err(Error::OrderCap {
                order,
                cap: ENUMERATION_CAP,
                what: "element enumeration",
            });
        }
        self.chain.for_each_element(f);
        Ok(())
    }

    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit
    }

    /// Stabilizer of a point, from Schreier generators along its orbit.
    pub fn stabilizer(&self, point: u32) -> PermGroup {
        let mut reps: Vec<Option<Permutation>> = vec![None; self.degree];
        reps[point as usize] = Some(self.identity());
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for g in &self.generators {
                let y = g.apply(x);
                if reps[y as usize].is_none() {
                    reps[y as usize] = Some(g * reps[x as usize].as_ref().unwrap());
                    orbit.push(y);
                }
            }
            k += 1;
        }
        let reps = &reps;
        let schreier = orbit.iter().flat_map(|&x| {
            self.generators.iter().map(move |g| {
                let u = reps[x as usize].as_ref().unwrap();
                let v = reps[g.apply(x) as usize].as_ref().unwrap();
                &(&v.inverse() * g) * u
            })
        });
        PermGroup::from_incremental(self.degree, schreier)
    }

    /// Pointwise stabilizer of a list of points.
    pub fn stabilizer_points(&self, points: &[u32]) -> PermGroup {
        points
            .iter()
            .fold(self.clone(), |g, &x| g.stabilizer(x))
    }

    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree as u32 {
            if seen[p as usize] {
                continue;
            }
            let mut orbit = self.orbit(p);
            for &x in &orbit {
                seen[x as usize] = true;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// `g ⟨gens⟩ g⁻¹`.
    pub fn conjugate(&self, g: &Permutation) -> PermGroup {
        let gens = self.generators.iter().map(|h| h.conjugate_by(g)).collect();
        PermGroup::new(self.degree, gens).expect("conjugation preserves degree")
    }

    /// `⟨self, other⟩`.
    pub fn join(&self, other: &PermGroup) -> Result<PermGroup> {
        self.check_degree(other.degree)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        PermGroup::new(self.degree, gens)
    }

    /// Subgroup generated by some elements of this group.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        for g in &gens {
            self.check_degree(g.degree())?;
            if !self.has(g) {
                return Err(Error::NotSubgroup(format!("{} is not in the group", g)));
            }
        }
        PermGroup::new(self.degree, gens)
    }

    /// Extends the degree, fixing the new points.
    pub fn extended(&self, degree: usize) -> PermGroup {
        let gens = self.generators.iter().map(|g| g.extend(degree)).collect();
        PermGroup::new(degree, gens).expect("extension keeps generators valid")
    }

    pub(crate) fn require_subgroup(&self, h: &PermGroup, what: &str) -> Result<()> {
        self.check_degree(h.degree)?;
        if let Some(g) = h.generators.iter().find(|g| !self.has(g)) {
            return Err(Error::NotSubgroup(format!(
                "{}: generator {} lies outside the ambient group",
                what, g
            )));
        }
        Ok(())
    }

    /// Conjugacy classes, each sorted, ordered by first discovery.
    pub fn conjugacy_classes(&self) -> Result<Vec<Vec<Permutation>>> {
        let elements = self.elements()?;
        let mut seen: HashSet<Permutation> = HashSet::with_capacity(elements.len());
        let mut classes = Vec::new();
        for x in elements {
            if seen.contains(&x) {
                continue;
            }
            let mut class = vec![x.clone()];
            seen.insert(x.clone());
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for g in &self.generators {
                    let z = y.conjugate_by(g);
                    if seen.insert(z.clone()) {
                        class.push(z.clone());
                        queue.push_back(z);
                    }
                }
            }
            classes.push(class);
        }
        Ok(classes)
    }

    /// Cayley graph of the group with respect to `gens` (right multiplication),
    /// with elements indexed in breadth-first order from the identity.
    pub(crate) fn right_cayley_graph(
        &self,
        gens: &[Permutation],
        cap: u128,
    ) -> Result<(Vec<Permutation>, Vec<u32>)> {
        let order = self.order();
        if order > cap {
            return Err(Error::OrderCap {
                order,
                cap,
                what: "Cayley graph enumeration",
            });
        }
        let d = gens.len();
        let mut index: HashMap<Permutation, u32> = HashMap::with_capacity(order as usize);
        let mut elements = vec![self.identity()];
        index.insert(self.identity(), 0);
        let mut steps: Vec<u32> = Vec::with_capacity(order as usize * d);
        let mut k = 0;
        while k < elements.len() {
            for s in gens {
                let y = &elements[k] * s;
                let next = elements.len() as u32;
                let idx = *index.entry(y.clone()).or_insert_with(|| {
                    elements.push(y);
                    next
                });
                steps.push(idx);
            }
            k += 1;
        }
        Ok((elements, steps))
    }
}

impl fmt::Display for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {} <", self.degree)?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(order {}, {})", self.order(), self)
    }
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    degree: usize,
    order: String,
    generators: Vec<String>,
}

impl Serialize for PermGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GroupRepr {
            degree: self.degree,
            order: self.order().to_string(),
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PermGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = GroupRepr::deserialize(d)?;
        let gens = repr
            .generators
            .iter()
            .map(|g| Permutation::parse(repr.degree, g))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let group = PermGroup::new(repr.degree, gens).map_err(D::Error::custom)?;
        if group.order().to_string() != repr.order {
            return Err(D::Error::custom("order does not match generators"));
        }
        Ok(group)
    }
}
