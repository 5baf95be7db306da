//! Homomorphism and isomorphism search between finite groups.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::aut::profile_buckets;
use super::search::{SourceGraph, Search};
use super::CayleyTable;
use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation, ENUMERATION_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupHom {
    pub source_hash: String,
    pub target_hash: String,
    pub map: Vec<u32>,
    pub injective: bool,
    pub surjective: bool,
}

impl GroupHom {
    pub fn new(source: &CayleyTable, target: &CayleyTable, map: Vec<u32>) -> Result<Self> {
        if map.len() != source.order() || map.iter().any(|&y| y as usize >= target.order()) {
            return Err(Error::InvalidTable("map does not fit the tables".into()));
        }
        let mut hit = vec![false; target.order()];
        let mut distinct = 0;
        for &y in &map {
            if !hit[y as usize] {
                hit[y as usize] = true;
                distinct += 1;
            }
        }
        Ok(GroupHom {
            source_hash: source.digest(),
            target_hash: target.digest(),
            injective: distinct == source.order(),
            surjective: distinct == target.order(),
            map,
        })
    }

    /// Checks `map[xy] = map[x] map[y]` on all pairs.
    pub fn verify(&self, source: &CayleyTable, target: &CayleyTable) -> bool {
        let n = source.order() as u32;
        self.map.len() == n as usize
            && self.map[0] == 0
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    self.map[source.mul(x, y) as usize]
                        == target.mul(self.map[x as usize], self.map[y as usize])
                })
            })
    }

    /// `self` after `first`.
    pub fn after(&self, first: &GroupHom) -> GroupHom {
        let map: Vec<u32> = first.map.iter().map(|&y| self.map[y as usize]).collect();
        let mut seen = std::collections::HashSet::new();
        let injective = map.iter().all(|y| seen.insert(*y));
        GroupHom {
            source_hash: first.source_hash.clone(),
            target_hash: self.target_hash.clone(),
            injective,
            surjective: self.surjective && first.surjective,
            map,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct HomConstraints {
    /// `(source element, required image)` pairs.
    pub pins: Vec<(u32, u32)>,
    pub surjective: bool,
    pub injective: bool,
}

fn validate_pins(
    pins: &[(u32, u32)],
    source_orders: impl Fn(u32) -> u64,
    target: &CayleyTable,
    source_n: usize,
) -> Result<()> {
    let mut seen: HashMap<u32, u32> = HashMap::new();
    for &(x, y) in pins {
        if x as usize >= source_n || y as usize >= target.order() {
            return Err(Error::Constraints(format!("pin ({}, {}) out of range", x, y)));
        }
        if x == 0 && y != 0 {
            return Err(Error::Constraints("identity must map to identity".into()));
        }
        if let Some(&prev) = seen.get(&x) {
            if prev != y {
                return Err(Error::Constraints(format!(
                    "element {} pinned to both {} and {}",
                    x, prev, y
                )));
            }
        }
        seen.insert(x, y);
        let (ox, oy) = (source_orders(x), target.element_order(y) as u64);
        if ox % oy != 0 {
            return Err(Error::Constraints(format!(
                "element of order {} cannot map to one of order {}",
                ox, oy
            )));
        }
    }
    Ok(())
}

fn surjects(target: &CayleyTable, imgs: &[u32]) -> bool {
    target.span(imgs).len() == target.order()
}

/// Finds a homomorphism `S → T` meeting the constraints, or certifies none exists.
pub fn hom_search(
    s: &CayleyTable,
    t: &CayleyTable,
    c: &HomConstraints,
    budget: u64,
) -> Result<Option<GroupHom>> {
    validate_pins(&c.pins, |x| s.element_order(x) as u64, t, s.order())?;
    if c.injective && s.order() > t.order() || c.surjective && t.order() > s.order() {
        return Ok(None);
    }
    // Pinned elements lead the generating sequence.
    let mut gens: Vec<u32> = Vec::new();
    let mut span_len = 1;
    let pinned = c.pins.iter().map(|&(x, _)| x).filter(|&x| x != 0);
    for x in pinned.chain(s.generators().iter().copied()) {
        if span_len == s.order() {
            break;
        }
        if !s.span(&gens).contains(&x) {
            gens.push(x);
            span_len = s.span(&gens).len();
        }
    }
    let pin_of: HashMap<u32, u32> = c.pins.iter().copied().collect();
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&x| match pin_of.get(&x) {
            Some(&y) => vec![y],
            None => {
                let ox = s.element_order(x);
                (0..t.order() as u32)
                    .filter(|&y| {
                        let oy = t.element_order(y);
                        if c.injective {
                            oy == ox
                        } else {
                            ox.is_multiple_of(oy)
                        }
                    })
                    .collect()
            }
        })
        .collect();
    let src = SourceGraph::from_table(s, &gens);
    let mut search = Search::new(&src, t, c.injective, &c.pins, budget);
    let surjective = c.surjective;
    let found = search.run(&candidates, &mut |_, imgs| !surjective || surjects(t, imgs))?;
    found.map(|map| GroupHom::new(s, t, map)).transpose()
}

/// A homomorphism out of a permutation group, given by generator images.
#[derive(Clone, Debug)]
pub struct PermSourceHom {
    pub generators: Vec<Permutation>,
    pub images: Vec<u32>,
    pub nodes: u64,
}

/// Homomorphism search with a permutation-group source, which is walked
/// along its Cayley graph instead of being tabulated.
pub fn hom_search_from_perm(
    s: &PermGroup,
    t: &CayleyTable,
    pins: &[(Permutation, u32)],
    surjective: bool,
    budget: u64,
) -> Result<(Option<PermSourceHom>, u64)> {
    let mut gens: Vec<Permutation> = Vec::new();
    for (p, _) in pins {
        if !s.contains(p)? {
            return Err(Error::Constraints(format!("pinned {} lies outside the source", p)));
        }
        if !p.is_identity() && !gens.contains(p) {
            gens.push(p.clone());
        }
    }
    for g in s.generators() {
        if !gens.contains(g) {
            gens.push(g.clone());
        }
    }
    let (elements, steps) = s.right_cayley_graph(&gens, ENUMERATION_CAP)?;
    let d = gens.len();
    let src = SourceGraph {
        n: elements.len(),
        d,
        steps,
    };
    let index_pins: Vec<(u32, u32)> = pins
        .iter()
        .map(|(p, y)| {
            let x = if p.is_identity() {
                0
            } else {
                src.generator(gens.iter().position(|g| g == p).unwrap())
            };
            (x, *y)
        })
        .collect();
    validate_pins(
        &index_pins,
        |x| elements[x as usize].order(),
        t,
        elements.len(),
    )?;
    let pin_of: HashMap<u32, u32> = index_pins.iter().copied().collect();
    let candidates: Vec<Vec<u32>> = (0..d)
        .map(|k| match pin_of.get(&src.generator(k)) {
            Some(&y) => vec![y],
            None => {
                let ox = gens[k].order();
                (0..t.order() as u32)
                    .filter(|&y| ox.is_multiple_of(t.element_order(y) as u64))
                    .collect()
            }
        })
        .collect();
    let mut search = Search::new(&src, t, false, &index_pins, budget);
    let found = search.run(&candidates, &mut |_, imgs| !surjective || surjects(t, imgs))?;
    let nodes = search.nodes;
    Ok((
        found.map(|map| PermSourceHom {
            images: (0..d).map(|k| map[src.generator(k) as usize]).collect(),
            generators: gens,
            nodes,
        }),
        nodes,
    ))
}

/// Finds an isomorphism `A → B`, or certifies there is none.
pub fn isomorphic(a: &CayleyTable, b: &CayleyTable, budget: u64) -> Result<Option<GroupHom>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    let mut pa: Vec<&[u64]> = (0..a.order() as u32).map(|x| a.profile(x)).collect();
    let mut pb: Vec<&[u64]> = (0..b.order() as u32).map(|x| b.profile(x)).collect();
    pa.sort();
    pb.sort();
    if pa != pb {
        return Ok(None);
    }
    let buckets = profile_buckets(b);
    let gens = a.generators().to_vec();
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&g| buckets.get(a.profile(g)).cloned().unwrap_or_default())
        .collect();
    let src = SourceGraph::from_table(a, &gens);
    let mut search = Search::new(&src, b, true, &[], budget);
    let found = search.run(&candidates, &mut |_, _| true)?;
    found.map(|map| GroupHom::new(a, b, map)).transpose()
}
