//! Backtracking over images of a generating sequence. A partial assignment is
//! extended along the source's Cayley graph; any inconsistency prunes the node.

use crate::error::{Error, Result};

use super::CayleyTable;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

const UNSET: u32 = u32::MAX;

/// Right-multiplication graph of a source group: `steps[x * d + k] = x · s_k`.
pub(crate) struct SourceGraph {
    pub n: usize,
    pub d: usize,
    pub steps: Vec<u32>,
}

impl SourceGraph {
    pub fn from_table(t: &CayleyTable, gens: &[u32]) -> Self {
        let n = t.order();
        let d = gens.len();
        let mut steps = Vec::with_capacity(n * d);
        for x in 0..n as u32 {
            for &s in gens {
                steps.push(t.mul(x, s));
            }
        }
        SourceGraph { n, d, steps }
    }

    /// Source element reached by generator `k` from the identity.
    pub fn generator(&self, k: usize) -> u32 {
        self.steps[k]
    }
}

pub(crate) struct Search<'a> {
    src: &'a SourceGraph,
    tgt: &'a CayleyTable,
    injective: bool,
    pins: &'a [(u32, u32)],
    budget: u64,
    pub nodes: u64,
    map: Vec<u32>,
    used: Vec<bool>,
    queue: Vec<u32>,
}

impl<'a> Search<'a> {
    pub fn new(
        src: &'a SourceGraph,
        tgt: &'a CayleyTable,
        injective: bool,
        pins: &'a [(u32, u32)],
        budget: u64,
    ) -> Self {
        Search {
            src,
            tgt,
            injective,
            pins,
            budget,
            nodes: 0,
            map: vec![UNSET; src.n],
            used: vec![false; tgt.order()],
            queue: Vec::with_capacity(src.n),
        }
    }

    /// Extends the assignment to the span of the first `imgs.len()` generators.
    fn extend(&mut self, imgs: &[u32]) -> bool {
        for &x in &self.queue {
            if self.injective {
                self.used[self.map[x as usize] as usize] = false;
            }
            self.map[x as usize] = UNSET;
        }
        self.queue.clear();
        self.map[0] = 0;
        if self.injective {
            self.used[0] = true;
        }
        self.queue.push(0);
        let d = self.src.d;
        let mut k = 0;
        while k < self.queue.len() {
            let x = self.queue[k];
            let mx = self.map[x as usize];
            for (j, &img) in imgs.iter().enumerate() {
                let y = self.src.steps[x as usize * d + j];
                let v = self.tgt.mul(mx, img);
                let my = self.map[y as usize];
                if my == UNSET {
                    if self.injective {
                        if self.used[v as usize] {
                            return false;
                        }
                        self.used[v as usize] = true;
                    }
                    self.map[y as usize] = v;
                    self.queue.push(y);
                } else if my != v {
                    return false;
                }
            }
            k += 1;
        }
        self.pins
            .iter()
            .all(|&(x, y)| self.map[x as usize] == UNSET || self.map[x as usize] == y)
    }

    /// Depth-first search; the first complete map accepted by `accept` wins.
    pub fn run<F: FnMut(&[u32], &[u32]) -> bool>(
        &mut self,
        candidates: &[Vec<u32>],
        accept: &mut F,
    ) -> Result<Option<Vec<u32>>> {
        let mut imgs = Vec::with_capacity(candidates.len());
        if !self.extend(&imgs) {
            return Ok(None);
        }
        let found = self.dfs(candidates, &mut imgs, accept)?;
        Ok(found)
    }

    fn dfs<F: FnMut(&[u32], &[u32]) -> bool>(
        &mut self,
        candidates: &[Vec<u32>],
        imgs: &mut Vec<u32>,
        accept: &mut F,
    ) -> Result<Option<Vec<u32>>> {
        let level = imgs.len();
        if level == candidates.len() {
            // `extend` already ran for the full assignment.
            if self.queue.len() != self.src.n {
                return Ok(None);
            }
            return Ok(if accept(&self.map, imgs) {
                Some(self.map.clone())
            } else {
                None
            });
        }
        for &c in &candidates[level] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::NodeBudget {
                    budget: self.budget,
                    context: format!(
                        "generator-image search at depth {} of {} (source order {}, target order {})",
                        level,
                        candidates.len(),
                        self.src.n,
                        self.tgt.order()
                    ),
                });
            }
            imgs.push(c);
            if self.extend(imgs) {
                if let Some(m) = self.dfs(candidates, imgs, accept)? {
                    return Ok(Some(m));
                }
            }
            imgs.pop();
        }
        Ok(None)
    }
}
