//! Graph automorphisms by equitable refinement and individualization.
//!
//! The search fixes a first path `v_1, v_2, …` down to a discrete partition.
//! For each depth, deepest first, it looks for automorphisms fixing
//! `v_1, …, v_ℓ` that move `v_{ℓ+1}` to each candidate of its cell outside the
//! orbit known so far; these together generate the full group.

use super::Graph;
use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};
use crate::tables::DEFAULT_NODE_BUDGET;

/// Ordered cells; the order of cells and of vertices within a cell is
/// determined by the graph structure and the individualized vertices only.
#[derive(Clone, Debug)]
struct Partition {
    cells: Vec<Vec<u32>>,
    cell_of: Vec<u32>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Partition {
            cells: vec![(0..n as u32).collect()],
            cell_of: vec![0; n],
        }
    }

    fn is_discrete(&self) -> bool {
        self.cells.len() == self.cell_of.len()
    }

    fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.len()).collect()
    }

    fn target_cell(&self) -> usize {
        self.cells.iter().position(|c| c.len() > 1).expect("partition is not discrete")
    }

    fn reindex(&mut self) {
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                self.cell_of[v as usize] = i as u32;
            }
        }
    }

    /// Splits cells by the multiset of neighbouring cells until stable.
    fn refine(&mut self, g: &Graph) {
        loop {
            let before = self.cells.len();
            let mut next = Vec::with_capacity(before);
            for cell in &self.cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, u32)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig: Vec<u32> =
                            g.neighbors(v).iter().map(|&u| self.cell_of[u as usize]).collect();
                        sig.sort_unstable();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for k in 1..=keyed.len() {
                    if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                        next.push(keyed[start..k].iter().map(|(_, v)| *v).collect());
                        start = k;
                    }
                }
            }
            self.cells = next;
            self.reindex();
            if self.cells.len() == before {
                return;
            }
        }
    }

    /// Moves `v` into its own cell just before the rest of its cell.
    fn individualize(&self, v: u32, g: &Graph) -> Partition {
        let c = self.cell_of[v as usize] as usize;
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend(self.cells[..c].iter().cloned());
        cells.push(vec![v]);
        cells.push(self.cells[c].iter().copied().filter(|&u| u != v).collect());
        cells.extend(self.cells[c + 1..].iter().cloned());
        let mut p = Partition {
            cells,
            cell_of: self.cell_of.clone(),
        };
        p.reindex();
        p.refine(g);
        p
    }

    fn leaf_order(&self) -> Vec<u32> {
        self.cells.iter().map(|c| c[0]).collect()
    }
}

fn is_automorphism(g: &Graph, images: &[u32]) -> bool {
    g.edges().all(|(u, v)| g.has_edge(images[u as usize], images[v as usize]))
}

struct Searcher<'a> {
    g: &'a Graph,
    sizes: Vec<Vec<usize>>,
    first_leaf: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl Searcher<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::NodeBudget {
                budget: self.budget,
                context: format!("graph automorphism search on {} vertices", self.g.vertex_count()),
            });
        }
        Ok(())
    }

    /// Any automorphism whose first-path image passes through `p` at `depth`.
    fn dfs(&mut self, p: &Partition, depth: usize) -> Result<Option<Permutation>> {
        self.tick()?;
        if p.sizes() != self.sizes[depth] {
            return Ok(None);
        }
        if p.is_discrete() {
            let leaf = p.leaf_order();
            let mut images = vec![0u32; leaf.len()];
            for (a, b) in self.first_leaf.iter().zip(&leaf) {
                images[*a as usize] = *b;
            }
            return Ok(is_automorphism(self.g, &images)
                .then(|| Permutation::from_images(images).expect("leaf orders are bijections")));
        }
        let cell = p.cells[p.target_cell()].clone();
        for u in cell {
            let child = p.individualize(u, self.g);
            if let Some(a) = self.dfs(&child, depth + 1)? {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }
}

pub fn graph_automorphisms(g: &Graph) -> Result<PermGroup> {
    graph_automorphisms_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn graph_automorphisms_with_budget(g: &Graph, budget: u64) -> Result<PermGroup> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::OutOfRange("graph has no vertices".into()));
    }
    let mut root = Partition::unit(n);
    root.refine(g);
    // First path.
    let mut path = vec![root];
    let mut chosen = Vec::new();
    while !path.last().unwrap().is_discrete() {
        let p = path.last().unwrap();
        let v = p.cells[p.target_cell()][0];
        chosen.push(v);
        let child = p.individualize(v, g);
        path.push(child);
    }
    let mut s = Searcher {
        g,
        sizes: path.iter().map(|p| p.sizes()).collect(),
        first_leaf: path.last().unwrap().leaf_order(),
        nodes: 0,
        budget,
    };
    let mut found: Vec<(usize, Permutation)> = Vec::new();
    for level in (0..chosen.len()).rev() {
        let orbit_of = |found: &[(usize, Permutation)]| {
            let mut seen = vec![false; n];
            let mut orbit = vec![chosen[level]];
            seen[chosen[level] as usize] = true;
            let mut k = 0;
            while k < orbit.len() {
                for (_, a) in found.iter().filter(|(l, _)| *l >= level) {
                    let y = a.apply(orbit[k]);
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            seen
        };
        let mut in_orbit = orbit_of(&found);
        let p = &path[level];
        let cell = p.cells[p.target_cell()].clone();
        for w in cell {
            if in_orbit[w as usize] {
                continue;
            }
            let child = p.individualize(w, g);
            if let Some(a) = s.dfs(&child, level + 1)? {
                found.push((level, a));
                in_orbit = orbit_of(&found);
            }
        }
    }
    PermGroup::new(n, found.into_iter().map(|(_, a)| a).collect())
}
