//! Simple undirected graphs, their automorphism groups, and graphs realizing
//! a prescribed finite group as their full automorphism group.

mod automorphisms;
mod realize;

pub use automorphisms::{graph_automorphisms, graph_automorphisms_with_budget};
pub use realize::{realize, realize_table, verify_realization, verify_realization_table, MAX_REALIZE_ORDER};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Where a vertex came from in a construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexRole {
    Unlabelled,
    /// The vertex standing for a group element.
    Element { element: u32 },
    /// Interior vertex of the path replacing the arc `from → from · s_k`;
    /// `near` is the vertex adjacent to `from`.
    Gadget { generator: u32, from: u32, near: bool },
    /// The `position`-th vertex (from 1) of a pendant path of `length` vertices.
    Tail { anchor: u32, position: u32, length: u32 },
}

impl VertexRole {
    /// The part of the role an automorphism must preserve.
    pub fn class(&self) -> (u8, u32, u32) {
        match *self {
            VertexRole::Unlabelled => (0, 0, 0),
            VertexRole::Element { .. } => (1, 0, 0),
            VertexRole::Gadget { generator, near, .. } => (2, generator, near as u32),
            VertexRole::Tail { position, length, .. } => (3, length, position),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    edges: BTreeSet<(u32, u32)>,
    roles: Vec<VertexRole>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); vertex_count],
            edges: BTreeSet::new(),
            roles: vec![VertexRole::Unlabelled; vertex_count],
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Graph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn add_vertex(&mut self, role: VertexRole) -> u32 {
        self.adj.push(Vec::new());
        self.roles.push(role);
        (self.adj.len() - 1) as u32
    }

    /// Adds `{u, v}`; loops and repeated edges are rejected.
    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<()> {
        let n = self.vertex_count() as u32;
        if u >= n || v >= n {
            return Err(Error::OutOfRange(format!("edge ({}, {}) on {} vertices", u, v, n)));
        }
        if u == v {
            return Err(Error::Construction(format!("loop at {}", u)));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(Error::Construction(format!("repeated edge ({}, {})", key.0, key.1)));
        }
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adj[a as usize];
            let pos = list.binary_search(&b).unwrap_err();
            list.insert(pos, b);
        }
        Ok(())
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn role(&self, v: u32) -> VertexRole {
        self.roles[v as usize]
    }

    pub fn roles(&self) -> &[VertexRole] {
        &self.roles
    }

    pub fn set_role(&mut self, v: u32, role: VertexRole) {
        self.roles[v as usize] = role;
    }

    /// Appends a path of `length` new vertices hanging from `anchor`.
    pub fn add_tail(&mut self, anchor: u32, length: u32) -> Result<()> {
        let mut prev = anchor;
        for position in 1..=length {
            let v = self.add_vertex(VertexRole::Tail {
                anchor,
                position,
                length,
            });
            self.add_edge(prev, v)?;
            prev = v;
        }
        Ok(())
    }

    /// Sorted edge list: an `n m` header, then one `u v` line per edge with `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut offset = 0;
        let mut lines = Vec::new();
        for line in text.split_inclusive('\n') {
            if !line.trim().is_empty() {
                lines.push((offset, line.trim()));
            }
            offset += line.len();
        }
        let parse_pair = |(at, line): (usize, &str)| -> Result<(usize, usize)> {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse {
                offset: at,
                message: format!("expected two integers, found {:?}", line),
            };
            if fields.len() != 2 {
                return Err(bad());
            }
            let a = fields[0].parse().map_err(|_| bad())?;
            let b = fields[1].parse().map_err(|_| bad())?;
            Ok((a, b))
        };
        let (&header, body) = lines.split_first().ok_or(Error::Parse {
            offset: 0,
            message: "missing header".into(),
        })?;
        let (n, m) = parse_pair(header)?;
        if body.len() != m {
            return Err(Error::Parse {
                offset: header.0,
                message: format!("header announces {} edges, found {}", m, body.len()),
            });
        }
        let mut g = Graph::new(n);
        for &line in body {
            let (u, v) = parse_pair(line)?;
            g.add_edge(u as u32, v as u32).map_err(|e| Error::Parse {
                offset: line.0,
                message: e.to_string(),
            })?;
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices, {} edges)", self.vertex_count(), self.edge_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_rules() {
        let mut g = Graph::new(3);
        g.add_edge(0, 1).unwrap();
        assert!(g.add_edge(1, 0).is_err());
        assert!(g.add_edge(2, 2).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert!(g.has_edge(1, 0));
        assert_eq!(g.degree(0), 1);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 1), (1, 2)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 x\n"),
            Err(Error::Parse { offset: 4, .. })
        ));
    }

    #[test]
    fn tails() {
        let mut g = Graph::new(1);
        g.add_tail(0, 3).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(
            g.role(3),
            VertexRole::Tail {
                anchor: 0,
                position: 3,
                length: 3
            }
        );
    }
}
