//! Frucht-style realization: a graph whose automorphism group is a given group.
//!
//! Vertices are the group elements. Each arc `g → g·s_k` of the Cayley graph
//! on the greedy generating sequence becomes a path `g - a - b - g·s_k`, with
//! a pendant path of `2k − 1 + shift` vertices on `a` and `2k + shift` on `b`.
//! The tail lengths record both the generator and the direction, so graph
//! automorphisms are exactly the left multiplications.

use serde_json::json;

use super::{graph_automorphisms_with_budget, Graph, VertexRole};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::report::{Report, ReportBuilder};
use crate::tables::{isomorphic, to_table_with_cap, CayleyTable};

pub const MAX_REALIZE_ORDER: usize = 2000;

const SHIFT_ATTEMPTS: u32 = 4;

/// Spider with legs of 1, 2 and 3 vertices.
fn asymmetric_tree() -> Graph {
    let mut g = Graph::new(1);
    g.set_role(0, VertexRole::Element { element: 0 });
    for length in 1..=3 {
        g.add_tail(0, length).expect("tails add fresh vertices");
    }
    g
}

/// An edge whose ends each carry pendant paths of 1 and 3 vertices.
fn two_element_graph() -> Graph {
    let mut g = Graph::new(2);
    g.set_role(0, VertexRole::Element { element: 0 });
    g.set_role(1, VertexRole::Element { element: 1 });
    g.add_edge(0, 1).expect("fresh edge");
    for v in 0..2 {
        g.add_tail(v, 1).expect("tails add fresh vertices");
        g.add_tail(v, 3).expect("tails add fresh vertices");
    }
    g
}

fn scaffold(t: &CayleyTable, gens: &[u32], shift: u32) -> Result<Graph> {
    let n = t.order();
    let mut g = Graph::new(n);
    for x in 0..n as u32 {
        g.set_role(x, VertexRole::Element { element: x });
    }
    for (k0, &s) in gens.iter().enumerate() {
        let k = k0 as u32 + 1;
        for x in 0..n as u32 {
            let y = t.mul(x, s);
            let a = g.add_vertex(VertexRole::Gadget {
                generator: k,
                from: x,
                near: true,
            });
            let b = g.add_vertex(VertexRole::Gadget {
                generator: k,
                from: x,
                near: false,
            });
            g.add_edge(x, a)?;
            g.add_edge(a, b)?;
            g.add_edge(b, y)?;
            g.add_tail(a, 2 * k - 1 + shift)?;
            g.add_tail(b, 2 * k + shift)?;
        }
    }
    Ok(g)
}

pub fn realize(group: &PermGroup) -> Result<Graph> {
    if group.order() > MAX_REALIZE_ORDER as u128 {
        return Err(Error::OrderCap {
            order: group.order(),
            cap: MAX_REALIZE_ORDER as u128,
            what: "graph realization",
        });
    }
    realize_table(&to_table_with_cap(group, MAX_REALIZE_ORDER as u128)?)
}

pub fn realize_table(t: &CayleyTable) -> Result<Graph> {
    let n = t.order();
    if n > MAX_REALIZE_ORDER {
        return Err(Error::OrderCap {
            order: n as u128,
            cap: MAX_REALIZE_ORDER as u128,
            what: "graph realization",
        });
    }
    match n {
        1 => return Ok(asymmetric_tree()),
        2 => return Ok(two_element_graph()),
        _ => {}
    }
    let gens = t.generators();
    let d = gens.len() as u32;
    for attempt in 0..SHIFT_ATTEMPTS {
        let g = scaffold(t, gens, attempt * d)?;
        if graph_automorphisms_with_budget(&g, crate::tables::DEFAULT_NODE_BUDGET)?.order() == n as u128 {
            return Ok(g);
        }
    }
    Err(Error::Construction(format!(
        "no tail shift up to {} gave an automorphism group of order {}",
        (SHIFT_ATTEMPTS - 1) * d,
        n
    )))
}

pub fn verify_realization(group: &PermGroup, g: &Graph, budget: u64) -> Result<Report> {
    let t = to_table_with_cap(group, MAX_REALIZE_ORDER as u128)?;
    verify_realization_table(&t, g, budget)
}

/// Computes `Aut Γ` and certifies it isomorphic to the table's group.
pub fn verify_realization_table(t: &CayleyTable, g: &Graph, budget: u64) -> Result<Report> {
    let mut r = ReportBuilder::new(
        "realize",
        json!({ "order": t.order(), "vertices": g.vertex_count(), "edges": g.edge_count() }),
    );
    let aut = match graph_automorphisms_with_budget(g, budget) {
        Ok(a) => a,
        Err(e) => {
            r.error("graph automorphisms", &e);
            return Ok(r.finish());
        }
    };
    r.check(
        "orders agree",
        aut.order() == t.order() as u128,
        format!("|Aut Γ| = {}, |G| = {}", aut.order(), t.order()),
    );
    r.result("aut_order", aut.order().to_string());
    r.result("vertex_count", g.vertex_count());
    r.result("edge_count", g.edge_count());
    if aut.order() == t.order() as u128 {
        let aut_table = to_table_with_cap(&aut, MAX_REALIZE_ORDER as u128)?;
        match isomorphic(t, &aut_table, budget) {
            Ok(found) => {
                r.check(
                    "Aut Γ ≅ G",
                    found.is_some(),
                    if found.is_some() { "isomorphism found" } else { "no isomorphism" },
                );
                if let Some(iso) = found {
                    let witness: Vec<String> = iso
                        .map
                        .iter()
                        .map(|&y| aut_table.labels()[y as usize].clone())
                        .collect();
                    r.result("witness", witness);
                }
            }
            Err(e) => r.error("isomorphism search", &e),
        }
    }
    let preserved = aut.generators().iter().all(|a| {
        (0..g.vertex_count() as u32).all(|v| g.role(v).class() == g.role(a.apply(v)).class())
    });
    r.check("automorphisms preserve vertex roles", preserved, "");
    Ok(r.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic, direct_product, dihedral, quaternion, sym};
    use crate::tables::DEFAULT_NODE_BUDGET;

    #[test]
    fn special_cases() {
        let t = realize(&PermGroup::trivial(1)).unwrap();
        assert_eq!(t.vertex_count(), 7);
        let c2 = realize(&cyclic(2).unwrap()).unwrap();
        assert_eq!(c2.vertex_count(), 10);
        for (g, graph) in [(PermGroup::trivial(1), t), (cyclic(2).unwrap(), c2)] {
            assert!(verify_realization(&g, &graph, DEFAULT_NODE_BUDGET).unwrap().passed);
        }
    }

    #[test]
    fn small_groups_realize() {
        let c2 = cyclic(2).unwrap();
        let groups = vec![
            cyclic(3).unwrap(),
            cyclic(5).unwrap(),
            sym(3).unwrap(),
            direct_product(&c2, &c2).group,
            dihedral(4).unwrap(),
        ];
        for g in groups {
            let graph = realize(&g).unwrap();
            let rep = verify_realization(&g, &graph, DEFAULT_NODE_BUDGET).unwrap();
            assert!(rep.passed, "{}", rep.render_text());
        }
        let q8 = quaternion();
        let graph = realize_table(&q8).unwrap();
        assert!(verify_realization_table(&q8, &graph, DEFAULT_NODE_BUDGET).unwrap().passed);
    }

    #[test]
    fn mismatched_group_fails() {
        let graph = realize(&cyclic(6).unwrap()).unwrap();
        let rep = verify_realization(&sym(3).unwrap(), &graph, DEFAULT_NODE_BUDGET).unwrap();
        assert!(!rep.passed);
    }
}
