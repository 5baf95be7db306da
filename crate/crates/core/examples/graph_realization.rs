//! Graphs with a prescribed automorphism group, and graph automorphisms.

use autotower::constructions::{cyclic, dihedral, quaternion, sym};
use autotower::graph::{graph_automorphisms, realize, realize_table, verify_realization_table, Graph};
use autotower::tables::{to_table, DEFAULT_NODE_BUDGET};
use autotower::Result;

fn main() -> Result<()> {
    let petersen = {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.extend([(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]);
        }
        Graph::from_edges(10, &edges)?
    };
    println!("|Aut(Petersen)| = {}", graph_automorphisms(&petersen)?.order());

    for (name, t) in [
        ("C_1", to_table(&cyclic(1)?)?),
        ("C_2", to_table(&cyclic(2)?)?),
        ("C_6", to_table(&cyclic(6)?)?),
        ("Sym(3)", to_table(&sym(3)?)?),
        ("D_8", to_table(&dihedral(4)?)?),
        ("Q_8", quaternion()),
    ] {
        let g = realize_table(&t)?;
        let r = verify_realization_table(&t, &g, DEFAULT_NODE_BUDGET)?;
        println!(
            "{:6} {:4} vertices {:4} edges  verified {}",
            name,
            g.vertex_count(),
            g.edge_count(),
            r.passed
        );
    }

    let g = realize(&cyclic(3)?)?;
    let text = g.to_edge_list();
    println!("edge list of the C_3 graph begins:");
    for line in text.lines().take(5) {
        println!("  {}", line);
    }
    let back = Graph::parse_edge_list(&text)?;
    println!("re-parsed graph has automorphism group of order {}", graph_automorphisms(&back)?.order());
    Ok(())
}
