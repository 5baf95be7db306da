//! Cayley tables, automorphism groups, isomorphisms and homomorphism search.

use autotower::constructions::{alt, dihedral, quaternion, sym};
use autotower::tables::{automorphism_group, hom_search, isomorphic, to_table, HomConstraints, DEFAULT_NODE_BUDGET};
use autotower::Result;

fn main() -> Result<()> {
    for (name, t) in [
        ("Sym(3)", to_table(&sym(3)?)?),
        ("D_8", to_table(&dihedral(4)?)?),
        ("Q_8", quaternion()),
        ("Alt(5)", to_table(&alt(5)?)?),
        ("Sym(6)", to_table(&sym(6)?)?),
    ] {
        let aut = automorphism_group(&t)?;
        println!(
            "{:7} order {:4}  centre {:2}  |Aut| {:5}  |Inn| {:4}  complete {}",
            name,
            t.order(),
            t.center().len(),
            aut.order(),
            aut.inner.order(),
            aut.is_complete()
        );
    }

    let s3 = to_table(&sym(3)?)?;
    let d6 = to_table(&dihedral(3)?)?;
    let iso = isomorphic(&s3, &d6, DEFAULT_NODE_BUDGET)?;
    println!("Sym(3) ≅ D_6: {}", iso.is_some());

    let a5 = to_table(&alt(5)?)?;
    let a4 = to_table(&alt(4)?)?;
    let onto = HomConstraints {
        surjective: true,
        ..HomConstraints::default()
    };
    println!("surjection Alt(5) → Alt(4): {:?}", hom_search(&a5, &a4, &onto, DEFAULT_NODE_BUDGET)?.map(|h| h.map));
    let s4 = to_table(&sym(4)?)?;
    let c2 = to_table(&autotower::constructions::cyclic(2)?)?;
    let sign = hom_search(&s4, &c2, &onto, DEFAULT_NODE_BUDGET)?.expect("the sign map");
    println!("a surjection Sym(4) → C_2 has kernel of size {}", sign.map.iter().filter(|&&x| x == 0).count());
    Ok(())
}
