//! Automorphism towers G ⊴ Aut G ⊴ Aut Aut G ⊴ … of centreless groups.

use autotower::constructions::{alt, dihedral, direct_product, sym};
use autotower::towers::{automorphism_tower, TowerCaps};
use autotower::{PermGroup, Result};

fn main() -> Result<()> {
    let groups: Vec<(&str, PermGroup)> = vec![
        ("Sym(3)", sym(3)?),
        ("Alt(4)", alt(4)?),
        ("D_10", dihedral(5)?),
        ("D_14", dihedral(7)?),
        ("Alt(5)", alt(5)?),
        ("Alt(6)", alt(6)?),
        ("Sym(3) × Sym(3)", direct_product(&sym(3)?, &sym(3)?).group),
    ];
    for (name, g) in groups {
        let rec = automorphism_tower(&g, TowerCaps::default())?;
        println!("{:16} tau {}  orders {:?}  {:?}", name, rec.tau, rec.orders(), rec.termination);
    }

    let caps = TowerCaps {
        size_cap: 100,
        ..TowerCaps::default()
    };
    let rec = automorphism_tower(&alt(5)?, caps)?;
    println!(
        "Alt(5) with size cap 100: {:?}, tau at least {}, next order {:?}",
        rec.termination, rec.tau, rec.untabulated_order
    );

    match automorphism_tower(&dihedral(4)?, TowerCaps::default()) {
        Ok(_) => println!("unexpected tower for D_8"),
        Err(e) => println!("D_8: {}", e),
    }
    Ok(())
}
