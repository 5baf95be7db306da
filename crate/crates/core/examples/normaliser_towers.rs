//! Iterated wreath products and the normaliser tower of W_0 in W_n.

use autotower::constructions::{sym, wreath_tower, WreathTower};
use autotower::towers::normaliser_tower;
use autotower::{Permutation, Result};

fn main() -> Result<()> {
    for n in 1..=4 {
        let w = wreath_tower(n)?;
        let orders: Vec<u128> = w.groups.iter().map(|g| g.order()).collect();
        let expected: Vec<u128> = (0..=n).map(WreathTower::expected_order).collect();
        println!("W_0..W_{} on {} points: orders {:?} (closed form {:?})", n, w.degree(), orders, expected);
        let rec = normaliser_tower(&w.groups[0], w.top())?;
        println!("  normaliser tower of W_0 in W_{}: height {}, orders {:?}", n, rec.height, rec.orders());
    }

    let s6 = sym(6)?;
    let h = s6.subgroup(vec![Permutation::parse(6, "(0 1)")?])?;
    let rec = normaliser_tower(&h, &s6)?;
    println!("⟨(0 1)⟩ in Sym(6): height {}, orders {:?}, reaches Sym(6): {}", rec.height, rec.orders(), rec.terminated_at_full);
    Ok(())
}
