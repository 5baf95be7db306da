//! Stabilizer chains, orbits, normalisers and subnormal chains.

use autotower::constructions::{alt, dihedral, sym};
use autotower::{PermGroup, Permutation, Result};

fn main() -> Result<()> {
    let p = Permutation::parse(6, "(0 1 2)(3 4)")?;
    let q = Permutation::parse(6, "(0 5)")?;
    println!("p = {}, q = {}, p∘q = {}, order of p = {}", p, q, p.compose(&q)?, p.order());

    let g = PermGroup::new(6, vec![p.clone(), q.clone()])?;
    println!("⟨p, q⟩ has order {} with orbits {:?}", g.order(), g.orbits());
    println!("base {:?}, transversal sizes {:?}", g.base(), g.transversal_sizes());

    let s5 = sym(5)?;
    let a5 = alt(5)?;
    let d10 = dihedral(5)?;
    println!("|Sym(5)| = {}, |Alt(5)| = {}, Alt(5) simple: {}", s5.order(), a5.order(), a5.is_simple()?);
    println!("N_Sym(5)(D_10) has order {}", s5.normalizer(&d10)?.order());
    println!("C_Sym(5)(⟨(0 1 2 3 4)⟩) has order {}", s5.centralizer(&s5.subgroup(vec![Permutation::parse(5, "(0 1 2 3 4)")?])?)?.order());

    let s4 = sym(4)?;
    let d8 = dihedral(4)?;
    println!("Z(D_8) has order {}", d8.center()?.order());
    let v = s4.subgroup(vec![Permutation::parse(4, "(0 1)")?])?;
    match s4.is_subnormal(&v)? {
        Some(cert) => println!("⟨(0 1)⟩ is subnormal in Sym(4) with defect {}", cert.defect),
        None => println!("⟨(0 1)⟩ is not subnormal in Sym(4)"),
    }
    let k = s4.subgroup(vec![Permutation::parse(4, "(0 1)(2 3)")?])?;
    let cert = s4.is_subnormal(&k)?.expect("subnormal through the Klein four-group");
    let orders: Vec<u128> = cert.chain.iter().map(|h| h.order()).collect();
    println!("⟨(0 1)(2 3)⟩ ⊴ … ⊴ Sym(4) with orders {:?}", orders);
    Ok(())
}
