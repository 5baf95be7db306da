//! Finite fields, the projective line, PGL(2,q) and PΓL(2,q).

use autotower::constructions::{pgammal2, pgl2, FiniteField, ProjectivePoint};
use autotower::Result;

fn main() -> Result<()> {
    for (p, k) in [(2, 2), (2, 3), (3, 2), (5, 1), (2, 4)] {
        let f = FiniteField::new(p, k)?;
        println!(
            "GF({}): modulus {:?}, primitive element {:?}, axioms {:?}",
            f.order(),
            f.modulus(),
            f.coefficients(f.primitive_element()),
            f.check_axioms()
        );
    }

    let f = FiniteField::new(3, 2)?;
    let w = f.primitive_element();
    let x = f.add(w, 1);
    println!("in GF(9): ω+1 = {:?}, (ω+1)⁻¹ = {:?}", f.coefficients(x), f.inv(x).map(|y| f.coefficients(y)));
    let points: Vec<String> = ProjectivePoint::all(&f).iter().take(4).map(|pt| format!("{:?}", pt)).collect();
    println!("first points of the projective line over GF(9): {}", points.join(", "));

    for (p, k) in [(2, 2), (2, 3), (3, 2)] {
        let f = FiniteField::new(p, k)?;
        let pgl = pgl2(&f)?;
        let full = pgammal2(&f, k)?;
        println!(
            "q = {}: |PGL(2,q)| = {}, |PΓL(2,q)| = {}, Galois group order {}",
            f.order(),
            pgl.order(),
            full.order(),
            f.galois_group().order()
        );
    }
    Ok(())
}
