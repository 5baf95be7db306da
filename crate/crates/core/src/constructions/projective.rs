//! `PGL(2,q)` and `PΓL(2,q)` acting on the `q + 1` points of the projective line.

use super::field::{FiniteField, ProjectivePoint};
use super::semidirect;
use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};

/// The action of the matrix `[[a, b], [c, d]]` on the projective line.
pub fn mobius(f: &FiniteField, [a, b, c, d]: [u32; 4]) -> Result<Permutation> {
    if f.add(f.mul(a, d), f.neg(f.mul(b, c))) == 0 {
        return Err(Error::Construction("singular matrix".into()));
    }
    let images = ProjectivePoint::all(f)
        .into_iter()
        .map(|pt| {
            let (x, y) = pt.coordinates();
            let u = f.add(f.mul(a, x), f.mul(b, y));
            let v = f.add(f.mul(c, x), f.mul(d, y));
            ProjectivePoint::from_coordinates(f, u, v)
                .expect("nonsingular matrices map points to points")
                .index()
        })
        .collect();
    Permutation::from_images(images)
}

/// A field automorphism applied coordinatewise to the projective line.
pub fn projective_frobenius(f: &FiniteField, field_map: &Permutation) -> Permutation {
    let images = ProjectivePoint::all(f)
        .into_iter()
        .map(|pt| match pt {
            ProjectivePoint::Infinity => 0,
            ProjectivePoint::Affine(x) => ProjectivePoint::Affine(field_map.apply(x)).index(),
        })
        .collect();
    Permutation::from_images(images).expect("field automorphisms permute the line")
}

fn check_order(f: &FiniteField) -> Result<()> {
    if f.order() <= 3 {
        return Err(Error::OutOfRange(format!(
            "projective groups are built only over fields with more than 3 elements, got GF({})",
            f.order()
        )));
    }
    Ok(())
}

/// `PGL(2,q)`, generated by `x ↦ x + 1`, `x ↦ ωx` and `x ↦ 1/x`.
pub fn pgl2(f: &FiniteField) -> Result<PermGroup> {
    check_order(f)?;
    let omega = f.primitive_element();
    let gens = vec![
        mobius(f, [1, 1, 0, 1])?,
        mobius(f, [omega, 0, 0, 1])?,
        mobius(f, [0, 1, 1, 0])?,
    ];
    PermGroup::new(f.order() as usize + 1, gens)
}

/// `PGL(2,q) ⋊ H` for the Galois subgroup `H` of order `h`.
pub fn pgammal2(f: &FiniteField, h: u32) -> Result<PermGroup> {
    let base = pgl2(f)?;
    let gal = f.galois_subgroup(h)?;
    let action: Vec<Permutation> = gal
        .generators()
        .iter()
        .map(|g| projective_frobenius(f, g))
        .collect();
    semidirect(&base, &gal, &action)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u32, k: u32) -> FiniteField {
        FiniteField::new(p, k).unwrap()
    }

    #[test]
    fn pgl2_orders() {
        for (p, k) in [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = field(p, k);
            let q = f.order() as u128;
            let g = pgl2(&f).unwrap();
            assert_eq!(g.degree() as u128, q + 1);
            assert_eq!(g.order(), q * (q * q - 1), "PGL(2,{})", q);
        }
    }

    #[test]
    fn pgl2_is_sharply_three_transitive() {
        for (p, k) in [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = field(p, k);
            let g = pgl2(&f).unwrap();
            let q = f.order();
            assert_eq!(g.orbit(0).len() as u32, q + 1);
            let stab = g.stabilizer_points(&[0]);
            assert_eq!(stab.orbit(1).len() as u32, q);
            let stab2 = g.stabilizer_points(&[0, 1]);
            assert_eq!(stab2.orbit(2).len() as u32, q - 1);
            assert_eq!(g.stabilizer_points(&[0, 1, 2]).order(), 1);
        }
    }

    #[test]
    fn pgammal2_orders() {
        assert_eq!(pgammal2(&field(2, 2), 2).unwrap().order(), 120);
        assert_eq!(pgammal2(&field(2, 3), 3).unwrap().order(), 1512);
        assert_eq!(pgammal2(&field(3, 2), 2).unwrap().order(), 1440);
        assert_eq!(pgammal2(&field(3, 2), 1).unwrap().order(), 720);
        assert!(pgammal2(&field(2, 3), 2).is_err());
    }

    #[test]
    fn small_fields_rejected() {
        assert!(matches!(pgl2(&field(3, 1)), Err(Error::OutOfRange(_))));
        assert!(matches!(pgl2(&field(2, 1)), Err(Error::OutOfRange(_))));
    }
}
