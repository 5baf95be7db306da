//! Concrete groups: cyclic, dihedral, symmetric and alternating groups,
//! products, wreath towers and projective groups over finite fields.

mod field;
mod projective;
mod wreath;

pub use field::{FiniteField, ProjectivePoint, MAX_FIELD_ORDER};
pub use projective::{mobius, pgammal2, pgl2, projective_frobenius};
pub use wreath::{wreath_tower, WreathTower, MAX_WREATH_HEIGHT};

use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};
use crate::tables::CayleyTable;

fn cycle(degree: usize, points: &[u32]) -> Permutation {
    Permutation::from_cycles(degree, &[points.to_vec()]).expect("points are in range")
}

/// `C_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::OutOfRange("cyclic group needs n ≥ 1".into()));
    }
    let rotation: Vec<u32> = (0..n as u32).collect();
    PermGroup::new(n, vec![cycle(n, &rotation)])
}

/// The symmetry group of the `n`-gon, order `2n`, on its vertices.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("dihedral group needs n ≥ 3, got {}", n)));
    }
    let rotation: Vec<u32> = (0..n as u32).collect();
    let reflection =
        Permutation::from_images((0..n as u32).map(|x| (n as u32 - x) % n as u32).collect())?;
    PermGroup::new(n, vec![cycle(n, &rotation), reflection])
}

pub fn sym(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::OutOfRange("symmetric group needs n ≥ 1".into()));
    }
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let all: Vec<u32> = (0..n as u32).collect();
    PermGroup::new(n, vec![cycle(n, &all), cycle(n, &[0, 1])])
}

/// `Alt(n)`, generated by the 3-cycles `(0 1 k)`.
pub fn alt(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("alternating group needs n ≥ 3, got {}", n)));
    }
    let gens = (2..n as u32).map(|k| cycle(n, &[0, 1, k])).collect();
    PermGroup::new(n, gens)
}

/// `A × B` on the disjoint union of the domains, `A` on the first points.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: PermGroup,
    /// The factor `A × 1`.
    pub left: PermGroup,
    /// The factor `1 × B`.
    pub right: PermGroup,
}

pub fn direct_product(a: &PermGroup, b: &PermGroup) -> DirectProduct {
    let degree = a.degree() + b.degree();
    let left_gens: Vec<Permutation> = a.generators().iter().map(|g| g.extend(degree)).collect();
    let right_gens: Vec<Permutation> = b
        .generators()
        .iter()
        .map(|g| g.shifted(a.degree(), degree))
        .collect();
    let left = PermGroup::new(degree, left_gens.clone()).expect("degrees agree");
    let right = PermGroup::new(degree, right_gens.clone()).expect("degrees agree");
    let group = PermGroup::new(degree, [left_gens, right_gens].concat()).expect("degrees agree");
    DirectProduct { group, left, right }
}

/// `N ⋊ H`, where `H`'s generators act on `N`'s domain through `action`.
///
/// The action permutations must normalize `N` and generate a copy of `H`
/// meeting `N` trivially.
pub fn semidirect(n: &PermGroup, h: &PermGroup, action: &[Permutation]) -> Result<PermGroup> {
    if action.len() != h.generators().len() {
        return Err(Error::Construction(format!(
            "{} action permutations for {} generators",
            action.len(),
            h.generators().len()
        )));
    }
    for a in action {
        n.check_degree(a.degree())?;
        if let Some(g) = n.generators().iter().find(|g| !n.has(&g.conjugate_by(a))) {
            return Err(Error::Construction(format!(
                "{} does not normalize the base group (moves {} outside it)",
                a, g
            )));
        }
    }
    let image = PermGroup::new(n.degree(), action.to_vec())?;
    let gens = [n.generators(), action].concat();
    let result = PermGroup::new(n.degree(), gens)?;
    if image.order() != h.order() || result.order() != n.order() * h.order() {
        return Err(Error::Construction(format!(
            "order mismatch: |N| = {}, |H| = {}, action image {}, product {}",
            n.order(),
            h.order(),
            image.order(),
            result.order()
        )));
    }
    Ok(result)
}

/// The quaternion group `Q_8` as a table: index `2u + s` is `(−1)^s · u`
/// for `u` in `1, i, j, k`.
pub fn quaternion() -> CayleyTable {
    // Unit products: UNIT[a][b] = (sign, unit) with a·b = sign · unit.
    const UNIT: [[(u32, u32); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut mul = Vec::with_capacity(64);
    for x in 0..8u32 {
        for y in 0..8u32 {
            let (s, u) = UNIT[(x / 2) as usize][(y / 2) as usize];
            mul.push(2 * u + (s + x % 2 + y % 2) % 2);
        }
    }
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|x| format!("{}{}", if x % 2 == 1 { "-" } else { "" }, names[x / 2]))
        .collect();
    CayleyTable::from_parts(8, mul, labels).expect("quaternion table is a group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::to_table;

    #[test]
    fn basic_families() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(cyclic(7).unwrap().order(), 7);
        let d5 = dihedral(5).unwrap();
        assert_eq!(d5.order(), 10);
        assert!(d5.center().unwrap().is_trivial());
        assert_eq!(dihedral(4).unwrap().center().unwrap().order(), 2);
        assert_eq!(sym(1).unwrap().order(), 1);
        assert_eq!(sym(5).unwrap().order(), 120);
        let a5 = alt(5).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(a5.is_simple().unwrap());
        assert!(alt(2).is_err() && dihedral(2).is_err() && cyclic(0).is_err());
    }

    #[test]
    fn direct_products() {
        let p = direct_product(&sym(3).unwrap(), &alt(5).unwrap());
        assert_eq!(p.group.degree(), 8);
        assert_eq!(p.group.order(), 360);
        assert!(p.left.commutes_elementwise(&p.right));
        assert!(p.left.is_normal_in(&p.group) && p.right.is_normal_in(&p.group));

        let c2 = cyclic(2).unwrap();
        let v = direct_product(&c2, &c2).group;
        assert_eq!(v.order(), 4);
        assert!(v.generators().iter().all(|g| g.order() == 2));

        let a = dihedral(4).unwrap();
        let padded = direct_product(&a, &PermGroup::trivial(1));
        assert_eq!(padded.group.order(), 8);
        assert!(padded.group.same_group(&a.extended(5)));

        let d4 = dihedral(4).unwrap();
        let c3 = cyclic(3).unwrap();
        let p = direct_product(&d4, &c3);
        assert_eq!(p.group.center().unwrap().order(), 2 * 3);
    }

    #[test]
    fn frobenius_group_of_order_20() {
        let c5 = cyclic(5).unwrap();
        let c4 = cyclic(4).unwrap();
        let doubling = Permutation::from_images(vec![0, 2, 4, 1, 3]).unwrap();
        let f20 = semidirect(&c5, &c4, &[doubling]).unwrap();
        assert_eq!(f20.order(), 20);
        assert!(f20.center().unwrap().is_trivial());

        let same = semidirect(&c5, &PermGroup::trivial(1), &[]).unwrap();
        assert!(same.same_group(&c5));

        let not_normalizing = Permutation::from_images(vec![1, 0, 2, 3, 4]).unwrap();
        assert!(matches!(
            semidirect(&c5, &c4, &[not_normalizing]),
            Err(Error::Construction(_))
        ));
        // Negation has order 2, not 4: the action is not faithful.
        let negation = Permutation::from_images(vec![0, 4, 3, 2, 1]).unwrap();
        assert!(matches!(semidirect(&c5, &c4, &[negation]), Err(Error::Construction(_))));
    }

    #[test]
    fn quaternion_group() {
        let q = quaternion();
        assert_eq!(q.order(), 8);
        assert_eq!(q.center().len(), 2);
        let involutions = (0..8).filter(|&x| q.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        let d4 = to_table(&dihedral(4).unwrap()).unwrap();
        assert!(crate::tables::isomorphic(&q, &d4, 1_000_000).unwrap().is_none());
    }
}
