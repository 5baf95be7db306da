//! Finite groups as multiplication tables, with identity at index 0.

mod aut;
mod hom;
mod search;

use std::collections::HashMap;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub use aut::{automorphism_group, is_complete, AutGroup};
pub use hom::{hom_search, hom_search_from_perm, isomorphic, GroupHom, HomConstraints, PermSourceHom};
pub use search::DEFAULT_NODE_BUDGET;

use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};

/// Default cap on the order of groups converted to tables.
pub const DEFAULT_TABLE_CAP: u128 = 20_000;

/// Tables up to this order get an exhaustive associativity check.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 200;
const ASSOCIATIVITY_SAMPLES: usize = 100_000;

#[derive(Clone)]
pub struct CayleyTable {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
    invariants: OnceLock<Invariants>,
}

#[derive(Clone, Debug)]
struct Invariants {
    orders: Vec<u32>,
    generators: Vec<u32>,
    class_of: Vec<u32>,
    class_sizes: Vec<u32>,
    profiles: Vec<Vec<u64>>,
}

impl CayleyTable {
    /// Validates and wraps a row-major table; element 0 must be the identity.
    pub fn from_parts(n: usize, mul: Vec<u32>, labels: Vec<String>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if mul.len() != n * n {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                n * n,
                mul.len()
            )));
        }
        if labels.len() != n {
            return Err(Error::InvalidTable("one label per element required".into()));
        }
        if mul.iter().any(|&x| x as usize >= n) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        for x in 0..n {
            if mul[x] as usize != x || mul[x * n] as usize != x {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
        }
        let mut seen = vec![0u32; n];
        for (stamp, row) in (1u32..).zip(0..n) {
            for c in 0..n {
                let v = mul[row * n + c] as usize;
                if seen[v] == stamp {
                    return Err(Error::InvalidTable(format!("row {} repeats an entry", row)));
                }
                seen[v] = stamp;
            }
        }
        let mut seen = vec![0u32; n];
        for (stamp, col) in ((n as u32 + 1)..).zip(0..n) {
            for r in 0..n {
                let v = mul[r * n + col] as usize;
                if seen[v] == stamp {
                    return Err(Error::InvalidTable(format!(
                        "column {} repeats an entry",
                        col
                    )));
                }
                seen[v] = stamp;
            }
        }
        let mut inv = vec![0u32; n];
        for x in 0..n {
            let y = (0..n).find(|&y| mul[x * n + y] == 0).unwrap();
            inv[x] = y as u32;
        }
        let table = CayleyTable {
            n,
            mul,
            inv,
            labels,
            invariants: OnceLock::new(),
        };
        table.check_associative()?;
        Ok(table)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.n;
        let assoc = |a: u32, b: u32, c: u32| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n as u32 {
                for b in 0..n as u32 {
                    for c in 0..n as u32 {
                        if !assoc(a, b, c) {
                            return Err(Error::InvalidTable(format!(
                                "not associative at ({}, {}, {})",
                                a, b, c
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_a550c);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let (a, b, c) = (
                    rng.gen_range(0..n as u32),
                    rng.gen_range(0..n as u32),
                    rng.gen_range(0..n as u32),
                );
                if !assoc(a, b, c) {
                    return Err(Error::InvalidTable(format!(
                        "not associative at sampled ({}, {}, {})",
                        a, b, c
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn raw(&self) -> &[u32] {
        &self.mul
    }

    pub fn pow(&self, x: u32, e: u64) -> u32 {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    fn invariants(&self) -> &Invariants {
        self.invariants.get_or_init(|| Invariants::compute(self))
    }

    pub fn element_order(&self, x: u32) -> u32 {
        self.invariants().orders[x as usize]
    }

    /// Greedy generating sequence: repeatedly the largest-order element outside
    /// the current span, ties to the smallest index.
    pub fn generators(&self) -> &[u32] {
        &self.invariants().generators
    }

    pub fn class_size(&self, x: u32) -> u32 {
        let inv = self.invariants();
        inv.class_sizes[inv.class_of[x as usize] as usize]
    }

    pub fn class_count(&self) -> usize {
        self.invariants().class_sizes.len()
    }

    /// Isomorphism-invariant fingerprint of an element.
    pub fn profile(&self, x: u32) -> &[u64] {
        &self.invariants().profiles[x as usize]
    }

    pub fn span(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
            k += 1;
        }
        out
    }

    pub fn center(&self) -> Vec<u32> {
        let gens = self.generators();
        (0..self.n as u32)
            .filter(|&x| gens.iter().all(|&s| self.mul(x, s) == self.mul(s, x)))
            .collect()
    }

    pub fn is_centreless(&self) -> bool {
        self.center().len() == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.n
    }

    /// Canonical digest of the multiplication table bytes (little-endian u32).
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.n as u64).to_le_bytes());
        for &x in &self.mul {
            hasher.update(x.to_le_bytes());
        }
        hex::encode(hasher.finalize())
    }

    /// Left regular representation on the element indices.
    pub fn regular_representation(&self) -> PermGroup {
        let gens = self
            .generators()
            .iter()
            .map(|&g| {
                Permutation::from_images_unchecked(
                    (0..self.n as u32).map(|x| self.mul(g, x)).collect(),
                )
            })
            .collect();
        PermGroup::new(self.n, gens).expect("regular representation is valid")
    }

    /// Direct product with elements `(a, b)` at index `a * |B| + b`.
    pub fn direct_product(&self, other: &CayleyTable) -> Result<CayleyTable> {
        let (na, nb) = (self.n, other.n);
        let n = na * nb;
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            let (xa, xb) = ((x / nb) as u32, (x % nb) as u32);
            for y in 0..n {
                let (ya, yb) = ((y / nb) as u32, (y % nb) as u32);
                mul.push(self.mul(xa, ya) * nb as u32 + other.mul(xb, yb));
            }
        }
        let labels = (0..n)
            .map(|x| format!("({}, {})", self.labels[x / nb], other.labels[x % nb]))
            .collect();
        CayleyTable::from_parts(n, mul, labels)
    }
}

impl Invariants {
    fn compute(t: &CayleyTable) -> Self {
        let n = t.n;
        let mut orders = vec![0u32; n];
        for x in 0..n as u32 {
            let mut y = x;
            let mut k = 1;
            while y != 0 {
                y = t.mul(y, x);
                k += 1;
            }
            orders[x as usize] = k;
        }
        // Greedy generating sequence.
        let mut by_order: Vec<u32> = (0..n as u32).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(orders[x as usize]), x));
        let mut generators = Vec::new();
        let mut in_span = vec![false; n];
        in_span[0] = true;
        let mut covered = 1;
        while covered < n {
            let next = *by_order.iter().find(|&&x| !in_span[x as usize]).unwrap();
            generators.push(next);
            in_span.iter_mut().for_each(|b| *b = false);
            covered = 0;
            for x in t.span(&generators) {
                in_span[x as usize] = true;
                covered += 1;
            }
        }
        // Conjugacy classes via conjugation by the generators.
        let mut class_of = vec![u32::MAX; n];
        let mut class_sizes = Vec::new();
        for x in 0..n as u32 {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let id = class_sizes.len() as u32;
            class_of[x as usize] = id;
            let mut members = vec![x];
            let mut k = 0;
            while k < members.len() {
                let y = members[k];
                for &g in &generators {
                    let z = t.conj(g, y);
                    if class_of[z as usize] == u32::MAX {
                        class_of[z as usize] = id;
                        members.push(z);
                    }
                }
                k += 1;
            }
            class_sizes.push(members.len() as u32);
        }
        let profiles = (0..n as u32)
            .map(|x| {
                let ord = orders[x as usize] as u64;
                let mut prof = vec![ord, class_sizes[class_of[x as usize] as usize] as u64];
                for p in prime_divisors(ord) {
                    let y = t.pow(x, p);
                    prof.push(p);
                    prof.push(class_sizes[class_of[y as usize] as usize] as u64);
                }
                prof
            })
            .collect();
        Invariants {
            orders,
            generators,
            class_of,
            class_sizes,
            profiles,
        }
    }
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl std::fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CayleyTable(order {})", self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    order: usize,
    mul: Vec<u32>,
    labels: Vec<String>,
}

impl Serialize for CayleyTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableRepr {
            order: self.n,
            mul: self.mul.clone(),
            labels: self.labels.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CayleyTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TableRepr::deserialize(d)?;
        CayleyTable::from_parts(repr.order, repr.mul, repr.labels)
            .map_err(serde::de::Error::custom)
    }
}

/// A permutation group together with its enumerated elements and table.
#[derive(Clone)]
pub struct EnumeratedGroup {
    group: PermGroup,
    elements: Vec<Permutation>,
    base: Vec<u32>,
    index: HashMap<Vec<u32>, u32>,
    table: CayleyTable,
}

impl EnumeratedGroup {
    pub fn new(group: &PermGroup, cap: u128) -> Result<Self> {
        let order = group.order();
        if order > cap {
            return Err(Error::OrderCap {
                order,
                cap,
                what: "Cayley table",
            });
        }
        let elements = group.elements_with_override(true)?;
        let base = group.base();
        let n = elements.len();
        let base_images: Vec<Vec<u32>> = elements
            .iter()
            .map(|e| base.iter().map(|&b| e.apply(b)).collect())
            .collect();
        let mut index = HashMap::with_capacity(n);
        for (i, key) in base_images.iter().enumerate() {
            index.insert(key.clone(), i as u32);
        }
        let mut mul = Vec::with_capacity(n * n);
        let mut key = vec![0u32; base.len()];
        for a in &elements {
            for bi in &base_images {
                for (k, &x) in bi.iter().enumerate() {
                    key[k] = a.apply(x);
                }
                mul.push(index[key.as_slice()]);
            }
        }
        let labels = elements.iter().map(|e| e.to_string()).collect();
        let table = CayleyTable::from_parts(n, mul, labels)?;
        Ok(EnumeratedGroup {
            group: group.clone(),
            elements,
            base,
            index,
            table,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn into_table(self) -> CayleyTable {
        self.table
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    /// Index of `p`, or `None` if it is not in the group.
    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        if p.degree() != self.group.degree() {
            return None;
        }
        let key: Vec<u32> = self.base.iter().map(|&b| p.apply(b)).collect();
        let i = *self.index.get(&key)?;
        (self.elements[i as usize] == *p).then_some(i)
    }
}

/// Cayley table of a permutation group, identity first, labelled by cycle form.
pub fn to_table(group: &PermGroup) -> Result<CayleyTable> {
    to_table_with_cap(group, DEFAULT_TABLE_CAP)
}

pub fn to_table_with_cap(group: &PermGroup, cap: u128) -> Result<CayleyTable> {
    Ok(EnumeratedGroup::new(group, cap)?.into_table())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(deg: usize, s: &str) -> Permutation {
        Permutation::parse(deg, s).unwrap()
    }

    #[test]
    fn sym3_table_identity_row() {
        let s3 = PermGroup::new(3, vec![p(3, "(0 1 2)"), p(3, "(0 1)")]).unwrap();
        let t = to_table(&s3).unwrap();
        assert_eq!(t.order(), 6);
        for x in 0..6 {
            assert_eq!(t.mul(0, x), x);
            assert_eq!(t.mul(x, 0), x);
            assert_eq!(t.mul(x, t.inv(x)), 0);
        }
        assert_eq!(t.labels()[0], "()");
    }

    #[test]
    fn cyclic4_is_addition_mod_4() {
        let c4 = PermGroup::new(4, vec![p(4, "(0 1 2 3)")]).unwrap();
        let t = to_table(&c4).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(t.mul(x, y), (x + y) % 4);
            }
        }
    }

    #[test]
    fn table_agrees_with_composition() {
        let a5 = PermGroup::new(5, vec![p(5, "(0 1 2)"), p(5, "(0 1 3)"), p(5, "(0 1 4)")])
            .unwrap();
        let e = EnumeratedGroup::new(&a5, DEFAULT_TABLE_CAP).unwrap();
        let t = e.table();
        assert_eq!(t.order(), 60);
        for a in 0..60 {
            for b in 0..60 {
                let prod = e.element(a) * e.element(b);
                assert_eq!(e.index_of(&prod), Some(t.mul(a, b)));
            }
        }
        assert_eq!(e.index_of(&p(5, "(0 1)")), None);
    }

    #[test]
    fn order_cap_is_enforced() {
        let s8 = PermGroup::new(8, vec![p(8, "(0 1 2 3 4 5 6 7)"), p(8, "(0 1)")]).unwrap();
        let err = to_table_with_cap(&s8, 1000).unwrap_err();
        assert!(matches!(err, Error::OrderCap { order: 40320, .. }));
    }

    #[test]
    fn rejects_bad_tables() {
        // Not a Latin square.
        assert!(CayleyTable::from_parts(2, vec![0, 1, 1, 1], vec!["a".into(), "b".into()]).is_err());
        // Latin square with identity but not associative (order 5 loop).
        let loop5: Vec<u32> = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        let labels = (0..5).map(|i| i.to_string()).collect();
        let err = CayleyTable::from_parts(5, loop5, labels).unwrap_err();
        assert!(matches!(err, Error::InvalidTable(m) if m.contains("associative")));
    }

    #[test]
    fn greedy_generators_and_classes() {
        let s3 = PermGroup::new(3, vec![p(3, "(0 1 2)"), p(3, "(0 1)")]).unwrap();
        let t = to_table(&s3).unwrap();
        let gens = t.generators();
        assert_eq!(gens.len(), 2);
        assert_eq!(t.element_order(gens[0]), 3);
        assert_eq!(t.class_count(), 3);
        assert!(t.is_centreless());
    }

    #[test]
    fn table_json_round_trip() {
        let c4 = PermGroup::new(4, vec![p(4, "(0 1 2 3)")]).unwrap();
        let t = to_table(&c4).unwrap();
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["order"], 4);
        let back: CayleyTable = serde_json::from_value(json).unwrap();
        assert_eq!(back.digest(), t.digest());
    }
}
