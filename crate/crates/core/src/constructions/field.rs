//! Finite fields `GF(p^k)` in a polynomial basis.
//!
//! The element with coefficients `c_0 + c_1 x + … + c_{k-1} x^{k-1}` has index
//! `c_0 + c_1 p + … + c_{k-1} p^{k-1}`, so `0` and `1` are indices 0 and 1 and
//! the prime subfield occupies indices `0..p`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};

/// Largest field order with precomputed tables.
pub const MAX_FIELD_ORDER: u32 = 1024;

#[derive(Clone, Debug, Serialize)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic, low degree first, length `k + 1`.
    modulus: Vec<u32>,
    #[serde(skip)]
    add: Vec<u32>,
    #[serde(skip)]
    mul: Vec<u32>,
    #[serde(skip)]
    inv: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn digits(mut x: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

/// Remainder of `a` modulo the monic polynomial `m`, coefficients mod `p`.
fn poly_rem(mut a: Vec<u32>, m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let shift = a.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                a[shift + i] = (a[shift + i] + (p - lead) * c) % p;
            }
        }
    }
    a
}

/// Monic polynomials of degree `d`, low degree first, lowest coefficients
/// most significant.
fn monic_polynomials(p: u32, d: u32) -> impl Iterator<Item = Vec<u32>> {
    (0..p.pow(d)).map(move |m| {
        let mut c: Vec<u32> = digits(m, p, d);
        c.reverse();
        c.push(1);
        c
    })
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = (f.len() - 1) as u32;
    (1..k).all(|d| {
        monic_polynomials(p, d).all(|g| poly_rem(f.to_vec(), &g, p).iter().any(|&c| c != 0))
    })
}

impl FiniteField {
    /// `GF(p^k)` with the lexicographically least monic irreducible modulus.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::OutOfRange(format!("{} is not prime", p)));
        }
        if k == 0 {
            return Err(Error::OutOfRange("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_FIELD_ORDER as u64);
        let q = q.ok_or_else(|| {
            Error::OutOfRange(format!("field order {}^{} exceeds {}", p, k, MAX_FIELD_ORDER))
        })? as u32;
        let modulus = monic_polynomials(p, k)
            .find(|f| is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree");

        let n = q as usize;
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        let encode = |c: &[u32]| c.iter().rev().fold(0u32, |acc, &d| acc * p + d);
        let all: Vec<Vec<u32>> = (0..q).map(|x| digits(x, p, k)).collect();
        for a in 0..n {
            for b in 0..n {
                let sum: Vec<u32> = (0..k as usize).map(|i| (all[a][i] + all[b][i]) % p).collect();
                add[a * n + b] = encode(&sum);
                let mut prod = vec![0u32; 2 * k as usize - 1];
                for (i, &x) in all[a].iter().enumerate() {
                    for (j, &y) in all[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                mul[a * n + b] = encode(&poly_rem(prod, &modulus, p));
            }
        }
        let mut inv = vec![0u32; n];
        for a in 1..n {
            inv[a] = (1..q).find(|&b| mul[a * n + b as usize] == 1).expect("field has inverses");
        }
        Ok(FiniteField {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            inv,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let mut r = 1;
        for _ in 0..e {
            r = self.mul(r, a);
        }
        r
    }

    /// Coefficients of an element, low degree first.
    pub fn coefficients(&self, a: u32) -> Vec<u32> {
        digits(a, self.p, self.k)
    }

    /// Least-index generator of the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        (1..self.q)
            .find(|&a| {
                let mut x = a;
                let mut ord = 1;
                while x != 1 {
                    x = self.mul(x, a);
                    ord += 1;
                }
                ord == self.q - 1
            })
            .expect("multiplicative group is cyclic")
    }

    /// `x ↦ x^p` as a permutation of the field elements.
    pub fn frobenius(&self) -> Permutation {
        Permutation::from_images((0..self.q).map(|x| self.pow(x, self.p as u64)).collect())
            .expect("Frobenius is a bijection")
    }

    /// `Gal(GF(p^k)/GF(p)) = ⟨Frobenius⟩`, acting on the field elements.
    pub fn galois_group(&self) -> PermGroup {
        PermGroup::new(self.q as usize, vec![self.frobenius()]).expect("degree matches")
    }

    /// The subgroup of order `h` in the Galois group, `⟨Frob^{k/h}⟩`.
    pub fn galois_subgroup(&self, h: u32) -> Result<PermGroup> {
        if h == 0 || !self.k.is_multiple_of(h) {
            return Err(Error::OutOfRange(format!(
                "Galois group of GF({}) is cyclic of order {}; no subgroup of order {}",
                self.q, self.k, h
            )));
        }
        let gen = self.frobenius().pow((self.k / h) as u64);
        PermGroup::new(self.q as usize, vec![gen])
    }

    /// Field axioms on all pairs and triples; returns the first failure.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let q = self.q;
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return Err(format!("identity law fails at {}", a));
            }
            if a != 0 && self.mul(a, self.inv[a as usize]) != 1 {
                return Err(format!("inverse fails at {}", a));
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(format!("commutativity fails at ({}, {})", a, b));
                }
                for c in 0..q {
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(format!("distributivity fails at ({}, {}, {})", a, b, c));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("associativity fails at ({}, {}, {})", a, b, c));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A point of the projective line, normalized to `(x : 1)` or `(1 : 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ProjectivePoint {
    Infinity,
    Affine(u32),
}

impl ProjectivePoint {
    /// Normalizes homogeneous coordinates; `(0, 0)` is not a point.
    pub fn from_coordinates(f: &FiniteField, x: u32, y: u32) -> Option<Self> {
        match (x, y) {
            (0, 0) => None,
            (_, 0) => Some(ProjectivePoint::Infinity),
            _ => Some(ProjectivePoint::Affine(f.mul(x, f.inv(y).unwrap()))),
        }
    }

    pub fn coordinates(self) -> (u32, u32) {
        match self {
            ProjectivePoint::Infinity => (1, 0),
            ProjectivePoint::Affine(x) => (x, 1),
        }
    }

    /// `∞` is index 0; the affine point `x` is index `1 + x`.
    pub fn index(self) -> u32 {
        match self {
            ProjectivePoint::Infinity => 0,
            ProjectivePoint::Affine(x) => 1 + x,
        }
    }

    pub fn from_index(i: u32) -> Self {
        if i == 0 {
            ProjectivePoint::Infinity
        } else {
            ProjectivePoint::Affine(i - 1)
        }
    }

    /// All `q + 1` points in index order.
    pub fn all(f: &FiniteField) -> Vec<ProjectivePoint> {
        (0..=f.order()).map(ProjectivePoint::from_index).collect()
    }
}
