//! Permutations of `{0, .., n-1}` under the left-action convention:
//! `(p * q)(x) = p(q(x))`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Identity on `degree` points. Panics on degree 0.
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "permutations need at least one point");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree 0".into()));
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let x = x as usize;
            if x >= images.len() || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a bijection",
                    images
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree 0".into()));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let x_us = x as usize;
                if x_us >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} outside degree {}",
                        x, degree
                    )));
                }
                if touched[x_us] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears twice",
                        x
                    )));
                }
                touched[x_us] = true;
                images[x_us] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle text such as `"(0 1 2)(3 4)"`; `"()"` is the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self ∘ other`, checked.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self * other)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `g * self * g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // (g p g⁻¹)(g(x)) = g(p(x))
        let mut images = vec![0u32; self.images.len()];
        for x in 0..self.images.len() {
            images[g.images[x] as usize] = g.images[self.images[x] as usize];
        }
        Permutation { images }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(x, &px)| other.images[px as usize] == self.images[other.images[x] as usize])
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    /// Embeds into a larger degree, fixing the new points.
    pub fn extend(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Permutation { images }
    }

    /// Moves the support by `offset` into a permutation of `degree` points.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u32;
        }
        Permutation { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        Permutation {
            images: rhs.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.degree())
    }
}

/// Serialized as `{"degree": n, "cycles": "(0 1)(2 3)"}`.
impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Permutation", 2)?;
        st.serialize_field("degree", &self.degree())?;
        st.serialize_field("cycles", &self.to_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            degree: usize,
            cycles: String,
        }
        let raw = Raw::deserialize(d)?;
        Permutation::parse(raw.degree, &raw.cycles).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn parse_cycles(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut cycles = Vec::new();
    let mut current: Option<Vec<u32>> = None;
    let mut number = String::new();
    let flush = |number: &mut String, current: &mut Option<Vec<u32>>, at: usize| -> Result<()> {
        if number.is_empty() {
            return Ok(());
        }
        let value: u32 = number.parse().map_err(|_| Error::Parse {
            offset: at,
            message: format!("bad point {:?}", number),
        })?;
        number.clear();
        match current {
            Some(c) => {
                c.push(value);
                Ok(())
            }
            None => Err(Error::Parse {
                offset: at,
                message: "point outside a cycle".into(),
            }),
        }
    };
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => {
                if current.is_some() {
                    return Err(Error::Parse {
                        offset: i,
                        message: "nested '('".into(),
                    });
                }
                current = Some(Vec::new());
            }
            ')' => {
                flush(&mut number, &mut current, i)?;
                match current.take() {
                    Some(c) if c.len() > 1 => cycles.push(c),
                    Some(_) => {}
                    None => {
                        return Err(Error::Parse {
                            offset: i,
                            message: "unmatched ')'".into(),
                        })
                    }
                }
            }
            c if c.is_ascii_digit() => number.push(c),
            c if c.is_whitespace() || c == ',' => flush(&mut number, &mut current, i)?,
            other => {
                return Err(Error::Parse {
                    offset: i,
                    message: format!("unexpected character {:?}", other),
                })
            }
        }
    }
    if current.is_some() {
        return Err(Error::Parse {
            offset: text.len(),
            message: "unterminated cycle".into(),
        });
    }
    Ok(cycles)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
