//! The iterated wreath products `W_0 ⩽ W_1 ⩽ … ⩽ W_n`, with `W_0 = C_2` and
//! `W_{β+1} = (W_β ⊕ W_β*) ⋊ ⟨σ_{β+1}⟩`.
//!
//! Everything lives on `2^{n+1}` points. `W_β` moves only the prefix
//! `[0, 2^{β+1})`, `σ_{β+1}` swaps that prefix with the next block of the same
//! size by translation, and `W_β* = σ_{β+1} W_β σ_{β+1}` is the copy on that block.

use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};

pub const MAX_WREATH_HEIGHT: usize = 4;

#[derive(Clone, Debug)]
pub struct WreathTower {
    pub n: usize,
    /// `W_0, …, W_n`; inclusions are literal since all share one domain.
    pub groups: Vec<PermGroup>,
    /// `sigma[β] = σ_{β+1}` for `β < n`.
    pub sigma: Vec<Permutation>,
    /// `starred[β] = W_β*` for `β < n`.
    pub starred: Vec<PermGroup>,
}

/// Swaps `[0, 2^{β+1})` with `[2^{β+1}, 2^{β+2})`.
fn block_swap(beta: usize, degree: usize) -> Permutation {
    let half = 1u32 << (beta + 1);
    let images = (0..degree as u32)
        .map(|x| {
            if x < half {
                x + half
            } else if x < 2 * half {
                x - half
            } else {
                x
            }
        })
        .collect();
    Permutation::from_images(images).expect("block swap is a bijection")
}

pub fn wreath_tower(n: usize) -> Result<WreathTower> {
    if !(1..=MAX_WREATH_HEIGHT).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "wreath tower height must be in 1..={}, got {}",
            MAX_WREATH_HEIGHT, n
        )));
    }
    let degree = 1usize << (n + 1);
    let w0 = PermGroup::new(
        degree,
        vec![Permutation::from_cycles(degree, &[vec![0, 1]])?],
    )?;
    let mut groups = vec![w0];
    let mut sigma = Vec::new();
    let mut starred = Vec::new();
    for beta in 0..n {
        let s = block_swap(beta, degree);
        let w = &groups[beta];
        let star = w.conjugate(&s);
        let mut gens = w.generators().to_vec();
        gens.extend(star.generators().iter().cloned());
        gens.push(s.clone());
        groups.push(PermGroup::new(degree, gens)?);
        sigma.push(s);
        starred.push(star);
    }
    Ok(WreathTower {
        n,
        groups,
        sigma,
        starred,
    })
}

impl WreathTower {
    pub fn degree(&self) -> usize {
        self.groups[0].degree()
    }

    pub fn top(&self) -> &PermGroup {
        &self.groups[self.n]
    }

    /// `|W_β| = 2^{2^{β+1} − 1}`.
    pub fn expected_order(beta: usize) -> u128 {
        1u128 << ((1u32 << (beta + 1)) - 1)
    }

    /// Checks the defining properties, returning a description of each violation.
    pub fn check(&self) -> Vec<String> {
        let mut violations = Vec::new();
        if self.groups[0].order() != 2 {
            violations.push("|W_0| ≠ 2".into());
        }
        for beta in 0..self.n {
            let (w, next, star, s) = (
                &self.groups[beta],
                &self.groups[beta + 1],
                &self.starred[beta],
                &self.sigma[beta],
            );
            if next.order() != 2 * w.order() * w.order() {
                violations.push(format!("|W_{}| ≠ 2|W_{}|²", beta + 1, beta));
            }
            if s.order() != 2 {
                violations.push(format!("σ_{} does not have order 2", beta + 1));
            }
            let swaps = w.generators().iter().all(|g| star.has(&g.conjugate_by(s)))
                && star.generators().iter().all(|g| w.has(&g.conjugate_by(s)));
            if !swaps {
                violations.push(format!("σ_{} does not swap W_{} and W_{}*", beta + 1, beta, beta));
            }
            let support = 1u32 << (beta + 1);
            let outside = w
                .generators()
                .iter()
                .any(|g| (support..self.degree() as u32).any(|x| g.apply(x) != x));
            if outside {
                violations.push(format!("W_{} moves points outside its prefix", beta));
            }
            if !w.commutes_elementwise(star) {
                violations.push(format!("W_{} and W_{}* do not commute", beta, beta));
            }
            if !w.is_subgroup_of(next) {
                violations.push(format!("W_{} is not inside W_{}", beta, beta + 1));
            }
        }
        violations
    }
}
