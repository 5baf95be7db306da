use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::tables::{AutGroup, CayleyTable, EnumeratedGroup, GroupHom, DEFAULT_NODE_BUDGET};

pub const DEFAULT_STEP_CAP: usize = 10;
pub const DEFAULT_SIZE_CAP: u128 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TowerCaps {
    /// Most `Aut` steps taken before stopping.
    pub step_cap: usize,
    /// Largest level order that is tabulated.
    pub size_cap: u128,
    /// Backtracking budget for each automorphism search.
    pub node_budget: u64,
}

impl Default for TowerCaps {
    fn default() -> Self {
        TowerCaps {
            step_cap: DEFAULT_STEP_CAP,
            size_cap: DEFAULT_SIZE_CAP,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    CompleteLevel,
    SizeCap,
    StepCap,
}

/// One level `G_α`: a permutation representation, its table, and `Aut G_α`.
#[derive(Clone)]
pub struct TowerLevel {
    pub enumerated: EnumeratedGroup,
    pub aut: AutGroup,
}

impl TowerLevel {
    pub fn table(&self) -> &CayleyTable {
        self.enumerated.table()
    }

    pub fn group(&self) -> &PermGroup {
        self.enumerated.group()
    }
}

/// `G = G_0 ⊴ G_1 ⊴ …` with `G_{α+1} = Aut G_α`.
#[derive(Clone)]
pub struct AutTowerRecord {
    pub levels: Vec<TowerLevel>,
    /// `embeddings[α]: G_α → G_{α+1}`, `g ↦ i_g`.
    pub embeddings: Vec<GroupHom>,
    /// The height when complete, otherwise a lower bound.
    pub tau: usize,
    pub termination: Termination,
    /// Order of the first level that was not tabulated, on a size-cap stop.
    pub untabulated_order: Option<u128>,
}

pub fn automorphism_tower(g: &PermGroup, caps: TowerCaps) -> Result<AutTowerRecord> {
    let first = EnumeratedGroup::new(g, caps.size_cap)?;
    let centre = first.table().center().len();
    if centre != 1 {
        return Err(Error::NontrivialCentre { order: centre });
    }
    let mut levels: Vec<TowerLevel> = Vec::new();
    let mut embeddings = Vec::new();
    let mut enumerated = first;
    loop {
        let aut = AutGroup::compute(Arc::new(enumerated.table().clone()), caps.node_budget)?;
        let complete = aut.is_complete();
        let next_order = aut.order();
        levels.push(TowerLevel { enumerated, aut });
        let alpha = levels.len() - 1;
        if complete {
            return Ok(AutTowerRecord {
                levels,
                embeddings,
                tau: alpha,
                termination: Termination::CompleteLevel,
                untabulated_order: None,
            });
        }
        let stop = if alpha + 1 > caps.step_cap {
            Some(Termination::StepCap)
        } else if next_order > caps.size_cap {
            Some(Termination::SizeCap)
        } else {
            None
        };
        if let Some(termination) = stop {
            return Ok(AutTowerRecord {
                levels,
                embeddings,
                tau: alpha + 1,
                termination,
                untabulated_order: Some(next_order),
            });
        }
        let level = &levels[alpha];
        let next = EnumeratedGroup::new(&level.aut.autos, caps.size_cap)?;
        let map = (0..level.table().order() as u32)
            .map(|x| {
                next.index_of(&level.aut.inn(x))
                    .expect("inner automorphisms lie in Aut")
            })
            .collect();
        embeddings.push(GroupHom::new(level.table(), next.table(), map)?);
        enumerated = next;
    }
}

/// What the tower looks like at one level, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSummary {
    pub order: u64,
    pub degree: usize,
    pub centreless: Option<bool>,
    pub complete: Option<bool>,
}

impl AutTowerRecord {
    pub fn is_complete(&self) -> bool {
        self.termination == Termination::CompleteLevel
    }

    pub fn orders(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.table().order() as u64).collect()
    }

    pub fn summaries(&self) -> Vec<LevelSummary> {
        self.levels
            .iter()
            .map(|l| LevelSummary {
                order: l.table().order() as u64,
                degree: l.group().degree(),
                centreless: Some(l.table().is_centreless()),
                complete: Some(l.aut.is_complete()),
            })
            .collect()
    }

    /// Checks every computed level, returning a description of each violation:
    /// centreless levels, `Inn ⊴ Aut`, `C_Aut(Inn) = 1`, injective embeddings
    /// and their composites, and the automorphism-group invariants.
    pub fn check_invariants<R: Rng + ?Sized>(&self, rng: &mut R, samples: usize) -> Vec<String> {
        let mut violations = Vec::new();
        for (alpha, level) in self.levels.iter().enumerate() {
            let tag = |s: String| format!("level {}: {}", alpha, s);
            if !level.table().is_centreless() {
                violations.push(tag("not centreless".into()));
            }
            violations.extend(level.aut.check_invariants(rng, samples).into_iter().map(tag));
            match level.aut.autos.centralizer(&level.aut.inner) {
                Ok(c) if c.is_trivial() => {}
                Ok(c) => violations.push(tag(format!("C_Aut(Inn) has order {}", c.order()))),
                Err(e) => violations.push(tag(format!("C_Aut(Inn) not computed: {}", e))),
            }
        }
        for (alpha, e) in self.embeddings.iter().enumerate() {
            let (s, t) = (self.levels[alpha].table(), self.levels[alpha + 1].table());
            if !e.injective || !e.verify(s, t) {
                violations.push(format!("embedding {} → {} is not an injective homomorphism", alpha, alpha + 1));
            }
            let image: Vec<u32> = {
                let mut v = e.map.clone();
                v.sort_unstable();
                v.dedup();
                v
            };
            let inner_order = self.levels[alpha].aut.inner.order();
            if image.len() as u128 != inner_order {
                violations.push(format!("embedding {} image differs in size from Inn", alpha));
            }
        }
        let mut composite: Option<GroupHom> = None;
        for (alpha, e) in self.embeddings.iter().enumerate() {
            composite = Some(match composite {
                None => e.clone(),
                Some(c) => e.after(&c),
            });
            if !composite.as_ref().unwrap().injective {
                violations.push(format!("composite embedding G_0 → G_{} is not injective", alpha + 1));
            }
        }
        violations
    }
}
