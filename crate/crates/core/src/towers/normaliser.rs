use crate::error::Result;
use crate::group::PermGroup;

/// `H = N_0 ⩽ N_1 ⩽ …` with `N_{α+1} = N_G(N_α)`, up to the first fixpoint.
#[derive(Clone, Debug)]
pub struct NormaliserTowerRecord {
    pub ambient: PermGroup,
    pub levels: Vec<PermGroup>,
    pub height: usize,
    pub terminated_at_full: bool,
}

pub fn normaliser_tower(h: &PermGroup, g: &PermGroup) -> Result<NormaliserTowerRecord> {
    g.require_subgroup(h, "normaliser tower")?;
    let mut levels = vec![h.clone()];
    loop {
        let current = levels.last().unwrap();
        let next = g.normalizer(current)?;
        if next.order() == current.order() {
            break;
        }
        levels.push(next);
    }
    let height = levels.len() - 1;
    let terminated_at_full = levels[height].order() == g.order();
    Ok(NormaliserTowerRecord {
        ambient: g.clone(),
        levels,
        height,
        terminated_at_full,
    })
}

impl NormaliserTowerRecord {
    pub fn orders(&self) -> Vec<u128> {
        self.levels.iter().map(|l| l.order()).collect()
    }

    /// Checks the record's structural invariants.
    pub fn check(&self) -> Vec<String> {
        let mut violations = Vec::new();
        for (a, pair) in self.levels.windows(2).enumerate() {
            if pair[0].order() >= pair[1].order() || !pair[0].is_normal_in(&pair[1]) {
                violations.push(format!("level {} is not a proper normal subgroup of the next", a));
            }
        }
        if self.levels.iter().any(|l| !l.is_subgroup_of(&self.ambient)) {
            violations.push("a level leaves the ambient group".into());
        }
        let top = &self.levels[self.height];
        match self.ambient.normalizer(top) {
            Ok(n) if n.order() == top.order() => {}
            Ok(_) => violations.push("last level is not a normaliser fixpoint".into()),
            Err(e) => violations.push(format!("could not recheck the fixpoint: {}", e)),
        }
        let bound = (self.ambient.order() as f64).log2().floor() as usize + 1;
        if self.height > bound {
            violations.push(format!("height {} exceeds log2|G| + 1 = {}", self.height, bound));
        }
        violations
    }
}
