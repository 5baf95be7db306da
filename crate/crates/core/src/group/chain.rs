//! Base and strong generating set, built by incremental Schreier–Sims.

use std::collections::HashSet;

use super::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: u32,
    /// Indices into `StabChain::strong` of generators fixing all earlier base points.
    pub gens: Vec<usize>,
    pub orbit: Vec<u32>,
    /// `reps[x]` maps the base point to `x`.
    pub reps: Vec<Option<Permutation>>,
    pub inv_reps: Vec<Option<Permutation>>,
    checked: HashSet<(u32, usize)>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut reps = vec![None; degree];
        let mut inv_reps = vec![None; degree];
        reps[base as usize] = Some(Permutation::identity(degree));
        inv_reps[base as usize] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            reps,
            inv_reps,
            checked: HashSet::new(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain {
            degree,
            strong: Vec::new(),
            levels: Vec::new(),
        }
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product()
    }

    /// Strips `g` through the levels starting at `from`. Returns the residue and
    /// the level where sifting stopped (`levels.len()` if it passed them all).
    pub fn sift(&self, from: usize, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let y = h.apply(level.base);
            match &level.inv_reps[y as usize] {
                Some(u_inv) => h = u_inv * &h,
                None => return (h, i),
            }
        }
        let n = self.levels.len();
        (h, n)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        // Sift without cloning until a mismatch is found.
        let (res, level) = self.sift(0, g);
        level == self.levels.len() && res.is_identity()
    }

    /// Adds `g` to the group; returns false if it was already a member.
    pub fn extend(&mut self, g: &Permutation) -> bool {
        let (res, drop) = self.sift(0, g);
        if drop == self.levels.len() && res.is_identity() {
            return false;
        }
        self.insert(res, drop);
        self.close();
        true
    }

    fn fixes_prefix(&self, g: &Permutation, len: usize) -> bool {
        self.levels[..len].iter().all(|l| g.apply(l.base) == l.base)
    }

    /// `r` fixes the first `drop` base points and is not in level `drop`'s group.
    fn insert(&mut self, r: Permutation, drop: usize) {
        let id = self.strong.len();
        if drop == self.levels.len() {
            let base = r
                .first_moved()
                .expect("a nontrivial residue moves some point");
            self.levels.push(Level::new(base, self.degree));
            // Older generators that also fix the new base point belong to the new level.
            let new_level = self.levels.len() - 1;
            for (gid, g) in self.strong.iter().enumerate() {
                if self.levels[..=new_level]
                    .iter()
                    .all(|l| g.apply(l.base) == l.base)
                {
                    self.levels[new_level].gens.push(gid);
                }
            }
            self.extend_orbit(new_level);
        }
        self.strong.push(r);
        for i in 0..self.levels.len() {
            if self.fixes_prefix(&self.strong[id], i) {
                self.levels[i].gens.push(id);
                self.extend_orbit(i);
            } else {
                break;
            }
        }
    }

    fn extend_orbit(&mut self, i: usize) {
        let StabChain { strong, levels, .. } = self;
        let level = &mut levels[i];
        let mut k = 0;
        while k < level.orbit.len() {
            let x = level.orbit[k];
            for &gid in &level.gens {
                let s = &strong[gid];
                let y = s.apply(x);
                if level.reps[y as usize].is_none() {
                    let rep = s * level.reps[x as usize].as_ref().unwrap();
                    level.inv_reps[y as usize] = Some(rep.inverse());
                    level.reps[y as usize] = Some(rep);
                    level.orbit.push(y);
                }
            }
            k += 1;
        }
    }

    fn next_unchecked(&self, i: usize) -> Option<(u32, usize)> {
        let level = &self.levels[i];
        for &x in &level.orbit {
            for &gid in &level.gens {
                if !level.checked.contains(&(x, gid)) {
                    return Some((x, gid));
                }
            }
        }
        None
    }

    fn close(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            match self.next_unchecked(lvl) {
                None => i -= 1,
                Some((x, gid)) => {
                    self.levels[lvl].checked.insert((x, gid));
                    let level = &self.levels[lvl];
                    let s = &self.strong[gid];
                    let y = s.apply(x);
                    let schreier = &(level.inv_reps[y as usize].as_ref().unwrap() * s)
                        * level.reps[x as usize].as_ref().unwrap();
                    let (res, drop) = self.sift(lvl + 1, &schreier);
                    if !(drop == self.levels.len() && res.is_identity()) {
                        self.insert(res, drop);
                        i = drop.min(self.levels.len() - 1) as isize;
                    }
                }
            }
        }
    }

    /// Visits every element exactly once, identity first.
    pub fn for_each_element<F: FnMut(&Permutation) -> bool>(&self, mut f: F) {
        let id = Permutation::identity(self.degree);
        self.walk(0, &id, &mut f);
    }

    fn walk<F: FnMut(&Permutation) -> bool>(
        &self,
        depth: usize,
        prefix: &Permutation,
        f: &mut F,
    ) -> bool {
        if depth == self.levels.len() {
            return f(prefix);
        }
        let level = &self.levels[depth];
        for &x in &level.orbit {
            let rep = level.reps[x as usize].as_ref().unwrap();
            let next = prefix * rep;
            if !self.walk(depth + 1, &next, f) {
                return false;
            }
        }
        true
    }
}
