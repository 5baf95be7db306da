//! Brute-force oracles. These share no code with the library's algorithms:
//! groups are handled as raw image vectors and multiplication tables.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use autotower::constructions::{cyclic, dihedral, direct_product, quaternion, sym};
use autotower::tables::{to_table, CayleyTable};
use autotower::PermGroup;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Images = Vec<u32>;

/// `(p∘q)(x) = p(q(x))`.
pub fn compose(p: &[u32], q: &[u32]) -> Images {
    q.iter().map(|&x| p[x as usize]).collect()
}

pub fn identity(n: usize) -> Images {
    (0..n as u32).collect()
}

pub fn random_images<R: Rng>(rng: &mut R, n: usize) -> Images {
    let mut v = identity(n);
    for i in (1..n).rev() {
        v.swap(i, rng.gen_range(0..=i));
    }
    v
}

/// Every product of generators, by breadth-first search.
pub fn closure(n: usize, gens: &[Images]) -> HashSet<Images> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity(n));
    queue.push_back(identity(n));
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(g, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Every permutation of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Images> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// A multiplication table with the identity at index 0, built by closure.
#[derive(Clone, Debug)]
pub struct Table {
    pub n: usize,
    pub mul: Vec<Vec<usize>>,
}

impl Table {
    pub fn from_elements(n_points: usize, gens: &[Images]) -> Table {
        let mut elems: Vec<Images> = closure(n_points, gens).into_iter().collect();
        elems.sort();
        let index: HashMap<Images, usize> =
            elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mul = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        Table { n: elems.len(), mul }
    }

    pub fn from_library(t: &CayleyTable) -> Table {
        let n = t.order();
        let mul = (0..n as u32)
            .map(|a| (0..n as u32).map(|b| t.mul(a, b) as usize).collect())
            .collect();
        Table { n, mul }
    }

    pub fn identity(&self) -> usize {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.mul[e][x] == x)).unwrap()
    }

    pub fn is_hom(&self, map: &[usize]) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| map[self.mul[a][b]] == self.mul[map[a]][map[b]]))
    }

    pub fn centre_size(&self) -> usize {
        (0..self.n)
            .filter(|&z| (0..self.n).all(|x| self.mul[z][x] == self.mul[x][z]))
            .count()
    }

    pub fn element_orders(&self) -> Vec<usize> {
        let e = self.identity();
        let mut v: Vec<usize> = (0..self.n)
            .map(|x| {
                let (mut y, mut k) = (x, 1);
                while y != e {
                    y = self.mul[y][x];
                    k += 1;
                }
                k
            })
            .collect();
        v.sort();
        v
    }

    /// The subgroup generated by `gens`, as a set of indices.
    pub fn span(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([self.identity()]);
        let mut queue = vec![self.identity()];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul[x][g];
                if seen.insert(y) {
                    queue.push(y);
                }
            }
        }
        seen
    }

    /// A generating set chosen greedily by the size of the span.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        while self.span(&gens).len() < self.n {
            let best = (0..self.n)
                .max_by_key(|&x| {
                    let mut g = gens.clone();
                    g.push(x);
                    (self.span(&g).len(), std::cmp::Reverse(x))
                })
                .unwrap();
            gens.push(best);
        }
        gens
    }
}

/// Automorphism count by filtering every bijection that fixes the identity.
pub fn aut_order_by_bijections(t: &Table) -> usize {
    let e = t.identity();
    let others: Vec<usize> = (0..t.n).filter(|&x| x != e).collect();
    all_permutations(others.len())
        .into_iter()
        .filter(|p| {
            let mut map = vec![e; t.n];
            for (i, &x) in others.iter().enumerate() {
                map[x] = others[p[i] as usize];
            }
            t.is_hom(&map)
        })
        .count()
}

/// Every automorphism, found by trying all images of a generating set.
pub fn automorphisms_by_generator_images(t: &Table) -> Vec<Vec<usize>> {
    let gens = t.small_generating_set();
    let e = t.identity();
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    loop {
        // Extend along words in the generators; reject on conflict.
        let mut map = vec![usize::MAX; t.n];
        map[e] = e;
        let mut queue = vec![e];
        let mut ok = true;
        while let Some(x) = queue.pop() {
            for (k, &g) in gens.iter().enumerate() {
                let y = t.mul[x][g];
                let fy = t.mul[map[x]][images[k]];
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push(y);
                } else if map[y] != fy {
                    ok = false;
                }
            }
        }
        if ok && t.is_hom(&map) && map.iter().collect::<HashSet<_>>().len() == t.n {
            out.push(map);
        }
        let mut k = 0;
        loop {
            if k == images.len() {
                out.sort();
                return out;
            }
            images[k] += 1;
            if images[k] < t.n {
                break;
            }
            images[k] = 0;
            k += 1;
        }
    }
}

/// The table of a group of maps under composition.
pub fn table_of_maps(maps: &[Vec<usize>]) -> Table {
    let gens: Vec<Images> = maps.iter().map(|m| m.iter().map(|&x| x as u32).collect()).collect();
    Table::from_elements(maps[0].len(), &gens)
}

/// Heights and orders of the automorphism tower, computed entirely by
/// generator-image enumeration. `None` if a level has a nontrivial centre.
pub fn oracle_tower(t: &Table, max_steps: usize) -> Option<(usize, Vec<usize>)> {
    let mut cur = t.clone();
    let mut orders = vec![cur.n];
    for step in 0..=max_steps {
        if cur.centre_size() != 1 {
            return None;
        }
        let autos = automorphisms_by_generator_images(&cur);
        if autos.len() == cur.n {
            return Some((step, orders));
        }
        cur = table_of_maps(&autos);
        orders.push(cur.n);
    }
    None
}

/// Graph automorphism count over all `n!` vertex permutations.
pub fn graph_aut_order_brute(n: usize, edges: &[(u32, u32)]) -> usize {
    let set: HashSet<(u32, u32)> = edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
    all_permutations(n)
        .into_iter()
        .filter(|p| edges.iter().all(|&(u, v)| set.contains(&(p[u as usize], p[v as usize]))))
        .count()
}

pub fn random_graph(rng: &mut ChaCha8Rng) -> (usize, Vec<(u32, u32)>) {
    let n = rng.gen_range(1..=8);
    let density: f64 = rng.gen_range(0.0..1.0);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    (n, edges)
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One representative of each isomorphism type of order at most 8.
pub fn groups_of_order_at_most_8() -> Vec<(&'static str, CayleyTable)> {
    let product = |a: PermGroup, b: PermGroup| to_table(&direct_product(&a, &b).group).unwrap();
    let c = |n| cyclic(n).unwrap();
    let mut out = vec![("C1", to_table(&PermGroup::trivial(1)).unwrap())];
    for (name, n) in [("C2", 2), ("C3", 3), ("C4", 4), ("C5", 5), ("C6", 6), ("C7", 7), ("C8", 8)] {
        out.push((name, to_table(&c(n)).unwrap()));
    }
    out.push(("C2 x C2", product(c(2), c(2))));
    out.push(("Sym(3)", to_table(&sym(3).unwrap()).unwrap()));
    out.push(("C4 x C2", product(c(4), c(2))));
    let c2c2 = direct_product(&c(2), &c(2)).group;
    out.push(("C2 x C2 x C2", product(c2c2, c(2))));
    out.push(("D8", to_table(&dihedral(4).unwrap()).unwrap()));
    out.push(("Q8", quaternion()));
    out
}

/// The known automorphism-group orders of the groups above, in the same order.
pub const KNOWN_AUT_ORDERS: [usize; 14] = [1, 1, 2, 2, 4, 2, 6, 4, 6, 6, 8, 168, 8, 24];

/// Dihedral group of order 10 on five points, as image vectors.
pub fn d10_generators() -> Vec<Images> {
    vec![vec![1, 2, 3, 4, 0], vec![0, 4, 3, 2, 1]]
}

/// Chain orders and membership against closure on random generator sets.
pub fn chain_vs_closure(count: usize, seed: u64) -> Vec<String> {
    use autotower::Permutation;
    let mut rng = seeded(seed);
    let mut problems = Vec::new();
    for trial in 0..count {
        let n = rng.gen_range(1..=8);
        let k = rng.gen_range(1..=3);
        let gens: Vec<Images> = (0..k).map(|_| random_images(&mut rng, n)).collect();
        let elems = closure(n, &gens);
        let perms = gens.iter().map(|g| Permutation::from_images(g.clone()).unwrap()).collect();
        let group = PermGroup::new(n, perms).unwrap();
        if group.order() != elems.len() as u128 {
            problems.push(format!("trial {}: chain {} vs closure {}", trial, group.order(), elems.len()));
        }
        let probe = random_images(&mut rng, n);
        let member = group.has(&Permutation::from_images(probe.clone()).unwrap());
        if member != elems.contains(&probe) {
            problems.push(format!("trial {}: membership of {:?} disagrees", trial, probe));
        }
    }
    problems
}

/// Automorphism-group orders against bijection filtering.
pub fn aut_vs_bijections() -> Vec<String> {
    use autotower::tables::automorphism_group;
    let mut problems = Vec::new();
    for ((name, t), known) in groups_of_order_at_most_8().into_iter().zip(KNOWN_AUT_ORDERS) {
        let lib = automorphism_group(&t).unwrap().order() as usize;
        let brute = aut_order_by_bijections(&Table::from_library(&t));
        if lib != brute || brute != known {
            problems.push(format!("{}: search {}, bijections {}, known {}", name, lib, brute, known));
        }
    }
    problems
}

/// Graph automorphism orders against all vertex permutations.
pub fn graphs_vs_brute(count: usize, seed: u64) -> Vec<String> {
    use autotower::graph::{graph_automorphisms, Graph};
    let mut rng = seeded(seed);
    let mut problems = Vec::new();
    for trial in 0..count {
        let (n, edges) = random_graph(&mut rng);
        let g = Graph::from_edges(n, &edges).unwrap();
        let lib = graph_automorphisms(&g).unwrap().order() as usize;
        let brute = graph_aut_order_brute(n, &edges);
        if lib != brute {
            problems.push(format!("trial {} ({} vertices, {:?}): search {}, brute {}", trial, n, edges, lib, brute));
        }
    }
    problems
}
